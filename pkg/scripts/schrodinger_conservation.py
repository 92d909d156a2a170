"""Energy drift of the Schroedinger limit (alpha = 0) after a fixed number of RK4 steps."""
import argparse

from ollg.dynamics import SolverConfig, cfl_limit, run
from ollg.frank import FrankConstants, GilbertParams, total_energy
from ollg.grid import GridSpec
from ollg.initial import InitialDatum, generate_initial


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=64)
    ap.add_argument("--steps", type=int, default=1000)
    ap.add_argument("--modes", type=int, default=5, help="correlation modes of the random datum")
    ap.add_argument("--safety", type=float, default=1.0)
    ap.add_argument("--levels", type=int, default=3)
    args = ap.parse_args()

    grid = GridSpec(args.n)
    K = FrankConstants(1.0, 1.0, 1.0)
    g = GilbertParams(0.0, 1.0)
    n0 = generate_initial(InitialDatum(kind="random_smooth", amplitude=0.5, correlation_modes=args.modes), grid)
    E0 = total_energy(grid, n0, K).total
    dt0 = cfl_limit(grid, K, args.safety)
    prev = None
    for level in range(args.levels):
        cfg = SolverConfig(dt=dt0 / 2**level, t_end=args.steps * dt0, cfl_safety=args.safety,
                           output_stride=10**9)
        n = run(grid, n0, cfg, K, g).states[-1].n
        err = abs(total_energy(grid, n, K).total - E0) / E0
        print(f"dt = {cfg.dt:.4e}  |E - E0|/E0 = {err:.3e}" + (f"  ratio {prev / err:.1f}" if prev else ""))
        prev = err


if __name__ == "__main__":
    main()
