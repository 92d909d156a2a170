"""Distance between mollified and unmollified trajectories as the cutoff grows."""
import argparse
import math

from ollg.dynamics import SolverConfig, cfl_limit, run
from ollg.frank import FrankConstants, GilbertParams
from ollg.grid import GridSpec
from ollg.initial import InitialDatum, generate_initial


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=64)
    ap.add_argument("--steps", type=int, default=400)
    args = ap.parse_args()

    grid = GridSpec(args.n)
    K = FrankConstants(1.0, 2.0, 3.0)
    g = GilbertParams(0.6, 0.8)
    n0 = generate_initial(InitialDatum(kind="random_smooth", amplitude=0.5, seed=5), grid)
    dt = cfl_limit(grid, K)

    def final(cutoff):
        cfg = SolverConfig(dt=dt, t_end=args.steps * dt, output_stride=args.steps, friedrich_cutoff=cutoff,
                           rhs_form="projected", renormalize_every=0)
        return run(grid, n0, cfg, K, g).states[-1].n

    ref = final(None)
    for frac in (1 / 16, 1 / 8, 1 / 4, 1 / 2, 1, 2):
        n = final(frac * grid.k_max)
        rel = math.sqrt(grid.l2_sq(n - ref) / grid.l2_sq(ref))
        print(f"cutoff = {frac:6.4g} k_max   relative L2 distance {rel:.3e}")


if __name__ == "__main__":
    main()
