"""Largest local energy over time for a shrinking bubble, with the concentration events it triggers."""
import argparse
import math

from ollg.config import load_config
from ollg.diagnostics import concentration_scan, local_energy_map
from ollg.dynamics import run
from ollg.initial import generate_initial


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("config", nargs="?", default="scripts/configs/bubble_concentration.cfg")
    args = ap.parse_args()

    cfg = load_config(args.config)
    grid, d = cfg.grid, cfg.diagnostics
    R, stride = d.radius(grid), d.center_stride(grid)
    traj = run(grid, generate_initial(cfg.initial, grid), cfg.solver, cfg.frank, cfg.gilbert)
    print(f"R = {R:.4f} ({R / grid.spacing:.1f} dx), eps0 = {d.epsilon0:.4f}")
    for s in traj.states:
        mp = local_energy_map(grid, s.n, R, stride)
        x, y = mp.argmax
        print(f"t = {s.time:.4f}  max E_R = {mp.max_value:8.4f}  at ({x:.3f}, {y:.3f})")
    for ev in concentration_scan(grid, traj, d.epsilon0, R, stride):
        print(f"event: t = {ev.t:.4f}, E_R = {ev.E_R:.4f}, location {tuple(round(v, 4) for v in ev.location)}")
    if traj.flagged:
        print(f"flagged at t = {traj.blowup.time:.4g}: {traj.blowup.reason}")


if __name__ == "__main__":
    main()
