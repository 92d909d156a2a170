"""Re-measure the pinned regression values in tests/baselines.json (``--write`` to overwrite it)."""
import argparse
import json
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE.parent / "tests"))

from ollg.diagnostics import monotonicity_audit, struwe_ratio  # noqa: E402
from ollg.grid import GridSpec  # noqa: E402
from ollg.littlewood_paley import bernstein_audit, build_partition  # noqa: E402
from test_acceptance import heat_flow_bump  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--write", action="store_true")
    args = ap.parse_args()

    out = {"bernstein_d0_2_inf_n64": bernstein_audit(build_partition(GridSpec(64)), 10, seed=0)["d0_2_inf"]}
    for N in (64, 128):
        grid, K, traj = heat_flow_bump(N)
        out[f"monotonicity_C0_n{N}"] = monotonicity_audit(grid, traj, K, grid.length / 16, stride=N // 32).C0_empirical
        if N == 64:
            out["struwe_ratio_heat_flow_n64"] = struwe_ratio(grid, traj, grid.length / 16)
    text = json.dumps(out, indent=2, sort_keys=True) + "\n"
    print(text, end="")
    if args.write:
        (HERE.parent / "tests" / "baselines.json").write_text(text)


if __name__ == "__main__":
    main()
