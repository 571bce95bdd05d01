#!/usr/bin/env python3
"""Run the full quadratic-floor dimension sweep and write CSV + JSON outputs.

Usage: python scripts/run_heisenberg.py [--d-max 500] [--out-dir results]
"""

import argparse
from pathlib import Path

from uplab import harness


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--d-max", type=int, default=500)
    parser.add_argument("--out-dir", type=Path, default=Path("results"))
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    rows = harness.heisenberg_sweep(args.d_max)
    summary = harness.heisenberg_summary(rows)
    harness.write_sweep_csv(rows, args.out_dir / "heisenberg_sweep.csv")
    harness.write_summary_json(summary, args.out_dir / "heisenberg_summary.json")
    print(
        f"wrote {len(rows)} rows; d0={summary['d0']} "
        f"slope={summary['slope']:.4f} pass={summary['pass']}"
    )


if __name__ == "__main__":
    main()
