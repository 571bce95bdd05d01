#!/usr/bin/env python3
"""Sweep the moment-bound growth across dimensions for a grid of p values.

Each p in (1, 2] gets its own CSV plus a one-line slope report; the certified
bound and the sharp Gaussian product should both grow like d^p.

Usage: python scripts/run_lp_growth.py [--p-list 1.25,1.5,1.75,2.0]
"""

import argparse
from pathlib import Path

from uplab import harness


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p-list", type=str, default="1.25,1.5,1.75,2.0")
    parser.add_argument("--d-max", type=int, default=500)
    parser.add_argument("--out-dir", type=Path, default=Path("results"))
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    for p_text in args.p_list.split(","):
        p = float(p_text)
        rows = harness.lp_sweep(p, args.d_max)
        summary = harness.lp_summary(rows, p)
        harness.write_sweep_csv(rows, args.out_dir / f"lp_sweep_p{p_text}.csv")
        print(
            f"p={p}: slope_method={summary['slope_method']:.4f} "
            f"slope_gaussian={summary['slope_gaussian']:.4f} pass={summary['pass']}"
        )


if __name__ == "__main__":
    main()
