#!/usr/bin/env python3
"""Classify a batch of weighted-norm tuples and verify each branch of the
trichotomy (feasible / endpoint / violated).

Usage: python scripts/run_cowling_price.py [--out-dir results]
"""

import argparse
import json
import warnings
from pathlib import Path

from uplab import harness

TUPLES = [
    (1, 2.0, 2.0, 1.0, 1.0),
    (2, 2.0, 2.0, 1.5, 1.5),
    (3, 2.0, 2.0, 2.0, 2.0),
    (1, 4.0, 2.0, 0.5, 0.25),
    (1, 4.0, 4.0, 0.25, 0.25),
    (2, 4.0, 4.0, 0.5, 0.5),
    (2, 8.0, 8.0, 0.1, 0.1),
    (1, 6.0, 6.0, 0.25, 0.25),
]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out-dir", type=Path, default=Path("results"))
    args = parser.parse_args()

    args.out_dir.mkdir(parents=True, exist_ok=True)
    records = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for d, p, q, theta, phi in TUPLES:
            report = harness.cp_check(d, p, q, theta, phi, seed=args.seed)
            records.append(
                {
                    "d": d, "p": p, "q": q, "theta": theta, "phi": phi,
                    "classification": report.classification,
                    "pass": report.passed,
                }
            )
            print(
                f"d={d} p={p} q={q} theta={theta} phi={phi}: "
                f"{report.classification} (verified={report.passed})"
            )
    out = args.out_dir / "cowling_price.json"
    out.write_text(json.dumps(records, indent=2) + "\n")


if __name__ == "__main__":
    main()
