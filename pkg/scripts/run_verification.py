#!/usr/bin/env python3
"""Run every verification suite over a range of variable counts.

Writes one JSON report per (suite, n) under reports/ and prints a summary
table.  Exit code 1 if anything failed.

Usage:
    python scripts/run_verification.py [--max-weight W] [--n-max N] [--seed S]
"""

import argparse
import json
import pathlib
import sys
import time

from symfact import verify


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-weight", type=int, default=4)
    parser.add_argument("--n-max", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default="reports")
    args = parser.parse_args()

    outdir = pathlib.Path(args.out)
    outdir.mkdir(exist_ok=True)
    all_passed = True
    for n in range(2, args.n_max + 1):
        for suite in verify.SUITES[:-1]:
            start = time.time()
            report = verify.run_suite(suite, max_weight=args.max_weight, n=n, seed=args.seed)
            elapsed = time.time() - start
            path = outdir / f"{suite}_n{n}.json"
            path.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
            counts = report["counts"]
            flag = "ok " if report["passed"] else "FAIL"
            all_passed &= report["passed"]
            print(
                f"{flag} {suite:12s} n={n} "
                f"{counts['total'] - counts['failed']:4d}/{counts['total']:<4d} checks "
                f"({elapsed:5.1f}s) -> {path}"
            )
    return 0 if all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
