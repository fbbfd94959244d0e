#!/usr/bin/env python3
"""Adjudicate the prefactor convention of the Q-operator integral.

The integral representation can be normalized with (z-1)^(n-1) either as a
numerator or as a denominator factor.  For a sweep of (partition, bounds, z)
triples this script evaluates the integral under both conventions, compares
each against the exact spectral value, and reports which convention wins.

Usage:
    python scripts/prefactor_study.py [--n 2|3] [--max-weight W]
"""

import argparse
import json
import sys
from fractions import Fraction

from symfact import quadcheck as qc
from symfact.bases import schur_poly
from symfact.partitions import enumerate_partitions


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=2, choices=(2, 3))
    parser.add_argument("--max-weight", type=int, default=4)
    args = parser.parse_args()

    n = args.n
    ys = (
        [tuple(Fraction(i + 1) for i in range(n)), tuple(Fraction(2 * i + 1, 1) for i in range(n))]
    )
    zs = [Fraction(3, 2), Fraction(7, 4), Fraction(12, 5)]
    rows = []
    conventions = set()
    for lam in enumerate_partitions(args.max_weight, n):
        for y in ys:
            for z in zs:
                adj = qc.integral_q(schur_poly(lam).normalized, z, y)
                conventions.add(adj.convention)
                rows.append(
                    {
                        "lambda": list(lam.parts),
                        "y": [str(v) for v in y],
                        "z": str(z),
                        "oracle": str(adj.oracle),
                        "denominator": adj.denominator.value,
                        "numerator": adj.numerator.value,
                        "convention": adj.convention,
                    }
                )
    print(json.dumps({"n": n, "triples": len(rows), "rows": rows}, indent=2))
    print(f"# conventions seen: {sorted(conventions)}", file=sys.stderr)
    if conventions == {"denominator"}:
        print("# verdict: the (z-1)^(n-1) factor belongs in the denominator", file=sys.stderr)
        return 0
    print("# verdict: inconsistent adjudication", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
