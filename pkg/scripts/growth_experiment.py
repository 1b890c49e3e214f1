"""Incidences per point of the digit-reversal construction as b = k grows.

Writes the same CSV as ``boxzar experiment growth --b-equals-k``.
"""

import argparse
import sys

from boxzar.cli import main


def parse_args():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--out", help="CSV path (default stdout)")
    p.add_argument("--budget-nodes", type=int, default=10**7)
    return p.parse_args()


if __name__ == "__main__":
    args = parse_args()
    argv = ["experiment", "growth", "--b-equals-k", "--k-max", str(args.k_max), "--t", str(args.t),
            "--budget-nodes", str(args.budget_nodes)]
    if args.out:
        argv += ["--out", args.out]
    sys.exit(main(argv))
