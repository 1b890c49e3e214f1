"""Random sweeps of every explicit inequality; prints one summary line per formula.

Exits 1 if any instance violates its bound (counterexamples go to --out).
"""

import argparse
import sys
import time

from boxzar.bounds import Formula
from boxzar.cli import decimal6
from boxzar.sweeps import run_default_sweep


def parse_args():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--samples", type=int, default=1600)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="counterexamples")
    p.add_argument("--formula", action="append", choices=[f.value for f in Formula])
    return p.parse_args()


def main():
    args = parse_args()
    formulas = [Formula(f) for f in args.formula] if args.formula else list(Formula)
    failed = False
    print("formula,checked,rejected,inconclusive,violations,max_ratio,seconds")
    for f in formulas:
        start = time.perf_counter()
        s = run_default_sweep(f, samples=args.samples, seed=args.seed, counterexample_dir=args.out)
        failed |= bool(s.violations)
        print(f"{f.value},{len(s.reports)},{s.rejected},{s.inconclusive},{len(s.violations)},"
              f"{decimal6(s.max_ratio)},{time.perf_counter() - start:.2f}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
