"""Diagonal slicing of the 6/4/2 rectangle configuration, one row per anchor."""

import argparse
import random

from boxzar.hypergraph import find_biclique
from boxzar.random_families import random_restricted
from boxzar.reductions import slice_restricted
from boxzar.samples import illustration_family


def parse_args():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--random", type=int, default=0, help="also slice this many random restricted families")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--t", type=int, default=2)
    return p.parse_args()


def report(fam, t):
    dec = slice_restricted(fam)
    print("anchor,S,T,edges,has_Ktt")
    for sl in dec.slices:
        hit = find_biclique(sl.instance, t) is not None
        print(f"\"{sl.anchor}\",{len(sl.horizontals)},{len(sl.verticals)},{sl.edge_count()},{hit}")
    c = dec.checks
    print(f"# anchors={c['anchors']} (bound {c['anchor_bound']}), sum T={c['sum_T']} (n1*n2={c['prod_n']}), "
          f"sum e={c['sum_edges']} (e(H)={c['edges']})")


if __name__ == "__main__":
    args = parse_args()
    report(illustration_family(), args.t)
    rng = random.Random(args.seed)
    for _ in range(args.random):
        sizes = [rng.randint(1, 6) for _ in range(3)]
        report(random_restricted(rng, 3, sizes), args.t)
