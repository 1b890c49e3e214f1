"""Ground truth by exhaustion.

``naive_count`` and ``naive_find_biclique`` recompute from the definitions
with :func:`box_intersect` on exact rationals and share no code with the
bitset engine.  ``zarankiewicz_bruteforce`` maximises the hyperedge count over
every family whose endpoints lie on a small integer grid.

Discretisation: applying a strictly increasing map to one coordinate of every
box leaves the intersection hypergraph unchanged, so any family is equivalent
to one whose endpoints are replaced by their ranks.  A family with N boxes has
at most 2N distinct endpoint values per axis, so a grid of ``2 * sum(n)``
points reaches every order type.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from math import comb, prod
from typing import Sequence

from .directions import DirectionVector
from .errors import PreconditionError
from .family import BoxFamily
from .geometry import Box, box_intersect

NAIVE_COUNT_LIMIT = 10**4
NAIVE_BICLIQUE_MAX_PART = 8
NAIVE_BICLIQUE_MAX_T = 3


def _parts(fam):
    return [list(p) for p in (fam.parts if hasattr(fam, "parts") else fam)]


def naive_count(fam) -> int:
    parts = _parts(fam)
    if any(not p for p in parts):
        return 0
    if prod(len(p) for p in parts) > NAIVE_COUNT_LIMIT:
        raise PreconditionError(f"naive count limited to {NAIVE_COUNT_LIMIT} transversals")
    return sum(1 for tr in product(*parts) if box_intersect(tr) is not None)


def naive_edge_set(fam) -> frozenset[tuple[int, ...]]:
    parts = _parts(fam)
    if prod(len(p) for p in parts) > NAIVE_COUNT_LIMIT:
        raise PreconditionError(f"naive edge listing limited to {NAIVE_COUNT_LIMIT} transversals")
    return frozenset(
        idx for idx in product(*(range(len(p)) for p in parts))
        if box_intersect([parts[j][a] for j, a in enumerate(idx)]) is not None
    )


def naive_find_biclique(fam, t: int, sizes: Sequence[int] | None = None):
    """All t-subsets per part, every transversal tested for a common point."""
    parts = _parts(fam)
    need = list(sizes) if sizes is not None else [t] * len(parts)
    if max(need) > NAIVE_BICLIQUE_MAX_T or any(len(p) > NAIVE_BICLIQUE_MAX_PART for p in parts):
        raise PreconditionError("naive biclique search limited to parts <= 8 and t <= 3")
    if any(len(p) < k for p, k in zip(parts, need)):
        return None
    choices = [list(combinations(range(len(p)), k)) for p, k in zip(parts, need)]
    for pick in product(*choices):
        if all(
            box_intersect([parts[j][a] for j, a in enumerate(tr)]) is not None
            for tr in product(*pick)
        ):
            return tuple(pick)
    return None


@dataclass(frozen=True)
class OracleResult:
    z_value: int
    witness_family: BoxFamily | None
    search_space_size: int
    exhausted: bool
    evaluated: int = 0


def _grid_boxes(F_j: frozenset[int], d: int, grid: int) -> list[tuple[tuple[int, int], ...]]:
    per_axis = []
    for axis in range(1, d + 1):
        if axis in F_j:
            per_axis.append([(lo, hi) for lo, hi in combinations(range(grid), 2)])
        else:
            per_axis.append([(v, v) for v in range(grid)])
    return list(product(*per_axis))


def _meets(a, b) -> bool:
    return all(x[0] <= y[1] and y[0] <= x[1] for x, y in zip(a, b))


def _rank_normal(boxes, d: int) -> bool:
    """Each axis uses exactly the values 0..m-1 for some m."""
    for axis in range(d):
        used = set()
        for b in boxes:
            used.add(b[axis][0])
            used.add(b[axis][1])
        if max(used) != len(used) - 1:
            return False
    return True


def zarankiewicz_bruteforce(
    F: DirectionVector,
    n_vec: Sequence[int],
    t: int,
    grid_points: int | None = None,
    budget: int = 2 * 10**6,
    prune: bool = True,
) -> OracleResult:
    """Maximum hyperedge count over K_{t,...,t}-free grid families.

    With ``prune`` only rank-normal families are evaluated (one representative
    per order type up to gaps); the unpruned search gives the same maximum.
    When the search space exceeds ``budget`` the best value found so far is
    returned with ``exhausted=False``.
    """
    n_vec = list(n_vec)
    if len(n_vec) != F.r or any(n < 1 for n in n_vec):
        raise PreconditionError("n_vec must give a positive size for each part")
    if t < 2:
        raise PreconditionError("t must be at least 2")
    d = F.dimension
    grid = grid_points if grid_points is not None else 2 * sum(n_vec)
    cands = [_grid_boxes(Fj, d, grid) for Fj in F.sets]
    space = prod(comb(len(c) + n - 1, n) for c, n in zip(cands, n_vec))

    # Intersection table between candidate boxes of different parts.
    r = F.r
    meet = {}
    for i in range(r):
        for j in range(i + 1, r):
            meet[(i, j)] = [[_meets(a, b) for b in cands[j]] for a in cands[i]]

    def ok_transversal(tr) -> bool:
        return all(meet[(i, j)][tr[i]][tr[j]] for i in range(r) for j in range(i + 1, r))

    def has_biclique(fam_idx) -> bool:
        if any(len(p) < t for p in fam_idx):
            return False
        for pick in product(*(combinations(p, t) for p in fam_idx)):
            if all(
                meet[(i, j)][a][b]
                for i in range(r) for j in range(i + 1, r)
                for a in pick[i] for b in pick[j]
            ):
                return True
        return False

    multisets = [list(combinations_with_replacement(range(len(c)), n)) for c, n in zip(cands, n_vec)]
    best = -1
    best_idx = None
    evaluated = 0
    visited = 0
    exhausted = True
    for fam_idx in product(*multisets):
        visited += 1
        if visited > budget:
            exhausted = False
            break
        if prune and not _rank_normal([cands[j][a] for j, p in enumerate(fam_idx) for a in p], d):
            continue
        evaluated += 1
        edges = sum(1 for tr in product(*fam_idx) if ok_transversal(tr))
        if edges <= best:
            continue
        if has_biclique(fam_idx):
            continue
        best = edges
        best_idx = fam_idx

    witness = None
    if best_idx is not None:
        witness = BoxFamily(F, tuple(
            tuple(Box.from_pairs(cands[j][a]) for a in p) for j, p in enumerate(best_idx)
        ))
    return OracleResult(max(best, 0), witness, space, exhausted, evaluated)
