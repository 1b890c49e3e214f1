"""Intersection hypergraphs of box families.

Because boxes have Helly number 2, a transversal ``(b_1, ..., b_r)`` is a
hyperedge exactly when its boxes intersect pairwise.  Everything here is built
on the pairwise cross-part adjacency, stored as Python-int bitsets.

Coordinates are replaced by their rank among all endpoint values on the same
axis before any comparison.  Intersection of closed boxes depends only on that
order, so the integer ranks give the same answers as the exact rationals and
are much cheaper to compare.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import BudgetExceeded, PreconditionError
from .geometry import Box

DEFAULT_NODE_BUDGET = 10**7


@dataclass(frozen=True)
class PlanarInstance:
    """Horizontal segments (collapsed in y) against vertical ones (collapsed in x).

    Segments may degenerate to points; a point is accepted on either side.
    """

    horizontals: tuple[Box, ...]
    verticals: tuple[Box, ...]

    def __post_init__(self):
        object.__setattr__(self, "horizontals", tuple(self.horizontals))
        object.__setattr__(self, "verticals", tuple(self.verticals))
        for name, segs, axis in (("horizontal", self.horizontals, 1), ("vertical", self.verticals, 0)):
            for k, s in enumerate(segs):
                if not isinstance(s, Box) or s.dimension != 2:
                    raise PreconditionError(f"{name} segment {k} is not a planar box")
                if not s.sides[axis].collapsed:
                    raise PreconditionError(f"{name} segment {k} is not axis-parallel: {s}")

    @property
    def parts(self) -> tuple[tuple[Box, ...], tuple[Box, ...]]:
        return (self.horizontals, self.verticals)

    @property
    def sizes(self) -> tuple[int, int]:
        return (len(self.horizontals), len(self.verticals))


def _parts_of(obj) -> list[Sequence[Box]]:
    parts = obj.parts if hasattr(obj, "parts") else obj
    return [list(p) for p in parts]


def rank_keys(parts: Sequence[Sequence[Box]]) -> tuple[list[list[tuple[int, ...]]], list[int]]:
    """Replace every endpoint by its rank on its axis.

    Returns per-part lists of flat keys ``(lo_1, hi_1, ..., lo_d, hi_d)`` and
    the number of distinct ranks on each axis.
    """
    boxes = [b for p in parts for b in p]
    if not boxes:
        return [[] for _ in parts], []
    d = boxes[0].dimension
    for b in boxes:
        if b.dimension != d:
            raise PreconditionError("all boxes must share one dimension")
    tables = []
    for axis in range(d):
        vals = sorted({v for b in boxes for v in (b.sides[axis].lo, b.sides[axis].hi)})
        tables.append({v: k for k, v in enumerate(vals)})
    keys = [
        [tuple(r for axis, s in enumerate(b.sides) for r in (tables[axis][s.lo], tables[axis][s.hi])) for b in p]
        for p in parts
    ]
    return keys, [len(t) for t in tables]


def _adjacency_rows(keys_a, keys_b, ranks: list[int]) -> list[int]:
    """Row ``x`` is the bitset of indices ``y`` in ``keys_b`` meeting ``keys_a[x]``."""
    if not keys_a:
        return []
    if not keys_b:
        return [0] * len(keys_a)
    d = len(ranks)
    rows = None
    for axis in range(d):
        R = ranks[axis]
        lo_at = [0] * R
        hi_at = [0] * R
        for y, key in enumerate(keys_b):
            bit = 1 << y
            lo_at[key[2 * axis]] |= bit
            hi_at[key[2 * axis + 1]] |= bit
        lo_le = lo_at[:]
        for v in range(1, R):
            lo_le[v] |= lo_le[v - 1]
        hi_ge = hi_at[:]
        for v in range(R - 2, -1, -1):
            hi_ge[v] |= hi_ge[v + 1]
        axis_rows = [lo_le[key[2 * axis + 1]] & hi_ge[key[2 * axis]] for key in keys_a]
        rows = axis_rows if rows is None else [r & s for r, s in zip(rows, axis_rows)]
    return rows


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class PairwiseGraphs:
    """Cross-part adjacency: ``rows[(i, j)][a]`` has bit ``b`` set iff box a of part i meets box b of part j.

    Part numbers are 1-based, both orders ``(i, j)`` and ``(j, i)`` are stored.
    """

    sizes: tuple[int, ...]
    rows: dict[tuple[int, int], tuple[int, ...]]

    def adjacent(self, i: int, a: int, j: int, b: int) -> bool:
        return bool(self.rows[(i, j)][a] >> b & 1)

    def row(self, i: int, a: int, j: int) -> int:
        return self.rows[(i, j)][a]

    def edge_count(self, i: int, j: int) -> int:
        return sum(r.bit_count() for r in self.rows[(i, j)])

    def is_complete(self, i: int, j: int) -> bool:
        full = (1 << self.sizes[j - 1]) - 1
        return all(r == full for r in self.rows[(i, j)])


def _pairwise_from_keys(keys, ranks) -> dict[tuple[int, int], list[int]]:
    r = len(keys)
    rows = {}
    for i in range(r):
        for j in range(i + 1, r):
            fwd = _adjacency_rows(keys[i], keys[j], ranks)
            back = [0] * len(keys[j])
            for a, row in enumerate(fwd):
                for b in _bits(row):
                    back[b] |= 1 << a
            rows[(i, j)] = fwd
            rows[(j, i)] = back
    return rows


def pairwise_graphs(fam) -> PairwiseGraphs:
    parts = _parts_of(fam)
    keys, ranks = rank_keys(parts)
    raw = _pairwise_from_keys(keys, ranks)
    return PairwiseGraphs(
        tuple(len(p) for p in parts),
        {(i + 1, j + 1): tuple(v) for (i, j), v in raw.items()},
    )


@dataclass(frozen=True)
class HypergraphReport:
    edge_count: int
    edges: tuple[tuple[int, ...], ...] | None = None


def _count(rows, sizes, list_edges: bool):
    r = len(sizes)
    if any(n == 0 for n in sizes):
        return 0, ([] if list_edges else None)
    if r == 2 and not list_edges:
        return sum(x.bit_count() for x in rows[(0, 1)]), None
    # Largest part last so the innermost level is a single popcount.
    order = sorted(range(r), key=lambda p: sizes[p])
    full = [(1 << n) - 1 for n in sizes]
    edges = [] if list_edges else None
    total = 0
    chosen = [0] * r

    def rec(level: int, cand: list[int]):
        nonlocal total
        p = order[level]
        rest = order[level + 1:]
        if not rest:
            if list_edges:
                for a in _bits(cand[p]):
                    chosen[p] = a
                    edges.append(tuple(chosen))
            else:
                total += cand[p].bit_count()
            return
        for a in _bits(cand[p]):
            new = cand[:]
            ok = True
            for q in rest:
                new[q] &= rows[(p, q)][a]
                if not new[q]:
                    ok = False
                    break
            if ok:
                chosen[p] = a
                rec(level + 1, new)

    rec(0, full[:])
    if list_edges:
        edges.sort()
        return len(edges), edges
    return total, None


def count_hyperedges(fam, list_edges: bool = False) -> HypergraphReport:
    """Number of transversals with nonempty common intersection.

    With ``list_edges`` the report also carries every hyperedge as a tuple of
    0-based box indices, one per part, sorted lexicographically.
    """
    parts = _parts_of(fam)
    keys, ranks = rank_keys(parts)
    rows = _pairwise_from_keys(keys, ranks)
    n, edges = _count(rows, [len(p) for p in parts], list_edges)
    return HypergraphReport(n, tuple(edges) if edges is not None else None)


def edge_set(fam) -> frozenset[tuple[int, ...]]:
    return frozenset(count_hyperedges(fam, list_edges=True).edges)


@dataclass(frozen=True)
class BicliqueWitness:
    """Box indices (0-based) chosen in each part; every cross pair is adjacent."""

    indices: tuple[tuple[int, ...], ...]


def _classes(keys_part):
    """Group identical boxes: returns representative keys and member index lists."""
    groups: dict[tuple, list[int]] = {}
    for idx, key in enumerate(keys_part):
        groups.setdefault(key, []).append(idx)
    reps = list(groups)
    return reps, [groups[k] for k in reps]


def find_biclique(
    fam,
    t: int,
    sizes: Sequence[int] | None = None,
    budget_nodes: int = DEFAULT_NODE_BUDGET,
) -> BicliqueWitness | None:
    """Exact search for a complete r-partite pattern with ``t`` boxes per part.

    ``sizes`` overrides the per-part requirement (e.g. ``(s, t)`` for K_{s,t}).
    Identical boxes are merged into weighted classes so copies never multiply
    the search.  Raises :class:`BudgetExceeded` rather than answering "absent"
    when the node budget runs out.
    """
    if t < 2:
        raise PreconditionError("t must be at least 2")
    parts = _parts_of(fam)
    r = len(parts)
    need = list(sizes) if sizes is not None else [t] * r
    if len(need) != r or any(k < 1 for k in need):
        raise PreconditionError(f"bad per-part sizes {need} for r={r}")
    if any(len(p) < k for p, k in zip(parts, need)):
        return None

    keys, ranks = rank_keys(parts)
    reps, members = zip(*(_classes(k) for k in keys))
    weights = [[len(m) for m in ms] for ms in members]
    unit = [all(w == 1 for w in ws) for ws in weights]
    rows = _pairwise_from_keys(list(reps), ranks)

    def wsum(p: int, bits: int) -> int:
        if unit[p]:
            return bits.bit_count()
        ws = weights[p]
        return sum(ws[c] for c in _bits(bits))

    cand = [(1 << len(rp)) - 1 for rp in reps]

    # Peel classes that cannot reach the required weight in some other part.
    changed = True
    while changed:
        changed = False
        for p in range(r):
            for c in _bits(cand[p]):
                for q in range(r):
                    if q != p and wsum(q, cand[q] & rows[(p, q)][c]) < need[q]:
                        cand[p] &= ~(1 << c)
                        changed = True
                        break
    if any(wsum(p, cand[p]) < need[p] for p in range(r)):
        return None

    order = sorted(range(r), key=lambda p: (cand[p].bit_count(), p))
    chosen: list[list[tuple[int, int]]] = [[] for _ in range(r)]
    nodes = 0

    def rec(level: int, cand: list[int], have: int) -> bool:
        nonlocal nodes
        p = order[level]
        rest = order[level + 1:]
        for c in _bits(cand[p]):
            nodes += 1
            if nodes > budget_nodes:
                raise BudgetExceeded(budget_nodes)
            take = min(weights[p][c], need[p] - have)
            new = cand[:]
            new[p] = cand[p] & ~((2 << c) - 1)
            ok = True
            for q in rest:
                new[q] &= rows[(p, q)][c]
                if wsum(q, new[q]) < need[q]:
                    ok = False
                    break
            if not ok:
                continue
            chosen[p].append((c, take))
            if have + take >= need[p]:
                if not rest or rec(level + 1, new, 0):
                    return True
            elif have + take + wsum(p, new[p]) >= need[p]:
                if rec(level, new, have + take):
                    return True
            chosen[p].pop()
        return False

    if not rec(0, cand, 0):
        return None
    out = []
    for p in range(r):
        idx = []
        for c, take in chosen[p]:
            idx.extend(members[p][c][:take])
        out.append(tuple(sorted(idx)))
    return BicliqueWitness(tuple(out))


def is_biclique(fam, witness: BicliqueWitness) -> bool:
    """Check a witness directly from the pairwise adjacency."""
    g = pairwise_graphs(fam)
    r = len(witness.indices)
    for i in range(r):
        for j in range(i + 1, r):
            for a in witness.indices[i]:
                for b in witness.indices[j]:
                    if not g.adjacent(i + 1, a, j + 1, b):
                        return False
    return True


def planar_instance_graph(inst: PlanarInstance) -> HypergraphReport:
    if not isinstance(inst, PlanarInstance):
        raise PreconditionError("expected a PlanarInstance")
    return count_hyperedges(inst)
