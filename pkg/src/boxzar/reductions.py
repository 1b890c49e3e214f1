"""Executable versions of the upper-bound transformations.

* :func:`separate` perturbs a canonical family so that carrier hyperplanes
  within each part become distinct.
* :func:`rescale_to_grid` moves the carriers of chosen parts to 1..n_i with a
  monotone piecewise-linear map per axis.
* :func:`slice_restricted` cuts a restricted family along the diagonal planes
  through the lower boundary of the grid, giving planar segment instances.
* :func:`slice_general` cuts along hyperplanes x_i = s that hold boxes of two
  parts collapsed in coordinate i.
* :func:`transfer_to_canonical` embeds a family of the "one missing coordinate
  per part, the rest full" shape into R^r as a canonical family.

Every operation keeps box order inside each part, so edge sets can be compared
index by index before and after.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import prod
from typing import Sequence

from .bounds import g_t
from .directions import (
    DirectionVector,
    canonical_direction_vector,
    carrier_values,
    is_canonical,
    is_restricted,
    is_separated,
)
from .errors import PreconditionError
from .family import BoxFamily
from .geometry import Box, Interval, box_intersect, min_positive_gap
from .hypergraph import BicliqueWitness, PlanarInstance, count_hyperedges, is_biclique


def _axis_values(fam: BoxFamily, axis: int) -> list[Fraction]:
    return [v for b in fam.all_boxes() for v in (b.sides[axis - 1].lo, b.sides[axis - 1].hi)]


def _axis_gap(fam: BoxFamily, axis: int) -> Fraction:
    gap = min_positive_gap(_axis_values(fam, axis))
    return gap if gap is not None else Fraction(1)


def separate(fam: BoxFamily) -> BoxFamily:
    """Make carrier hyperplanes distinct without changing the hypergraph.

    Part-i boxes are grown by gap_a / 4 along every axis a != i, then shifted
    along axis i by k * gap_i / (8N), where k is the box's position in the
    whole family and N the total box count.  gap_a is the smallest positive
    difference between axis-a endpoint values.
    """
    if not is_canonical(fam.direction_vector):
        raise PreconditionError(f"separate needs a canonical family, got {fam.direction_vector}")
    d = fam.dimension
    N = max(1, sum(fam.sizes))
    gaps = [_axis_gap(fam, a) for a in range(1, d + 1)]
    parts = []
    k = 0
    for i, part in enumerate(fam.parts, start=1):
        out = []
        for b in part:
            sides = []
            for a, s in enumerate(b.sides, start=1):
                if a == i:
                    sides.append(s.shifted(gaps[a - 1] * k / (8 * N)))
                else:
                    sides.append(s.enlarged(gaps[a - 1] / 4))
            out.append(Box(tuple(sides)))
            k += 1
        parts.append(tuple(out))
    return fam.with_parts(parts)


@dataclass(frozen=True)
class MonotoneMap:
    """Piecewise-linear increasing map through the given knots, unit slope outside them."""

    knots: tuple[tuple[Fraction, Fraction], ...]

    def __call__(self, x: Fraction) -> Fraction:
        ks = self.knots
        if x <= ks[0][0]:
            return ks[0][1] + (x - ks[0][0])
        if x >= ks[-1][0]:
            return ks[-1][1] + (x - ks[-1][0])
        for (x0, y0), (x1, y1) in zip(ks, ks[1:]):
            if x0 <= x <= x1:
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        raise AssertionError("unreachable")


def apply_axis_map(fam: BoxFamily, axis: int, f) -> BoxFamily:
    """Apply a strictly increasing ``f`` to every axis-``axis`` endpoint (1-based)."""
    parts = []
    for part in fam.parts:
        out = []
        for b in part:
            sides = list(b.sides)
            s = sides[axis - 1]
            sides[axis - 1] = Interval(f(s.lo), f(s.hi))
            out.append(Box(tuple(sides)))
        parts.append(tuple(out))
    return fam.with_parts(parts)


def is_on_grid(fam: BoxFamily, which_parts: Sequence[int] | None = None) -> bool:
    """The carriers of each part i in ``which_parts`` (default 1..d-1) are exactly 1..n_i."""
    which = range(1, fam.dimension) if which_parts is None else which_parts
    return all(
        sorted(carrier_values(fam, i)) == [Fraction(u) for u in range(1, len(fam.part(i)) + 1)]
        for i in which
    )


def rescale_to_grid(fam: BoxFamily, which_parts: Sequence[int] | None = None) -> BoxFamily:
    """Move the carriers of each part in ``which_parts`` (default 1..d-1) to 1..n_i."""
    if not is_separated(fam):
        raise PreconditionError("rescale_to_grid needs a separated family")
    d = fam.dimension
    which = list(range(1, d)) if which_parts is None else sorted(set(which_parts))
    for i in which:
        if not 1 <= i <= d:
            raise PreconditionError(f"part {i} outside 1..{d}")
    out = fam
    for i in which:
        vals = sorted(carrier_values(fam, i))
        if not vals:
            continue
        f = MonotoneMap(tuple((v, Fraction(u)) for u, v in enumerate(vals, start=1)))
        out = apply_axis_map(out, i, f)
    return out


@dataclass(frozen=True)
class PlanarSlice:
    """One diagonal slice, in slice coordinates (u along e_1+...+e_{d-1}, v along e_d).

    ``horizontals`` are the traces of part-d boxes (collapsed in v) and
    ``verticals`` the traces of transversal intersections of parts 1..d-1
    (collapsed in u).  ``s_provenance[k]`` is the part-d index of horizontal k
    and ``t_provenance[k]`` the tuple of part 1..d-1 indices of vertical k.
    """

    anchor: tuple[int, ...]
    horizontals: tuple[Box, ...]
    verticals: tuple[Box, ...]
    s_provenance: tuple[int, ...]
    t_provenance: tuple[tuple[int, ...], ...]

    @property
    def instance(self) -> PlanarInstance:
        return PlanarInstance(self.horizontals, self.verticals)

    def edge_count(self) -> int:
        return count_hyperedges(self.instance).edge_count

    def lift_edge(self, h: int, v: int) -> tuple[int, ...]:
        """The hyperedge of the sliced family behind planar edge (horizontal h, vertical v)."""
        return self.t_provenance[v] + (self.s_provenance[h],)

    def lift_biclique(self, w: BicliqueWitness) -> BicliqueWitness:
        """Map a K_{t,t} of the slice to a K_{t,...,t} of the family."""
        hs, vs = w.indices
        d1 = len(self.anchor)
        cols = [tuple(sorted({self.t_provenance[v][i] for v in vs})) for i in range(d1)]
        return BicliqueWitness(tuple(cols) + (tuple(sorted(self.s_provenance[h] for h in hs)),))


@dataclass(frozen=True)
class SliceDecomposition:
    family: BoxFamily
    slices: tuple[PlanarSlice, ...]
    anchors: tuple[tuple[int, ...], ...]
    checks: dict = field(default_factory=dict)

    def total_edges(self) -> int:
        return sum(s.edge_count() for s in self.slices)

    def lifted_edges(self) -> list[tuple[int, ...]]:
        out = []
        for sl in self.slices:
            rep = count_hyperedges(sl.instance, list_edges=True)
            out.extend(sl.lift_edge(h, v) for h, v in rep.edges)
        return out

    def verify_witness(self, slice_index: int, w: BicliqueWitness) -> bool:
        """Lift a slice biclique and check it in the (rescaled) family."""
        lifted = self.slices[slice_index].lift_biclique(w)
        t = len(w.indices[0])
        return all(len(p) == t for p in lifted.indices) and is_biclique(self.family, lifted)


def boundary_anchors(sizes: Sequence[int]) -> list[tuple[int, ...]]:
    """Grid points of [n_1] x ... x [n_m] with at least one coordinate equal to 1."""
    return [p for p in product(*(range(1, n + 1) for n in sizes)) if 1 in p]


def slice_restricted(fam: BoxFamily) -> SliceDecomposition:
    """Partition all transversal intersections of a restricted family into planar slices.

    The family is first rescaled so part i (i < d) sits at x_i = 1..n_i.  The
    slice through anchor p is the plane p + u(e_1+...+e_{d-1}) + v e_d.  The
    accounting checks are computed and stored in ``checks``; a failed check
    raises.
    """
    d = fam.dimension
    if d == 2:
        raise PreconditionError("already planar")
    if d < 2 or not is_canonical(fam.direction_vector):
        raise PreconditionError("slice_restricted needs a canonical family with d >= 3")
    if not is_restricted(fam):
        raise PreconditionError("slice_restricted needs a restricted family")
    if not is_on_grid(fam):
        fam = rescale_to_grid(fam)
    front = fam.sizes[: d - 1]
    if any(n == 0 for n in front):
        raise PreconditionError("parts 1..d-1 must be nonempty")
    at = [{b.sides[i].lo: k for k, b in enumerate(fam.part(i + 1))} for i in range(d - 1)]
    anchors = boundary_anchors(front)
    last = fam.part(d)
    slices = []
    for p in anchors:
        verticals, t_prov = [], []
        s = 0
        while all(p[i] + s <= front[i] for i in range(d - 1)):
            idx = tuple(at[i][Fraction(p[i] + s)] for i in range(d - 1))
            meet = box_intersect([fam.part(i + 1)[idx[i]] for i in range(d - 1)])
            if meet is None:
                raise PreconditionError(f"parts 1..{d - 1} do not fully intersect at {idx}")
            z = meet.sides[d - 1]
            verticals.append(Box((Interval(s, s), z)))
            t_prov.append(idx)
            s += 1
        horizontals, s_prov = [], []
        for k, b in enumerate(last):
            lo = max(b.sides[i].lo - p[i] for i in range(d - 1))
            hi = min(b.sides[i].hi - p[i] for i in range(d - 1))
            if lo <= hi:
                c = b.sides[d - 1].lo
                horizontals.append(Box((Interval(lo, hi), Interval(c, c))))
                s_prov.append(k)
        slices.append(PlanarSlice(p, tuple(horizontals), tuple(verticals), tuple(s_prov), tuple(t_prov)))

    e_h = count_hyperedges(fam).edge_count
    checks = {
        "anchors": len(anchors),
        "anchor_bound": g_t(front, 1),
        "sum_T": sum(len(sl.verticals) for sl in slices),
        "prod_n": prod(front),
        "max_S": max((len(sl.horizontals) for sl in slices), default=0),
        "n_d": len(last),
        "sum_edges": sum(sl.edge_count() for sl in slices),
        "edges": e_h,
    }
    problems = []
    if checks["anchors"] > checks["anchor_bound"]:
        problems.append("|P| exceeds g_t/t")
    if checks["sum_T"] != checks["prod_n"]:
        problems.append("sum |T_p| differs from n_1...n_{d-1}")
    if checks["max_S"] > checks["n_d"]:
        problems.append("|S_p| exceeds n_d")
    if checks["sum_edges"] != checks["edges"]:
        problems.append("slice edges do not sum to e(H)")
    if problems:
        raise AssertionError("; ".join(problems) + f": {checks}")
    return SliceDecomposition(fam, tuple(slices), tuple(anchors), checks)


@dataclass(frozen=True)
class HyperplaneSlice:
    """Cross-section of a family by the hyperplane x_axis = value.

    ``provenance[j]`` lists, for part j (0-based), the original index of each
    cross-sectioned box.
    """

    axis: int
    value: Fraction
    family: BoxFamily
    provenance: tuple[tuple[int, ...], ...]

    def lift_edge(self, edge: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.provenance[j][a] for j, a in enumerate(edge))


def _drop(b: Box, axis: int) -> Box:
    return Box(b.sides[: axis - 1] + b.sides[axis:])


def slice_general(fam: BoxFamily, axis: int, part_pair: tuple[int, int]) -> list[HyperplaneSlice]:
    """Slice at every value where a box of part j1 or j2 sits collapsed along ``axis``.

    Every hyperedge has its part-j1 box at a unique value s and meets x_axis = s,
    so it shows up in exactly one slice; the total is checked against e(H).
    """
    F = fam.direction_vector
    d = fam.dimension
    j1, j2 = part_pair
    if d < 2:
        raise PreconditionError("cannot slice a one-dimensional family")
    if not 1 <= axis <= d:
        raise PreconditionError(f"axis {axis} outside 1..{d}")
    if j1 == j2 or not (1 <= j1 <= F.r and 1 <= j2 <= F.r):
        raise PreconditionError(f"bad part pair {part_pair}")
    if axis in F[j1] or axis in F[j2]:
        raise PreconditionError(f"axis {axis} must be collapsed in parts {j1} and {j2}")
    values = sorted({b.sides[axis - 1].lo for j in (j1, j2) for b in fam.part(j)})
    F2 = F.without_coordinate(axis)
    out = []
    for s in values:
        parts, prov = [], []
        for part in fam.parts:
            keep = [k for k, b in enumerate(part) if b.sides[axis - 1].contains(s)]
            parts.append(tuple(_drop(part[k], axis) for k in keep))
            prov.append(tuple(keep))
        out.append(HyperplaneSlice(axis, s, BoxFamily(F2, tuple(parts)), tuple(prov)))

    for j in (j1, j2):
        if sum(len(sl.family.part(j)) for sl in out) != len(fam.part(j)):
            raise AssertionError(f"part {j} boxes not partitioned by the slices")
    total = sum(count_hyperedges(sl.family).edge_count for sl in out)
    if total != count_hyperedges(fam).edge_count:
        raise AssertionError("slice edges do not add up to e(H)")
    return out


def case2_coordinate_map(F: DirectionVector) -> dict[int, int]:
    """Old coordinate c -> the part index j whose complement is {c}.

    Raises unless the complements are pairwise disjoint, of size at most one
    and cover every coordinate.
    """
    d = F.dimension
    full = frozenset(range(1, d + 1))
    mapping: dict[int, int] = {}
    for j, s in enumerate(F.sets, start=1):
        comp = full - s
        if len(comp) > 1:
            raise PreconditionError(f"part {j} misses {sorted(comp)}: more than one coordinate")
        for c in comp:
            if c in mapping:
                raise PreconditionError(f"coordinate {c} is missing from parts {mapping[c]} and {j}")
            mapping[c] = j
    if len(mapping) != d:
        raise PreconditionError(f"complements do not cover [d]: missing {sorted(full - set(mapping))}")
    return mapping


def transfer_to_canonical(fam: BoxFamily) -> BoxFamily:
    """Embed into R^r so that part j has direction set [r] minus {j}.

    Old coordinate c becomes the index of the part missing c.  The full parts'
    indices become the new coordinates; there every box gets [0, 1], except
    that full part e stays at {0} in coordinate e.  All boxes contain 0 in the
    new coordinates, so the hypergraph is the same.
    """
    F = fam.direction_vector
    r = F.r
    mapping = case2_coordinate_map(F)
    extra = sorted(set(range(1, r + 1)) - set(mapping.values()))
    inverse = {new: old for old, new in mapping.items()}
    parts = []
    for j, part in enumerate(fam.parts, start=1):
        out = []
        for b in part:
            sides = []
            for c in range(1, r + 1):
                if c in inverse:
                    sides.append(b.sides[inverse[c] - 1])
                elif c == j:
                    sides.append(Interval(0, 0))
                else:
                    sides.append(Interval(0, 1))
            out.append(Box(tuple(sides)))
        parts.append(tuple(out))
    assert len(extra) == r - fam.dimension
    return BoxFamily(canonical_direction_vector(r), tuple(parts))
