"""Lower-bound families with exact edge counts.

Every generator returns a :class:`ConstructionReport` that states the edge
count and the ``t`` at which the family is claimed K_{t,...,t}-free;
:meth:`ConstructionReport.validate` recomputes both.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .bounds import g_t
from .directions import DirectionVector, is_2_coherent
from .errors import PreconditionError
from .family import BoxFamily
from .geometry import Box, Interval, bounding_box, min_positive_gap
from .hypergraph import DEFAULT_NODE_BUDGET, count_hyperedges, find_biclique


@dataclass(frozen=True)
class ConstructionReport:
    family: BoxFamily
    claimed_edges: int
    claimed_free_t: int
    name: str = ""
    params: dict = field(default_factory=dict)

    def recount(self) -> int:
        return count_hyperedges(self.family).edge_count

    def validate(self, budget_nodes: int = DEFAULT_NODE_BUDGET) -> bool:
        """Recount the edges and rerun the biclique search at ``claimed_free_t``."""
        if self.recount() != self.claimed_edges:
            return False
        return find_biclique(self.family, self.claimed_free_t, budget_nodes=budget_nodes) is None


def _box_through(center: Sequence[Fraction], directions: frozenset[int], radius=1) -> Box:
    return Box(tuple(
        Interval(c - radius, c + radius) if axis in directions else Interval(c, c)
        for axis, c in enumerate(center, start=1)
    ))


def trivial_family(F: DirectionVector, n: int, t: int) -> ConstructionReport:
    """Parts 1..r-1 and t-1 boxes of part r through the origin, the rest of part r far away."""
    if t < 2:
        raise PreconditionError("t must be at least 2")
    if n < t:
        raise PreconditionError(f"need n >= t, got n={n}, t={t}")
    d, r = F.dimension, F.r
    origin = [Fraction(0)] * d
    # Origin boxes span [-1, 1]; a shift of 3 along axis 1 clears them.
    far = [Fraction(3)] + [Fraction(0)] * (d - 1)
    parts = [tuple(_box_through(origin, F.sets[j]) for _ in range(n)) for j in range(r - 1)]
    last = tuple(_box_through(origin, F.sets[-1]) for _ in range(t - 1)) + tuple(
        _box_through(far, F.sets[-1]) for _ in range(n - t + 1)
    )
    parts.append(last)
    return ConstructionReport(
        BoxFamily(F, tuple(parts)), (t - 1) * n ** (r - 1), t, "trivial", {"n": n, "t": t}
    )


def grouped_family(F: DirectionVector, n_vec: Sequence[int], t: int) -> ConstructionReport:
    """Unbalanced construction: r groups, group j has only t live boxes of part j.

    Group j holds n_i / r boxes of every part i; all of them share the group's
    centre except n_j / r - t boxes of part j, which are parked far away.
    The edge count is g_t(n) / r^(r-1).  Group j contains K_{t,...,t} whenever
    every n_i / r >= t, so the family is certified K_{t+1,...,t+1}-free.
    """
    n_vec = list(n_vec)
    r, d = F.r, F.dimension
    if len(n_vec) != r:
        raise PreconditionError(f"need {r} sizes, got {len(n_vec)}")
    if t < 2:
        raise PreconditionError("t must be at least 2")
    for n in n_vec:
        if n % r:
            raise PreconditionError(f"r={r} does not divide n={n}")
        if n // r < t:
            raise PreconditionError(f"group size n/r={n // r} is below t={t}")
    # Group centres 3 apart on axis 1 keep radius-1 boxes of different groups disjoint.
    def centre(x: int):
        return [Fraction(x)] + [Fraction(0)] * (d - 1)

    parts = []
    for i in range(r):
        part = []
        for g in range(r):
            c = centre(3 * (g + 1))
            live = t if g == i else n_vec[i] // r
            part.extend(_box_through(c, F.sets[i]) for _ in range(live))
            if g == i:
                far = centre(3 * (r + 2 + i))
                part.extend(_box_through(far, F.sets[i]) for _ in range(n_vec[i] // r - t))
        parts.append(tuple(part))
    fam = BoxFamily(F, tuple(parts))
    claimed = g_t(n_vec, t) // r ** (r - 1)
    assert claimed * r ** (r - 1) == g_t(n_vec, t)
    return ConstructionReport(fam, claimed, t + 1, "grouped", {"n_vec": tuple(n_vec), "t": t})


def digit_reverse(x: int, b: int, k: int) -> int:
    y = 0
    for _ in range(k):
        x, digit = divmod(x, b)
        y = y * b + digit
    return y


def digit_reversal_family(b: int, k: int) -> ConstructionReport:
    """Points (x, rev_b(x)) on the b^k grid against b-adic blocks.

    Level ``s`` (1..k) tiles the grid by blocks of width b^s and height
    b^(k+1-s).  Fixing the top k-s digits of x and the top s-1 digits of
    rev_b(x) leaves one free digit, so every block holds exactly b points, and
    two points differing in one digit share exactly one block (none otherwise).
    """
    if b < 2 or k < 1:
        raise PreconditionError("need b >= 2 and k >= 1")
    N = b ** k
    F = DirectionVector.of(2, set(), {1, 2})
    points = tuple(Box.point((x, digit_reverse(x, b, k))) for x in range(N))
    rects = []
    for s in range(1, k + 1):
        w, h = b ** s, b ** (k + 1 - s)
        for a in range(N // w):
            for c in range(N // h):
                rects.append(Box.from_pairs([(a * w, (a + 1) * w - 1), (c * h, (c + 1) * h - 1)]))
    fam = BoxFamily(F, (points, tuple(rects)))
    return ConstructionReport(fam, k * N, 2, "digit-reversal", {"b": b, "k": k})


def amplify_copies(rep: ConstructionReport, t: int) -> ConstructionReport:
    """Replace each part by t-1 concatenated copies of itself."""
    if rep.claimed_free_t != 2:
        raise PreconditionError("amplification starts from a K_{2,...,2}-free family")
    if t < 2:
        raise PreconditionError("t must be at least 2")
    parts = tuple(tuple(p) * (t - 1) for p in rep.family.parts)
    return ConstructionReport(
        rep.family.with_parts(parts),
        rep.claimed_edges * (t - 1) ** rep.family.r,
        t,
        f"{rep.name}*{t - 1}",
        {**rep.params, "copies": t - 1},
    )


def tiny_and_large(boxes: Sequence[Box]) -> tuple[Fraction, Box]:
    """Quarter of the smallest positive coordinate gap, and the bounding box grown by 1."""
    gaps = [
        g for g in (
            min_positive_gap(v for b in boxes for v in (b.sides[a].lo, b.sides[a].hi))
            for a in range(boxes[0].dimension)
        ) if g is not None
    ]
    tiny = min(gaps) / 4 if gaps else Fraction(1, 4)
    bb = bounding_box(boxes)
    large = Box(tuple(s.enlarged(Fraction(1)) for s in bb.sides))
    return tiny, large


def planar_coherent_family(
    F: DirectionVector, base: ConstructionReport, n_large: int | None = None
) -> ConstructionReport:
    """Realise a 2-coherent F in the plane from a points-versus-rectangles base.

    The exceptional part (the coherence witness k) receives the base points,
    thickened to tiny segments or squares to match F_k.  The first other part
    receives the base rectangles, and each remaining part is ``n_large``
    copies of one box that contains everything.
    """
    if F.dimension != 2:
        raise PreconditionError("planar construction needs d = 2")
    verdict = is_2_coherent(F)
    if not verdict.coherent:
        raise PreconditionError(f"{F} is not 2-coherent")
    if base.family.direction_vector != DirectionVector.of(2, set(), {1, 2}):
        raise PreconditionError("base must be a (points, rectangles) family in R^2")
    points, rects = base.family.parts
    n = len(points) if n_large is None else n_large
    k = verdict.witness_k - 1
    rect_part = 0 if k != 0 else 1
    tiny, large = tiny_and_large(list(points) + list(rects))

    Fk = F.sets[k]
    thick = tuple(
        Box(tuple(s.enlarged(tiny) if axis in Fk else s for axis, s in enumerate(p.sides, start=1)))
        for p in points
    )
    parts = []
    for j in range(F.r):
        if j == k:
            parts.append(thick)
        elif j == rect_part:
            parts.append(rects)
        else:
            parts.append((large,) * n)
    fam = BoxFamily(F, tuple(parts))
    return ConstructionReport(
        fam,
        base.claimed_edges * n ** (F.r - 2),
        base.claimed_free_t,
        f"planar[{F}]<-{base.name}",
        {**base.params, "exceptional_part": k + 1, "rect_part": rect_part + 1, "n_large": n},
    )


def coherent_plane(F: DirectionVector) -> tuple[int, int]:
    """The lexicographically first coordinate pair shared by all but one part."""
    verdict = is_2_coherent(F)
    if not verdict.coherent:
        raise PreconditionError(f"{F} is not 2-coherent")
    return verdict.witness_directions


def planar_projection(F: DirectionVector) -> DirectionVector:
    """F restricted to its coherent plane, with that plane's axes renamed 1 and 2."""
    a, b = coherent_plane(F)
    rename = {a: 1, b: 2}
    return DirectionVector(2, tuple(frozenset(rename[c] for c in s if c in rename) for s in F.sets))


def lift_family(F: DirectionVector, planar: ConstructionReport) -> ConstructionReport:
    """Embed a planar family for ``planar_projection(F)`` into R^d.

    Planar axes 1, 2 go to the coherent pair (a, b); every other coordinate is
    0, extended to [0, 1] where the part's direction set asks for it.  All
    boxes contain 0 in those coordinates, so the hypergraph is unchanged.
    """
    a, b = coherent_plane(F)
    want = planar_projection(F)
    if planar.family.direction_vector != want:
        raise PreconditionError(
            f"planar family has {planar.family.direction_vector}, lifting {F} needs {want}"
        )
    d = F.dimension
    parts = []
    for j, part in enumerate(planar.family.parts):
        lifted = []
        for box in part:
            sides = []
            for axis in range(1, d + 1):
                if axis == a:
                    sides.append(box.sides[0])
                elif axis == b:
                    sides.append(box.sides[1])
                elif axis in F.sets[j]:
                    sides.append(Interval(0, 1))
                else:
                    sides.append(Interval(0, 0))
            lifted.append(Box(tuple(sides)))
        parts.append(tuple(lifted))
    return ConstructionReport(
        BoxFamily(F, tuple(parts)),
        planar.claimed_edges,
        planar.claimed_free_t,
        f"lift[{F}]<-{planar.name}",
        {**planar.params, "plane": (a, b)},
    )


def coherent_lower_bound(F: DirectionVector, b: int, k: int, t: int) -> ConstructionReport:
    """The full lower-bound pipeline: digit reversal, t-1 copies, planar, lift."""
    base = amplify_copies(digit_reversal_family(b, k), t)
    planar = planar_coherent_family(planar_projection(F), base)
    return lift_family(F, planar)


def expected_pipeline_edges(b: int, k: int, t: int, r: int) -> int:
    base_edges = k * b ** k * (t - 1) ** 2
    n = (t - 1) * b ** k
    return base_edges * n ** (r - 2)
