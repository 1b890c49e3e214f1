"""Direction vectors and the predicates that drive the reduction chain.

A direction vector in R^d is an r-tuple of subsets of {1..d}.  The text form
used by the CLI and by ``str()`` is ``"d: {..} {..} ..."``, e.g. ``"2: {} {1,2}"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING, Iterable, Sequence

from .errors import DirectionParseError, PreconditionError

if TYPE_CHECKING:
    from .family import BoxFamily


@dataclass(frozen=True)
class DirectionVector:
    dimension: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        sets = tuple(frozenset(s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        if self.dimension < 1:
            raise PreconditionError("dimension must be at least 1")
        if len(sets) < 2:
            raise PreconditionError("a direction vector needs r >= 2 sets")
        for s in sets:
            bad = [c for c in s if not 1 <= c <= self.dimension]
            if bad:
                raise PreconditionError(f"coordinates {sorted(bad)} outside 1..{self.dimension}")

    @classmethod
    def of(cls, dimension: int, *sets: Iterable[int]) -> "DirectionVector":
        return cls(dimension, tuple(frozenset(s) for s in sets))

    @classmethod
    def parse(cls, text: str) -> "DirectionVector":
        return parse_direction_vector(text)

    @property
    def r(self) -> int:
        return len(self.sets)

    def __getitem__(self, j: int) -> frozenset[int]:
        """1-based access, ``F[1]`` is the first set."""
        if not 1 <= j <= self.r:
            raise IndexError(j)
        return self.sets[j - 1]

    def __str__(self):
        body = " ".join("{" + ",".join(str(c) for c in sorted(s)) + "}" for s in self.sets)
        return f"{self.dimension}: {body}"

    def without_coordinate(self, axis: int) -> "DirectionVector":
        """Drop ``axis`` and renumber the coordinates above it."""
        if self.dimension < 2:
            raise PreconditionError("cannot drop a coordinate from R^1")
        sets = tuple(
            frozenset(c if c < axis else c - 1 for c in s if c != axis) for s in self.sets
        )
        return DirectionVector(self.dimension - 1, sets)

    def permuted_parts(self, order: Sequence[int]) -> "DirectionVector":
        return DirectionVector(self.dimension, tuple(self.sets[j] for j in order))

    def relabeled(self, mapping: dict[int, int]) -> "DirectionVector":
        return DirectionVector(self.dimension, tuple(frozenset(mapping[c] for c in s) for s in self.sets))


def parse_direction_vector(text: str) -> DirectionVector:
    """Parse ``"d: {a,b} {} ..."``; errors carry the offending character offset."""
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def expect_int() -> int:
        nonlocal pos
        skip_ws()
        m = re.compile(r"\d+").match(text, pos)
        if not m:
            raise DirectionParseError("expected an integer", pos, text)
        pos = m.end()
        return int(m.group())

    def expect(ch: str):
        nonlocal pos
        skip_ws()
        if pos >= n or text[pos] != ch:
            raise DirectionParseError(f"expected {ch!r}", pos, text)
        pos += 1

    d = expect_int()
    expect(":")
    sets = []
    while True:
        skip_ws()
        if pos >= n:
            break
        expect("{")
        members = []
        skip_ws()
        if pos < n and text[pos] == "}":
            pos += 1
        else:
            while True:
                start = pos
                c = expect_int()
                if not 1 <= c <= d:
                    raise DirectionParseError(f"coordinate {c} outside 1..{d}", start, text)
                members.append(c)
                skip_ws()
                if pos < n and text[pos] == ",":
                    pos += 1
                    continue
                expect("}")
                break
        sets.append(frozenset(members))
    if d < 1:
        raise DirectionParseError("dimension must be at least 1", 0, text)
    if len(sets) < 2:
        raise DirectionParseError("need at least two direction sets", pos, text)
    return DirectionVector(d, tuple(sets))


BRANCH_LINEAR = "Θ_r(t n^{r−1})"
BRANCH_COHERENT = "Ω(t n^{r−1} log n/log log n)"


@dataclass(frozen=True)
class CoherenceVerdict:
    coherent: bool
    witness_k: int | None = None
    witness_directions: tuple[int, int] | None = None

    @property
    def branch(self) -> str:
        if self.coherent:
            return BRANCH_COHERENT
        return BRANCH_LINEAR


def common_directions(F: DirectionVector, k: int) -> frozenset[int]:
    """Intersection of all sets except the 1-based ``k``-th."""
    others = [s for j, s in enumerate(F.sets, start=1) if j != k]
    out = frozenset(range(1, F.dimension + 1))
    for s in others:
        out &= s
    return out


def is_2_coherent(F: DirectionVector) -> CoherenceVerdict:
    """Some r-1 of the sets share two coordinates.

    The witness is the smallest such k with the lexicographically smallest
    coordinate pair.
    """
    for k in range(1, F.r + 1):
        common = sorted(common_directions(F, k))
        if len(common) >= 2:
            return CoherenceVerdict(True, k, (common[0], common[1]))
    return CoherenceVerdict(False)


def canonical_direction_vector(d: int) -> DirectionVector:
    if d < 2:
        raise PreconditionError("the canonical direction vector needs d >= 2")
    full = frozenset(range(1, d + 1))
    return DirectionVector(d, tuple(full - {i} for i in range(1, d + 1)))


def is_canonical(F: DirectionVector) -> bool:
    return F.dimension >= 2 and F == canonical_direction_vector(F.dimension)


def _require_canonical(fam: "BoxFamily"):
    if not is_canonical(fam.direction_vector):
        raise PreconditionError(f"family is not canonical: {fam.direction_vector}")


def carrier_values(fam: "BoxFamily", i: int) -> list:
    """The collapsed i-th coordinate of each box in part i (1-based)."""
    return [b.sides[i - 1].lo for b in fam.part(i)]


def is_separated(fam: "BoxFamily") -> bool:
    _require_canonical(fam)
    for i in range(1, fam.r + 1):
        vals = carrier_values(fam, i)
        if len(set(vals)) != len(vals):
            return False
    return True


def fully_intersect(fam: "BoxFamily", i: int, j: int) -> bool:
    from .geometry import boxes_intersect

    return all(boxes_intersect(a, b) for a in fam.part(i) for b in fam.part(j))


def is_restricted(fam: "BoxFamily") -> bool:
    """Every transversal of parts 1..d-1 meets; decided pairwise via Helly."""
    if not is_separated(fam):
        raise PreconditionError("restriction is only defined for separated families")
    d = fam.dimension
    return all(fully_intersect(fam, i, j) for i, j in combinations(range(1, d), 2))


@dataclass(frozen=True)
class AuxiliaryGraph:
    """Graph on parts 1..r; {i, j} is an edge when the two parts do not fully intersect."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.edges:
            if not (1 <= i < j <= self.vertex_count):
                raise PreconditionError(f"bad edge {(i, j)}")

    def is_star(self, center: int | None = None) -> bool:
        """Subgraph of a star, centered at ``center`` or at some vertex."""
        if not self.edges:
            return True
        centers = [center] if center is not None else range(1, self.vertex_count + 1)
        return any(all(c in e for e in self.edges) for c in centers)

    def has_disjoint_edges(self) -> bool:
        return any(not set(e) & set(f) for e, f in combinations(sorted(self.edges), 2))

    def has_triangle(self) -> bool:
        adj = {v: set() for v in range(1, self.vertex_count + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return any(adj[i] & adj[j] for i, j in self.edges)

    def case(self) -> str:
        """Which of the three structural cases applies (star is checked first)."""
        if self.is_star():
            return "star"
        if self.has_disjoint_edges():
            return "disjoint-edges"
        return "triangle"


def auxiliary_graph(fam: "BoxFamily") -> AuxiliaryGraph:
    if not is_separated(fam):
        raise PreconditionError("the auxiliary graph is defined for separated families")
    edges = frozenset(
        (i, j) for i, j in combinations(range(1, fam.r + 1), 2) if not fully_intersect(fam, i, j)
    )
    return AuxiliaryGraph(fam.r, edges)


def all_direction_vectors(d: int, r: int):
    """Every r-direction-vector in R^d, in a fixed order."""
    from itertools import product

    subsets = [frozenset(c) for k in range(d + 1) for c in combinations(range(1, d + 1), k)]
    for sets in product(subsets, repeat=r):
        yield DirectionVector(d, tuple(sets))
