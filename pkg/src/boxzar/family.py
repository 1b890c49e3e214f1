from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .directions import DirectionVector
from .errors import PreconditionError
from .geometry import Box, RationalLike


@dataclass(frozen=True)
class BoxFamily:
    """An F-family: part j is a multiset of boxes whose direction set is exactly F_j.

    Parts keep their insertion order; a box is identified by ``(part, index)``
    with 1-based part numbers and 0-based indices.  Every transformation in
    :mod:`boxzar.reductions` preserves that indexing, which is what
    "provenance-indexed edge set" refers to throughout the tests.
    """

    direction_vector: DirectionVector
    parts: tuple[tuple[Box, ...], ...]

    def __post_init__(self):
        parts = tuple(tuple(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        F = self.direction_vector
        if len(parts) != F.r:
            raise PreconditionError(f"{len(parts)} parts for a direction vector with r={F.r}")
        for j, (part, want) in enumerate(zip(parts, F.sets), start=1):
            for a, b in enumerate(part):
                if b.dimension != F.dimension:
                    raise PreconditionError(
                        f"part {j} box {a} has dimension {b.dimension}, expected {F.dimension}"
                    )
                if b.direction_set != want:
                    raise PreconditionError(
                        f"part {j} box {a} has direction set {sorted(b.direction_set)}, "
                        f"expected {sorted(want)}"
                    )

    @classmethod
    def from_pairs(
        cls, F: DirectionVector, parts: Iterable[Iterable[Sequence[Sequence[RationalLike]]]]
    ) -> "BoxFamily":
        return cls(F, tuple(tuple(Box.from_pairs(b) for b in part) for part in parts))

    @property
    def dimension(self) -> int:
        return self.direction_vector.dimension

    @property
    def r(self) -> int:
        return self.direction_vector.r

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    def part(self, j: int) -> tuple[Box, ...]:
        """1-based part access."""
        return self.parts[j - 1]

    def all_boxes(self) -> list[Box]:
        return [b for p in self.parts for b in p]

    def with_parts(self, parts, F: DirectionVector | None = None) -> "BoxFamily":
        return BoxFamily(F or self.direction_vector, tuple(tuple(p) for p in parts))
