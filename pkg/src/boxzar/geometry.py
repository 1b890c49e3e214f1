"""Exact axis-parallel boxes over the rationals.

All coordinates are :class:`fractions.Fraction`.  The boxes are closed and may
collapse (``lo == hi``) along any subset of axes.  Axis labels are 1-based in
every public API (``direction_set``), matching the way direction vectors are
written; ``sides`` is an ordinary 0-based tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatch, PreconditionError

Rational = Fraction
RationalLike = Union[int, str, Fraction]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, ``"p/q"`` strings and fractions; reject floats."""
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"coordinate must be int, str or Fraction, got {type(value).__name__}")


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rational(self.lo))
        object.__setattr__(self, "hi", as_rational(self.hi))
        if self.lo > self.hi:
            raise PreconditionError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def collapsed(self) -> bool:
        return self.lo == self.hi

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: RationalLike) -> bool:
        x = as_rational(x)
        return self.lo <= x <= self.hi

    def shifted(self, delta: Fraction) -> "Interval":
        return Interval(self.lo + delta, self.hi + delta)

    def enlarged(self, eps: Fraction) -> "Interval":
        return Interval(self.lo - eps, self.hi + eps)

    def __repr__(self):
        if self.collapsed:
            return f"{{{self.lo}}}"
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class Point:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(as_rational(c) for c in self.coords))
        if not self.coords:
            raise PreconditionError("a point needs at least one coordinate")

    @property
    def dimension(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class Box:
    """Product of closed rational intervals, one per axis."""

    sides: tuple[Interval, ...]

    def __post_init__(self):
        sides = tuple(s if isinstance(s, Interval) else Interval(*s) for s in self.sides)
        if not sides:
            raise PreconditionError("a box needs at least one side")
        object.__setattr__(self, "sides", sides)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[RationalLike]]) -> "Box":
        return cls(tuple(Interval(lo, hi) for lo, hi in pairs))

    @classmethod
    def point(cls, coords: Iterable[RationalLike]) -> "Box":
        return cls(tuple(Interval(c, c) for c in coords))

    @property
    def dimension(self) -> int:
        return len(self.sides)

    @property
    def direction_set(self) -> frozenset[int]:
        return frozenset(i + 1 for i, s in enumerate(self.sides) if not s.collapsed)

    def pairs(self) -> list[tuple[Fraction, Fraction]]:
        return [(s.lo, s.hi) for s in self.sides]

    def contains_point(self, p: Point) -> bool:
        if p.dimension != self.dimension:
            raise DimensionMismatch(f"point of dimension {p.dimension} vs box of {self.dimension}")
        return all(s.lo <= c <= s.hi for s, c in zip(self.sides, p.coords))

    def translated(self, axis: int, delta: RationalLike) -> "Box":
        """Shift along the 1-based ``axis``."""
        delta = as_rational(delta)
        sides = list(self.sides)
        sides[axis - 1] = sides[axis - 1].shifted(delta)
        return Box(tuple(sides))

    def __repr__(self):
        return "Box(" + " x ".join(repr(s) for s in self.sides) + ")"


def interval_intersect(i1: Interval, i2: Interval) -> Interval | None:
    lo = max(i1.lo, i2.lo)
    hi = min(i1.hi, i2.hi)
    if lo > hi:
        return None
    return Interval(lo, hi)


def _check_dimensions(boxes: Sequence[Box]) -> int:
    if not boxes:
        raise PreconditionError("need at least one box")
    d = boxes[0].dimension
    for b in boxes[1:]:
        if b.dimension != d:
            raise DimensionMismatch(f"boxes of dimension {d} and {b.dimension}")
    return d


def box_intersect(boxes: Sequence[Box]) -> Box | None:
    """Common intersection of the boxes, or ``None`` when it is empty."""
    boxes = list(boxes)
    d = _check_dimensions(boxes)
    sides = []
    for axis in range(d):
        lo = max(b.sides[axis].lo for b in boxes)
        hi = min(b.sides[axis].hi for b in boxes)
        if lo > hi:
            return None
        sides.append(Interval(lo, hi))
    return Box(tuple(sides))


def boxes_intersect(a: Box, b: Box) -> bool:
    if a.dimension != b.dimension:
        raise DimensionMismatch(f"boxes of dimension {a.dimension} and {b.dimension}")
    return all(s.lo <= t.hi and t.lo <= s.hi for s, t in zip(a.sides, b.sides))


def helly_pierce(boxes: Sequence[Box]) -> Point | None:
    """A point common to all boxes, found from pairwise tests only.

    Boxes have Helly number 2: if every pair meets, the coordinatewise maximum
    of the lower endpoints lies in all of them.  Returns ``None`` as soon as a
    disjoint pair is seen.
    """
    boxes = list(boxes)
    d = _check_dimensions(boxes)
    for i in range(len(boxes)):
        for j in range(i + 1, len(boxes)):
            if not boxes_intersect(boxes[i], boxes[j]):
                return None
    return Point(tuple(max(b.sides[axis].lo for b in boxes) for axis in range(d)))


def fold_intersect(boxes: Sequence[Box]) -> Box | None:
    """Left fold of pairwise :func:`box_intersect`; used as a cross-check."""

    def step(acc, b):
        if acc is None:
            return None
        return box_intersect([acc, b])

    return reduce(step, boxes[1:], boxes[0])


def min_positive_gap(values: Iterable[Fraction]) -> Fraction | None:
    """Smallest positive difference between distinct values, ``None`` if all equal."""
    vs = sorted(set(values))
    if len(vs) < 2:
        return None
    return min(b - a for a, b in zip(vs, vs[1:]))


def bounding_box(boxes: Iterable[Box]) -> Box:
    boxes = list(boxes)
    d = _check_dimensions(boxes)
    return Box(tuple(
        Interval(min(b.sides[a].lo for b in boxes), max(b.sides[a].hi for b in boxes))
        for a in range(d)
    ))
