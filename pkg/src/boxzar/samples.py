"""Hand-built instances used by tests and scripts."""

from __future__ import annotations

from fractions import Fraction

from .directions import canonical_direction_vector
from .family import BoxFamily

# Six planes x = const, four planes y = const and two planes z = const.
# x/y values and extents as drawn; z extents chosen so that every red-blue
# pair meets and the green planes sit at heights 19/10 and 5/2.
_RED = [
    ("1", ("2/5", "43/10"), ("1", "7/2")),
    ("3/2", ("7/10", "23/5"), ("13/10", "19/5")),
    ("33/10", ("9/10", "9/2"), ("17/10", "5/2")),
    ("39/10", ("3/10", "24/5"), ("12/5", "18/5")),
    ("24/5", ("1/5", "22/5"), ("3/2", "33/10")),
    ("6", ("4/5", "41/10"), ("7/5", "3")),
]
_BLUE = [
    ("1", ("3/10", "33/5"), ("8/5", "16/5")),
    ("9/5", ("3/5", "31/5"), ("11/10", "39/10")),
    ("5/2", ("1/2", "34/5"), ("2", "27/10")),
    ("4", ("4/5", "63/10"), ("9/5", "37/10")),
]
_GREEN = [
    ("19/10", ("111/50", "132/25"), ("41/25", "41/10")),
    ("5/2", ("183/50", "417/100"), ("52/25", "14/5")),
]


def illustration_family() -> BoxFamily:
    """Restricted family with parts of sizes 6, 4, 2 and five triple intersections.

    After rescaling, the triple intersections sit over the grid points
    (3, 2), (3, 4), (5, 2), (5, 4) at height 19/10 and (4, 3) at height 5/2.
    Three of them lie in the diagonal slice through anchor (2, 1).
    """
    red = [[(x, x), y, z] for x, y, z in _RED]
    blue = [[x, (y, y), z] for y, x, z in _BLUE]
    green = [[x, y, (z, z)] for z, x, y in _GREEN]
    return BoxFamily.from_pairs(canonical_direction_vector(3), [red, blue, green])


ILLUSTRATION_HEIGHTS = (Fraction(19, 10), Fraction(5, 2))
