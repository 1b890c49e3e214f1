"""Random instance generators for tests, sweeps and experiments.

All generators take a :class:`random.Random` first and draw integer
coordinates from a small grid, so coincident endpoints (the degenerate cases
that matter) are common.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .directions import DirectionVector, canonical_direction_vector
from .family import BoxFamily
from .geometry import Box, Interval
from .hypergraph import PlanarInstance


def random_interval(rng: random.Random, grid: int, collapsed: bool) -> Interval:
    if collapsed:
        v = rng.randrange(grid)
        return Interval(v, v)
    lo, hi = sorted(rng.sample(range(grid), 2))
    return Interval(lo, hi)


def random_box(rng: random.Random, directions: frozenset[int], d: int, grid: int) -> Box:
    return Box(tuple(random_interval(rng, grid, axis not in directions) for axis in range(1, d + 1)))


def random_family(
    rng: random.Random, F: DirectionVector, sizes: Sequence[int], grid: int = 6
) -> BoxFamily:
    d = F.dimension
    return BoxFamily(F, tuple(
        tuple(random_box(rng, Fj, d, grid) for _ in range(n)) for Fj, n in zip(F.sets, sizes)
    ))


def random_direction_vector(rng: random.Random, d: int, r: int) -> DirectionVector:
    return DirectionVector(d, tuple(
        frozenset(c for c in range(1, d + 1) if rng.random() < 0.5) for _ in range(r)
    ))


def random_sizes(rng: random.Random, r: int, n_max: int, n_min: int = 1) -> list[int]:
    return [rng.randint(n_min, n_max) for _ in range(r)]


def random_canonical(rng: random.Random, d: int, sizes: Sequence[int], grid: int = 6) -> BoxFamily:
    return random_family(rng, canonical_direction_vector(d), sizes, grid)


def random_separated(rng: random.Random, d: int, sizes: Sequence[int], grid: int = 12) -> BoxFamily:
    """Canonical with distinct carriers: part i takes n_i distinct values on axis i."""
    F = canonical_direction_vector(d)
    parts = []
    for i, n in enumerate(sizes, start=1):
        carriers = rng.sample(range(max(grid, n)), n)
        part = []
        for c in carriers:
            sides = [random_interval(rng, grid, False) for _ in range(d)]
            sides[i - 1] = Interval(c, c)
            part.append(Box(tuple(sides)))
        parts.append(tuple(part))
    return BoxFamily(F, tuple(parts))


def random_restricted(
    rng: random.Random, d: int, sizes: Sequence[int], grid: int = 12, spread: int = 4
) -> BoxFamily:
    """Separated family whose parts 1..d-1 meet pairwise.

    Carriers of part i (i < d) are distinct integers; every part-i box spans
    all carriers of the other front parts along their axes, and its last
    coordinate contains a shared value, so every front transversal meets.
    Part d boxes get distinct carriers near the shared value and random
    extents elsewhere.
    """
    F = canonical_direction_vector(d)
    carriers = [rng.sample(range(max(grid, n)), n) for n in sizes[:-1]]
    # Part d sits near the shared height so that its boxes actually get hit.
    z0 = Fraction(grid, 2)
    band = range(grid // 2 - spread - 1, grid // 2 + spread + 2)
    carriers.append(rng.sample(band, sizes[-1]) if sizes[-1] <= len(band) else rng.sample(range(sizes[-1]), sizes[-1]))
    parts = []
    for i in range(d):
        part = []
        for c in carriers[i]:
            sides = []
            for a in range(d):
                if a == i:
                    sides.append(Interval(c, c))
                elif i < d - 1 and a < d - 1:
                    vals = carriers[a]
                    sides.append(Interval(min(vals) - rng.randint(0, spread), max(vals) + rng.randint(1, spread)))
                elif i < d - 1:
                    sides.append(Interval(z0 - rng.randint(0, spread) - Fraction(1, 2),
                                          z0 + rng.randint(0, spread) + Fraction(1, 2)))
                else:
                    sides.append(random_interval(rng, grid, False))
            part.append(Box(tuple(sides)))
        parts.append(tuple(part))
    return BoxFamily(F, tuple(parts))


def random_planar(rng: random.Random, m: int, n: int, grid: int = 8) -> PlanarInstance:
    """m horizontal against n vertical segments; a few may degenerate to points."""

    def seg(collapsed_axis: int) -> Box:
        sides = [random_interval(rng, grid, rng.random() < 0.1), random_interval(rng, grid, rng.random() < 0.1)]
        v = rng.randrange(grid)
        sides[collapsed_axis] = Interval(v, v)
        return Box(tuple(sides))

    return PlanarInstance(tuple(seg(1) for _ in range(m)), tuple(seg(0) for _ in range(n)))


def random_one_dim(rng: random.Random, F: DirectionVector, sizes: Sequence[int], grid: int = 10) -> BoxFamily:
    """Points and segments on a line."""
    if F.dimension != 1:
        raise ValueError("random_one_dim needs d = 1")
    return random_family(rng, F, sizes, grid)


def random_case2(rng: random.Random, d: int, r: int, sizes: Sequence[int], grid: int = 6) -> BoxFamily:
    """A family whose parts miss one coordinate each (all coordinates covered), the rest full.

    The parts are shuffled so the coordinate relabelling is exercised.
    """
    full = frozenset(range(1, d + 1))
    sets = [full - {c} for c in range(1, d + 1)] + [full] * (r - d)
    rng.shuffle(sets)
    return random_family(rng, DirectionVector(d, tuple(sets)), sizes, grid)
