"""Default random sweeps for every bound formula.

Each formula gets a generator ``gen(rng, **kwargs)`` and a parameter grid in
the format expected by :func:`boxzar.bounds.asymmetric_bound_sweep`.  Grids
mix pattern sizes and part sizes and lean towards sparse instances so that a
good share of the draws are biclique-free and therefore admissible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .bounds import Formula, SweepSummary, asymmetric_bound_sweep
from .directions import DirectionVector
from .random_families import random_family, random_planar, random_restricted

POINTS_SEGMENTS = DirectionVector.of(1, set(), {1})
SEGMENTS = DirectionVector.of(1, {1}, {1})
SEGMENTS3 = DirectionVector.of(1, {1}, {1}, {1})


def gen_one_dim(rng: random.Random, r: int, n_max: int, grid: int):
    F = DirectionVector(1, tuple(frozenset({1}) if rng.random() < 0.5 else frozenset() for _ in range(r)))
    return random_family(rng, F, [rng.randint(1, n_max) for _ in range(r)], grid)


def gen_fixed(F: DirectionVector):
    def gen(rng: random.Random, n_max: int, grid: int):
        return random_family(rng, F, [rng.randint(1, n_max) for _ in range(F.r)], grid)

    gen.__name__ = f"gen_{F}"
    return gen


def gen_planar(rng: random.Random, n_max: int, grid: int):
    return random_planar(rng, rng.randint(1, n_max), rng.randint(1, n_max), grid)


def gen_restricted(rng: random.Random, n_max: int, grid: int):
    return random_restricted(rng, 3, [rng.randint(1, n_max) for _ in range(3)], grid)


@dataclass(frozen=True)
class SweepSpec:
    generator: Callable[..., object]
    grid: tuple[dict, ...]


def _grid(samples: int, entries: list[dict]) -> tuple[dict, ...]:
    per = max(1, samples // len(entries))
    return tuple({**e, "samples": per} for e in entries)


def default_spec(formula: Formula | str, samples: int = 1600) -> SweepSpec:
    """Generator and grid drawing about ``samples`` instances for ``formula``."""
    formula = Formula(formula)
    if formula is Formula.ONE_DIM:
        entries = [
            {"t": t, "r": r, "n_max": n, "grid": g}
            for t in (2, 3) for r in (2, 3) for n, g in ((4, 8), (6, 14))
        ]
        return SweepSpec(gen_one_dim, _grid(samples, entries))
    if formula is Formula.POINT_SEG:
        entries = [
            {"t": t, "s": s, "n_max": n, "grid": g}
            for t in (2, 3) for s in (1, 2, 3) for n, g in ((5, 8), (8, 14))
        ]
        return SweepSpec(gen_fixed(POINTS_SEGMENTS), _grid(samples, entries))
    if formula is Formula.SEG_SEG:
        entries = [
            {"t": t, "s": s, "n_max": n, "grid": g}
            for t in (2, 3) for s in (1, 2, 3) for n, g in ((5, 10), (8, 16))
        ]
        return SweepSpec(gen_fixed(SEGMENTS), _grid(samples, entries))
    if formula is Formula.R_SEG:
        entries = [{"t": t, "n_max": n, "grid": g} for t in (2, 3) for n, g in ((4, 10), (6, 16))]
        return SweepSpec(gen_fixed(SEGMENTS3), _grid(samples, entries))
    if formula is Formula.PLANAR_27T:
        entries = [{"t": t, "n_max": n, "grid": g} for t in (2, 3) for n, g in ((6, 6), (10, 10))]
        return SweepSpec(gen_planar, _grid(samples, entries))
    if formula is Formula.RESTRICTED_27:
        entries = [{"t": t, "n_max": n, "grid": g} for t in (2, 3) for n, g in ((4, 10), (6, 12))]
        return SweepSpec(gen_restricted, _grid(samples, entries))
    raise ValueError(f"no default sweep for {formula}")


def run_default_sweep(
    formula: Formula | str,
    samples: int = 1600,
    seed: int = 0,
    counterexample_dir: str | Path | None = None,
    budget_nodes: int | None = None,
) -> SweepSummary:
    spec = default_spec(formula, samples)
    return asymmetric_bound_sweep(
        formula, spec.generator, spec.grid, seed=seed,
        counterexample_dir=counterexample_dir, budget_nodes=budget_nodes,
    )
