"""The bound shape g_t and instance-level checks of the explicit inequalities.

A check proves nothing in general; it compares one measured edge count with one
right-hand side, after confirming the instance is inside the inequality's
hypotheses (conforming shape, biclique-free at the relevant pattern).
"""

from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .errors import BudgetExceeded, ForbiddenPattern, PreconditionError


def g_t(n_vec: Sequence[int], t: int) -> int:
    """t * n_1 ... n_r * (1/n_1 + ... + 1/n_r), i.e. t * sum_j prod_{i != j} n_i."""
    n_vec = list(n_vec)
    if any(n < 1 for n in n_vec):
        raise PreconditionError(f"sizes must be positive, got {n_vec}")
    return t * sum(prod(n for i, n in enumerate(n_vec) if i != j) for j in range(len(n_vec)))


class Formula(str, enum.Enum):
    """Right-hand sides, for biclique-free instances.

    RESTRICTED_27  restricted canonical family: e <= 27 g_t(n)
    PLANAR_27T     m horizontal vs n vertical segments: e <= 27 t (m + n)
    ONE_DIM        any r-family on the line: e < 4^(r-1) g_t(n)
    POINT_SEG      m points vs n segments, K_{s,t}-free: e < m t + 3 n s
    SEG_SEG        m vs n segments, K_{s,t}-free: e < 4 (m t + n s)
    R_SEG          r families of segments: e < 4^(r-1) g_t(n)
    """

    RESTRICTED_27 = "RESTRICTED_27"
    PLANAR_27T = "PLANAR_27T"
    ONE_DIM = "ONE_DIM"
    POINT_SEG = "POINT_SEG"
    SEG_SEG = "SEG_SEG"
    R_SEG = "R_SEG"


# The one-dimensional bounds are strict; the planar and restricted ones are not.
STRICT = {
    Formula.RESTRICTED_27: False,
    Formula.PLANAR_27T: False,
    Formula.ONE_DIM: True,
    Formula.POINT_SEG: True,
    Formula.SEG_SEG: True,
    Formula.R_SEG: True,
}


@dataclass(frozen=True)
class BoundReport:
    formula_id: Formula
    measured_edges: int
    bound_value: int
    satisfied: bool | None
    context: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.satisfied is None:
            return "inconclusive"
        return "satisfied" if self.satisfied else "violated"

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.measured_edges, self.bound_value) if self.bound_value else Fraction(0)


def _bound_value(formula: Formula, obj, t: int, s: int) -> tuple[int, Sequence[int], dict]:
    from .directions import DirectionVector, is_restricted
    from .family import BoxFamily
    from .hypergraph import PlanarInstance

    if formula is Formula.PLANAR_27T:
        if not isinstance(obj, PlanarInstance):
            raise PreconditionError("PLANAR_27T applies to planar segment instances")
        m, n = obj.sizes
        if m == 0 or n == 0:
            raise PreconditionError("PLANAR_27T needs nonempty segment classes")
        return 27 * t * (m + n), (t, t), {"m": m, "n": n}

    if not isinstance(obj, BoxFamily):
        raise PreconditionError(f"{formula.value} applies to box families")
    F = obj.direction_vector
    sizes = obj.sizes
    if any(n == 0 for n in sizes):
        raise PreconditionError("all parts must be nonempty")

    if formula is Formula.RESTRICTED_27:
        if not is_restricted(obj):
            raise PreconditionError("RESTRICTED_27 needs a restricted canonical family")
        return 27 * g_t(sizes, t), (t,) * obj.r, {"sizes": sizes}

    if F.dimension != 1:
        raise PreconditionError(f"{formula.value} is a one-dimensional bound, family has d={F.dimension}")
    if formula is Formula.ONE_DIM:
        return 4 ** (obj.r - 1) * g_t(sizes, t), (t,) * obj.r, {"sizes": sizes}
    if formula is Formula.R_SEG:
        if any(Fj != {1} for Fj in F.sets):
            raise PreconditionError("R_SEG needs every part to be segments")
        return 4 ** (obj.r - 1) * g_t(sizes, t), (t,) * obj.r, {"sizes": sizes}
    if obj.r != 2:
        raise PreconditionError(f"{formula.value} is bipartite")
    m, n = sizes
    if formula is Formula.POINT_SEG:
        if F != DirectionVector.of(1, set(), {1}):
            raise PreconditionError("POINT_SEG needs (points, segments)")
        return m * t + 3 * n * s, (s, t), {"m": m, "n": n, "s": s}
    if formula is Formula.SEG_SEG:
        if F != DirectionVector.of(1, {1}, {1}):
            raise PreconditionError("SEG_SEG needs two families of segments")
        return 4 * (m * t + n * s), (s, t), {"m": m, "n": n, "s": s}
    raise PreconditionError(f"unknown formula {formula}")


def check_bound(
    formula: Formula | str,
    obj,
    t: int,
    s: int | None = None,
    known_free: bool | None = None,
    budget_nodes: int | None = None,
) -> BoundReport:
    """Compare the measured edge count of ``obj`` with the formula's right-hand side.

    ``s`` is the pattern size on the first side for the bipartite K_{s,t}
    bounds (defaults to ``t``).  Pass ``known_free=True`` when a biclique
    search has already been run; otherwise one is run here, and a budget
    overrun yields an inconclusive report.
    """
    from .hypergraph import DEFAULT_NODE_BUDGET, count_hyperedges, find_biclique

    formula = Formula(formula)
    if t < 2:
        raise PreconditionError("t must be at least 2")
    s = t if s is None else s
    bound, pattern, ctx = _bound_value(formula, obj, t, s)
    ctx = {**ctx, "t": t}
    measured = count_hyperedges(obj).edge_count
    if known_free is None:
        try:
            witness = find_biclique(obj, t, sizes=pattern, budget_nodes=budget_nodes or DEFAULT_NODE_BUDGET)
        except BudgetExceeded:
            return BoundReport(formula, measured, bound, None, ctx)
        if witness is not None:
            raise ForbiddenPattern(f"instance contains the forbidden pattern {pattern}: {witness.indices}")
    elif not known_free:
        raise ForbiddenPattern("bound checks require a biclique-free instance")
    ok = measured < bound if STRICT[formula] else measured <= bound
    return BoundReport(formula, measured, bound, ok, ctx)


@dataclass
class SweepSummary:
    formula: Formula
    reports: list[BoundReport]
    rejected: int = 0
    counterexamples: list[Path] = field(default_factory=list)

    @property
    def violations(self) -> list[BoundReport]:
        return [r for r in self.reports if r.satisfied is False]

    @property
    def inconclusive(self) -> int:
        return sum(1 for r in self.reports if r.satisfied is None)

    @property
    def max_ratio(self) -> Fraction:
        return max((r.ratio for r in self.reports), default=Fraction(0))


def asymmetric_bound_sweep(
    formula: Formula | str,
    generator: Callable[..., object],
    grid: Iterable[dict],
    seed: int = 0,
    counterexample_dir: str | Path | None = None,
    budget_nodes: int | None = None,
) -> SweepSummary:
    """Run ``check_bound`` over generated instances.

    Each grid entry is a dict with ``t`` (and optionally ``s`` and
    ``samples``); the remaining keys go to ``generator(rng, **kwargs)``.
    Instances that turn out to contain the forbidden pattern are skipped and
    counted as rejected.  Violations are written as family files to
    ``counterexample_dir`` when given.
    """
    from .serialization import dump_instance

    formula = Formula(formula)
    rng = random.Random(seed)
    summary = SweepSummary(formula, [])
    for params in grid:
        params = dict(params)
        t = params.pop("t")
        s = params.pop("s", None)
        samples = params.pop("samples", 1)
        for _ in range(samples):
            inst = generator(rng, **params)
            try:
                rep = check_bound(formula, inst, t, s=s, budget_nodes=budget_nodes)
            except ForbiddenPattern:
                summary.rejected += 1
                continue
            summary.reports.append(rep)
            if rep.satisfied is False and counterexample_dir is not None:
                out = Path(counterexample_dir)
                out.mkdir(parents=True, exist_ok=True)
                path = out / f"{formula.value}_{len(summary.counterexamples):04d}.json"
                path.write_text(json.dumps({"report": report_dict(rep), "instance": dump_instance(inst)}, indent=1))
                summary.counterexamples.append(path)
    return summary


def report_dict(rep: BoundReport) -> dict:
    return {
        "formula": rep.formula_id.value,
        "measured_edges": rep.measured_edges,
        "bound_value": rep.bound_value,
        "status": rep.status,
        "context": {k: list(v) if isinstance(v, tuple) else v for k, v in rep.context.items()},
    }
