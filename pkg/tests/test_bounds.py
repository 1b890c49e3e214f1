import json
import random

import pytest

from boxzar.bounds import Formula, asymmetric_bound_sweep, check_bound, g_t
from boxzar.directions import DirectionVector, canonical_direction_vector
from boxzar.errors import ForbiddenPattern, PreconditionError
from boxzar.family import BoxFamily
from boxzar.geometry import Box
from boxzar.hypergraph import PlanarInstance
from boxzar.serialization import load_instance
from boxzar.sweeps import run_default_sweep

PS = DirectionVector.of(1, set(), {1})


def test_g_t():
    assert g_t((2, 3), 2) == 2 * (3 + 2)
    assert g_t((2, 3, 4), 1) == 12 + 8 + 6
    with pytest.raises(PreconditionError):
        g_t((0, 1), 2)


def test_point_segment_bound():
    fam = BoxFamily.from_pairs(PS, [[[(0, 0)], [(3, 3)]], [[(0, 1)], [(2, 4)]]])
    rep = check_bound(Formula.POINT_SEG, fam, 2)
    assert rep.measured_edges == 2 and rep.bound_value == 2 * 2 + 3 * 2 * 2
    assert rep.satisfied and rep.status == "satisfied"


def test_bound_rejects_wrong_shape_and_patterns():
    seg = DirectionVector.of(1, {1}, {1})
    fam = BoxFamily.from_pairs(seg, [[[(0, 1)]] * 2, [[(0, 1)]] * 2])
    with pytest.raises(PreconditionError):
        check_bound(Formula.POINT_SEG, fam, 2)
    with pytest.raises(ForbiddenPattern):
        check_bound(Formula.SEG_SEG, fam, 2)
    with pytest.raises(PreconditionError):
        check_bound(Formula.RESTRICTED_27, fam, 2)


def test_planar_bound():
    inst = PlanarInstance(
        (Box.from_pairs([(0, 4), (1, 1)]),),
        (Box.from_pairs([(1, 1), (0, 2)]), Box.from_pairs([(3, 3), (0, 2)])),
    )
    rep = check_bound("PLANAR_27T", inst, 2)
    assert rep.measured_edges == 2 and rep.bound_value == 27 * 2 * 3


def test_restricted_bound():
    fam = BoxFamily.from_pairs(canonical_direction_vector(3), [
        [[(1, 1), (0, 3), (0, 3)], [(2, 2), (0, 3), (0, 3)]],
        [[(0, 3), (1, 1), (0, 3)]],
        [[(0, 3), (0, 3), (1, 1)]],
    ])
    rep = check_bound(Formula.RESTRICTED_27, fam, 2)
    assert rep.measured_edges == 2 and rep.satisfied


def test_inconclusive_on_budget():
    rng = random.Random(0)
    from boxzar.random_families import random_family

    fam = random_family(rng, DirectionVector.of(1, {1}, {1}, {1}), (10, 10, 10), grid=30)
    rep = check_bound(Formula.R_SEG, fam, 3, budget_nodes=1)
    assert rep.satisfied is None and rep.status == "inconclusive"


def test_sweep_writes_counterexamples(tmp_path):
    # A fake "bound" that a dense instance violates exercises the reporting path.
    def gen(rng):
        return BoxFamily.from_pairs(PS, [[[(0, 0)]], [[(0, 1)]]])

    summary = asymmetric_bound_sweep("POINT_SEG", gen, [{"t": 2, "samples": 3}], counterexample_dir=tmp_path)
    assert len(summary.reports) == 3 and not summary.violations and not summary.counterexamples

    import boxzar.bounds as bounds

    orig = bounds._bound_value
    try:
        bounds._bound_value = lambda *a: (1, (2, 2), {})
        summary = asymmetric_bound_sweep("POINT_SEG", gen, [{"t": 2, "samples": 2}], counterexample_dir=tmp_path)
    finally:
        bounds._bound_value = orig
    assert len(summary.violations) == 2 and len(summary.counterexamples) == 2
    data = json.loads(summary.counterexamples[0].read_text())
    assert data["report"]["status"] == "violated"
    assert load_instance(data["instance"]).sizes == (1, 1)


@pytest.mark.parametrize("formula", list(Formula))
def test_small_default_sweeps(formula):
    summary = run_default_sweep(formula, samples=60, seed=1)
    assert summary.reports and not summary.violations
