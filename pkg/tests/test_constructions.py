import pytest

from boxzar.bounds import g_t
from boxzar.constructions import (
    amplify_copies,
    coherent_lower_bound,
    digit_reverse,
    digit_reversal_family,
    expected_pipeline_edges,
    grouped_family,
    lift_family,
    planar_coherent_family,
    planar_projection,
    trivial_family,
)
from boxzar.directions import DirectionVector, canonical_direction_vector
from boxzar.errors import PreconditionError
from boxzar.hypergraph import count_hyperedges, find_biclique


def test_trivial_counts():
    rep = trivial_family(DirectionVector.of(2, {1}, {2}), 5, 3)
    assert rep.recount() == 2 * 5 == rep.claimed_edges
    assert rep.validate()
    with pytest.raises(PreconditionError):
        trivial_family(DirectionVector.of(2, {1}, {2}), 2, 3)


def test_grouped_counts_and_certificate():
    F = canonical_direction_vector(3)
    rep = grouped_family(F, (6, 6, 9), 2)
    assert rep.recount() == g_t((6, 6, 9), 2) // 9
    # Each group holds a K_{t,t,t}; the certificate is one size up.
    assert find_biclique(rep.family, 2) is not None
    assert rep.validate()
    with pytest.raises(PreconditionError):
        grouped_family(F, (6, 6, 7), 2)


def test_digit_reverse():
    assert [digit_reverse(x, 2, 3) for x in range(8)] == [0, 4, 2, 6, 1, 5, 3, 7]
    assert digit_reverse(5, 3, 2) == 7


def test_digit_reversal_shape():
    rep = digit_reversal_family(2, 3)
    points, rects = rep.family.parts
    assert len(points) == 8 and len(rects) == 12
    assert rep.recount() == 24
    edges = count_hyperedges(rep.family, list_edges=True).edges
    per_rect = [sum(1 for _, r in edges if r == k) for k in range(len(rects))]
    assert per_rect == [2] * 12


def test_amplify_multiplies_edges():
    rep = amplify_copies(digit_reversal_family(2, 2), 3)
    assert rep.family.sizes == (8, 8) and rep.recount() == 8 * 4
    assert rep.validate()
    assert find_biclique(rep.family, 2) is not None


def test_planar_family_for_points_and_boxes():
    F = DirectionVector.of(2, {1}, {1, 2}, {1, 2})
    base = digit_reversal_family(2, 2)
    rep = planar_coherent_family(F, base)
    assert rep.family.sizes == (4, 4, 4)
    assert rep.recount() == 8 * 4
    assert rep.validate()


def test_planar_needs_coherence():
    with pytest.raises(PreconditionError):
        planar_coherent_family(DirectionVector.of(2, {1}, {2}), digit_reversal_family(2, 2))


def test_projection_and_lift():
    F = DirectionVector.of(3, {1, 3}, {1, 2, 3}, {3})
    assert planar_projection(F) == DirectionVector.of(2, {1, 2}, {1, 2}, {2})
    planar = planar_coherent_family(planar_projection(F), digit_reversal_family(2, 2))
    lifted = lift_family(F, planar)
    assert lifted.family.direction_vector == F
    assert count_hyperedges(lifted.family, list_edges=True).edges == count_hyperedges(planar.family, list_edges=True).edges


def test_pipeline_full_boxes_in_space():
    F = DirectionVector.of(3, {1, 2, 3}, {1, 2, 3}, {1, 2, 3})
    rep = coherent_lower_bound(F, 2, 2, 3)
    assert rep.recount() == expected_pipeline_edges(2, 2, 3, 3)
    assert rep.validate()
