from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from boxzar.errors import DimensionMismatch, PreconditionError
from boxzar.geometry import (
    Box,
    Interval,
    Point,
    as_rational,
    bounding_box,
    box_intersect,
    boxes_intersect,
    fold_intersect,
    helly_pierce,
    min_positive_gap,
)

from strategies import boxes


def test_as_rational_accepts_exact_values():
    assert as_rational("1/3") == Fraction(1, 3)
    assert as_rational(4) == Fraction(4)
    assert as_rational(Fraction(2, 6)) == Fraction(1, 3)


@pytest.mark.parametrize("bad", [0.5, True, None, [1]])
def test_as_rational_rejects_inexact(bad):
    with pytest.raises(TypeError):
        as_rational(bad)


def test_empty_interval_rejected():
    with pytest.raises(PreconditionError):
        Interval(2, 1)


def test_direction_set_counts_open_axes():
    b = Box.from_pairs([(0, 0), (1, 3), ("1/2", "1/2")])
    assert b.direction_set == frozenset({2})
    assert Box.point((1, 2)).direction_set == frozenset()


def test_touching_boxes_intersect_in_a_face():
    a = Box.from_pairs([(0, 1), (0, 1)])
    b = Box.from_pairs([(1, 2), (0, 1)])
    assert box_intersect([a, b]) == Box.from_pairs([(1, 1), (0, 1)])


def test_disjoint_boxes():
    a = Box.from_pairs([(0, 1), (0, 1)])
    b = Box.from_pairs([(2, 3), (0, 1)])
    assert box_intersect([a, b]) is None
    assert not boxes_intersect(a, b)


def test_point_on_segment():
    seg = Box.from_pairs([(0, 4), (2, 2)])
    assert seg.contains_point(Point((4, 2)))
    assert not seg.contains_point(Point((4, 3)))
    with pytest.raises(DimensionMismatch):
        seg.contains_point(Point((1,)))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        box_intersect([Box.point((0,)), Box.point((0, 0))])


def test_gap_and_bounding_box():
    assert min_positive_gap([Fraction(1), Fraction(1, 2), Fraction(3)]) == Fraction(1, 2)
    assert min_positive_gap([Fraction(1)] * 3) is None
    bb = bounding_box([Box.point((0, 5)), Box.from_pairs([(2, 3), (-1, 0)])])
    assert bb == Box.from_pairs([(0, 3), (-1, 5)])


def test_translated_is_one_based():
    b = Box.point((0, 0)).translated(2, "1/2")
    assert b == Box.point((0, Fraction(1, 2)))


@given(st.lists(boxes(d=2), min_size=1, max_size=5))
def test_helly_pierce_matches_full_intersection(bs):
    full = box_intersect(bs)
    p = helly_pierce(bs)
    assert (full is None) == (p is None)
    if p is not None:
        assert all(b.contains_point(p) for b in bs)


@given(st.lists(boxes(d=3), min_size=1, max_size=5))
def test_fold_agrees_with_direct_intersection(bs):
    assert fold_intersect(bs) == box_intersect(bs)


@given(boxes(d=2), boxes(d=2))
def test_intersection_is_symmetric(a, b):
    assert box_intersect([a, b]) == box_intersect([b, a])
    assert boxes_intersect(a, b) == (box_intersect([a, b]) is not None)
