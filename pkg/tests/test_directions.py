import pytest
from hypothesis import given

from boxzar.directions import (
    AuxiliaryGraph,
    DirectionVector,
    all_direction_vectors,
    auxiliary_graph,
    canonical_direction_vector,
    common_directions,
    is_2_coherent,
    is_canonical,
    is_restricted,
    is_separated,
    parse_direction_vector,
)
from boxzar.errors import DirectionParseError, PreconditionError
from boxzar.family import BoxFamily

from strategies import direction_vectors


@pytest.mark.parametrize(
    "text, coherent",
    [
        ("1: {1} {1}", False),
        ("2: {1} {2}", False),
        ("2: {} {1,2}", True),
        ("3: {1,2,3} {1,2,3} {1,2,3}", True),
    ],
)
def test_four_examples(text, coherent):
    assert is_2_coherent(parse_direction_vector(text)).coherent is coherent


def test_witness_is_smallest():
    v = is_2_coherent(DirectionVector.of(3, {1, 2, 3}, {1, 2, 3}, {1}))
    assert v.witness_k == 3 and v.witness_directions == (1, 2)
    v = is_2_coherent(DirectionVector.of(2, set(), {1, 2}))
    assert v.witness_k == 1 and v.witness_directions == (1, 2)


def test_no_coherent_vector_in_one_dimension():
    assert not any(is_2_coherent(F).coherent for r in (2, 3, 4) for F in all_direction_vectors(1, r))


def test_canonical():
    F = canonical_direction_vector(3)
    assert F.sets == (frozenset({2, 3}), frozenset({1, 3}), frozenset({1, 2}))
    assert is_canonical(F)
    assert not is_canonical(DirectionVector.of(3, {2, 3}, {1, 3}, {1, 2}, {1}))
    with pytest.raises(PreconditionError):
        canonical_direction_vector(1)


def test_parse_roundtrip_and_positions():
    F = parse_direction_vector(" 3 : {1, 3} {}{2}")
    assert str(F) == "3: {1,3} {} {2}"
    assert parse_direction_vector(str(F)) == F
    with pytest.raises(DirectionParseError) as exc:
        parse_direction_vector("2: {1} {3}")
    assert exc.value.position == 8
    for bad in ["2 {1} {2}", "2: {1 {2}", "2: {1}", "x: {} {}", "2: {1,} {2}"]:
        with pytest.raises(DirectionParseError):
            parse_direction_vector(bad)


@given(direction_vectors(max_d=4, max_r=4))
def test_coherence_matches_definition(F):
    expected = any(
        len(frozenset.intersection(*[F.sets[j] for j in range(F.r) if j != k])) >= 2 for k in range(F.r)
    )
    assert is_2_coherent(F).coherent == expected


@given(direction_vectors(max_d=4, max_r=4))
def test_dropping_a_coordinate_keeps_non_coherence(F):
    if F.dimension < 2 or is_2_coherent(F).coherent:
        return
    for axis in range(1, F.dimension + 1):
        assert not is_2_coherent(F.without_coordinate(axis)).coherent


def test_common_directions():
    F = DirectionVector.of(3, {1, 2}, {1, 2, 3}, {3})
    assert common_directions(F, 3) == {1, 2}
    assert common_directions(F, 1) == {3}


def _canonical3(xs, ys, zs):
    F = canonical_direction_vector(3)
    return BoxFamily.from_pairs(F, [
        [[(x, x), (0, 10), (0, 10)] for x in xs],
        [[(0, 10), (y, y), (0, 10)] for y in ys],
        [[(0, 10), (0, 10), (z, z)] for z in zs],
    ])


def test_separated_and_restricted():
    fam = _canonical3([1, 2], [1, 3], [5])
    assert is_separated(fam) and is_restricted(fam)
    assert not is_separated(_canonical3([1, 1], [2], [3]))
    with pytest.raises(PreconditionError):
        is_restricted(_canonical3([1, 1], [2], [3]))
    with pytest.raises(PreconditionError):
        is_separated(BoxFamily.from_pairs(DirectionVector.of(1, {1}, {1}), [[[(0, 1)]], [[(0, 1)]]]))


def test_auxiliary_graph_cases():
    fam = _canonical3([1, 2], [1, 3], [5])
    assert auxiliary_graph(fam).edges == frozenset()
    g = AuxiliaryGraph(4, frozenset({(1, 2), (3, 4)}))
    assert g.case() == "disjoint-edges"
    assert AuxiliaryGraph(3, frozenset({(1, 2), (1, 3), (2, 3)})).case() == "triangle"
    assert AuxiliaryGraph(4, frozenset({(1, 2), (1, 4)})).case() == "star"
    assert AuxiliaryGraph(4, frozenset({(1, 2), (1, 4)})).is_star(1)


def test_auxiliary_graph_detects_non_full_pair():
    F = canonical_direction_vector(3)
    fam = BoxFamily.from_pairs(F, [
        [[(1, 1), (0, 10), (0, 1)]],
        [[(0, 10), (2, 2), (5, 6)]],
        [[(0, 10), (0, 10), (3, 3)]],
    ])
    assert auxiliary_graph(fam).edges == frozenset({(1, 2), (1, 3), (2, 3)})
    assert not is_restricted(fam)


def test_enumeration_size():
    assert sum(1 for _ in all_direction_vectors(2, 3)) == 4 ** 3
    assert len(set(all_direction_vectors(2, 2))) == 16
