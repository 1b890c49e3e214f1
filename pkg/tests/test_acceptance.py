"""Acceptance gate: one test per criterion, each with its stated time limit.

A line per criterion (PASS/FAIL with wall time) is printed in the pytest
terminal summary.
"""

import contextlib
import io
import json
import random
import time
from fractions import Fraction
from itertools import combinations, product

import pytest

from boxzar.bounds import Formula, g_t
from boxzar.cli import main
from boxzar.constructions import (
    coherent_lower_bound,
    digit_reversal_family,
    expected_pipeline_edges,
    grouped_family,
    trivial_family,
)
from boxzar.directions import (
    DirectionVector,
    all_direction_vectors,
    canonical_direction_vector,
    is_2_coherent,
    is_restricted,
)
from boxzar.hypergraph import count_hyperedges, edge_set, find_biclique
from boxzar.oracle import naive_count, naive_find_biclique, zarankiewicz_bruteforce
from boxzar.random_families import (
    random_canonical,
    random_case2,
    random_direction_vector,
    random_family,
    random_restricted,
    random_separated,
    random_sizes,
)
from boxzar.reductions import MonotoneMap, apply_axis_map, rescale_to_grid, separate, slice_restricted, transfer_to_canonical
from boxzar.samples import illustration_family
from boxzar.sweeps import run_default_sweep


@contextlib.contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.1f}s, limit {seconds}s"


@pytest.mark.criterion(1, "dichotomy classification of the four examples")
def test_ac1_classification():
    cases = {
        "1: {1} {1}": False,
        "2: {1} {2}": False,
        "2: {} {1,2}": True,
        "3: {1,2,3} {1,2,3} {1,2,3}": True,
    }
    with within(1):
        for text, coherent in cases.items():
            buf = io.StringIO()
            with contextlib.redirect_stdout(buf):
                assert main(["classify", text, "--format", "json"]) == 0
            out = json.loads(buf.getvalue())
            assert out["coherent"] is coherent
            assert out["branch"] == ("Ω(t n^{r−1} log n/log log n)" if coherent else "Θ_r(t n^{r−1})")


TRIVIAL_VECTORS = {
    2: ["1: {1} {1}", "2: {1} {2}", "2: {} {1,2}"],
    3: ["1: {1} {1} {1}", "3: {2,3} {1,3} {1,2}", "2: {} {1,2} {1}"],
    4: ["1: {1} {1} {} {1}", "4: {2,3,4} {1,3,4} {1,2,4} {1,2,3}", "3: {1,2,3} {1,2,3} {1,2,3} {}"],
}


@pytest.mark.criterion(2, "trivial construction counts and freeness")
def test_ac2_trivial():
    with within(10):
        for r, texts in TRIVIAL_VECTORS.items():
            for text in texts:
                F = DirectionVector.parse(text)
                for t in (2, 3):
                    for n in range(t, 7):
                        rep = trivial_family(F, n, t)
                        assert count_hyperedges(rep.family).edge_count == (t - 1) * n ** (r - 1)
                        assert find_biclique(rep.family, t) is None


@pytest.mark.criterion(3, "grouped construction counts")
def test_ac3_grouped():
    vectors = {2: DirectionVector.of(2, {1}, {2}), 3: canonical_direction_vector(3)}
    with within(10):
        for r, F in vectors.items():
            for t in (2, 3):
                entries = [n for n in range(r, 13, r) if n // r >= t]
                for n_vec in product(entries, repeat=r):
                    rep = grouped_family(F, n_vec, t)
                    e = count_hyperedges(rep.family).edge_count
                    assert e * r ** (r - 1) == g_t(n_vec, t)
                    assert find_biclique(rep.family, t + 1) is None


@pytest.mark.criterion(4, "digit-reversal incidences and K22-freeness")
def test_ac4_digit_reversal():
    with within(30):
        for b, k in [(2, 2), (2, 3), (3, 2), (3, 3)]:
            rep = digit_reversal_family(b, k)
            points, rects = rep.family.parts
            edges = count_hyperedges(rep.family, list_edges=True).edges
            assert len(edges) == k * b ** k
            inside = [set() for _ in rects]
            for p, q in edges:
                inside[q].add(p)
            assert all(len(s) == b for s in inside)
            # K_{2,2} would need two rectangles sharing two points.
            assert all(len(a & c) <= 1 for a, c in combinations(inside, 2))
            if b == k == 3:
                assert rep.family.sizes == (27, 27)
                assert Fraction(len(edges), len(points)) == 3


@pytest.mark.criterion(5, "lower-bound pipeline over all 2-coherent F with d, r <= 3")
def test_ac5_pipeline():
    vectors = [
        F for d in (2, 3) for r in (2, 3) for F in all_direction_vectors(d, r) if is_2_coherent(F).coherent
    ]
    bases = [(b, k) for b in range(2, 28) for k in range(1, 6) if b ** k <= 27]
    with within(120):
        for F in vectors:
            for b, k in bases:
                for t in (2, 3):
                    rep = coherent_lower_bound(F, b, k, t)
                    assert rep.family.direction_vector == F
                    assert count_hyperedges(rep.family).edge_count == expected_pipeline_edges(b, k, t, F.r)
                    assert find_biclique(rep.family, t) is None


@pytest.mark.criterion(6, "reductions preserve the provenance-indexed edge set")
def test_ac6_reductions():
    rng = random.Random(6)
    bad = {"separate": 0, "rescale": 0, "transfer": 0}
    with within(60):
        for _ in range(100):
            d = rng.randint(2, 4)
            fam = random_canonical(rng, d, random_sizes(rng, d, 6), grid=5)
            bad["separate"] += edge_set(separate(fam)) != edge_set(fam)
        for _ in range(100):
            d = rng.randint(2, 4)
            fam = random_separated(rng, d, random_sizes(rng, d, 6))
            bad["rescale"] += edge_set(rescale_to_grid(fam)) != edge_set(fam)
        for _ in range(100):
            d = rng.randint(1, 4)
            r = rng.randint(max(2, d), 4)
            fam = random_case2(rng, d, r, random_sizes(rng, r, 6))
            bad["transfer"] += edge_set(transfer_to_canonical(fam)) != edge_set(fam)
    assert bad == {"separate": 0, "rescale": 0, "transfer": 0}


def _check_slices(fam, t):
    dec = slice_restricted(fam)
    c = dec.checks
    assert c["sum_edges"] == c["edges"] == count_hyperedges(fam).edge_count
    assert c["sum_T"] == c["prod_n"]
    assert c["max_S"] <= c["n_d"]
    assert c["anchors"] <= c["anchor_bound"]
    free = find_biclique(dec.family, t) is None
    for k, sl in enumerate(dec.slices):
        w = find_biclique(sl.instance, t)
        if free:
            assert w is None
        elif w is not None:
            assert dec.verify_witness(k, w)
    return dec


@pytest.mark.criterion(7, "slicing accounting and freeness propagation")
def test_ac7_slicing():
    rng = random.Random(7)
    with within(60):
        fam = illustration_family()
        assert is_restricted(fam)
        dec = _check_slices(fam, 2)
        assert len(dec.anchors) == 9 and dec.checks["sum_T"] == 24
        grid = rescale_to_grid(fam)
        assert sorted(b.sides[0].lo for b in grid.part(1)) == list(range(1, 7))
        assert sorted(b.sides[1].lo for b in grid.part(2)) == list(range(1, 5))
        by_anchor = {sl.anchor: sl.edge_count() for sl in dec.slices}
        assert by_anchor[(2, 1)] == 3
        for _ in range(50):
            fam = random_restricted(rng, 3, random_sizes(rng, 3, 6))
            for t in (2, 3):
                _check_slices(fam, t)


SWEEP_FORMULAS = [
    Formula.ONE_DIM, Formula.POINT_SEG, Formula.SEG_SEG, Formula.R_SEG, Formula.PLANAR_27T, Formula.RESTRICTED_27,
]


@pytest.mark.criterion(8, "bound compliance sweeps")
def test_ac8_bounds(tmp_path):
    with within(300):
        for formula in SWEEP_FORMULAS:
            summary = run_default_sweep(formula, seed=8, counterexample_dir=tmp_path)
            assert len(summary.reports) >= 500, (formula, len(summary.reports))
            assert summary.inconclusive == 0
            assert not summary.violations, summary.counterexamples


@pytest.mark.criterion(9, "oracle exactness and fast-path agreement")
def test_ac9_oracle():
    seg = DirectionVector.of(1, {1}, {1})
    rng = random.Random(9)
    with within(300):
        res = zarankiewicz_bruteforce(seg, (2, 2), 2)
        assert res.exhausted and res.z_value == 3
        res = zarankiewicz_bruteforce(seg, (1, 1), 2)
        assert res.exhausted and res.z_value == 1
        for _ in range(1000):
            d = rng.randint(1, 3)
            r = rng.randint(2, 4)
            F = random_direction_vector(rng, d, r)
            fam = random_family(rng, F, random_sizes(rng, r, 5, 0), grid=rng.choice([3, 5, 8]))
            assert count_hyperedges(fam).edge_count == naive_count(fam)
        for _ in range(500):
            d = rng.randint(1, 2)
            r = rng.randint(2, 3)
            t = rng.randint(2, 3)
            F = random_direction_vector(rng, d, r)
            fam = random_family(rng, F, random_sizes(rng, r, 6 if r == 2 else 4), grid=rng.choice([3, 5]))
            assert (find_biclique(fam, t) is None) == (naive_find_biclique(fam, t) is None)


@pytest.mark.criterion(10, "monotone remaps leave edge counts unchanged")
def test_ac10_discretization():
    rng = random.Random(10)
    with within(30):
        for _ in range(200):
            d = rng.randint(1, 3)
            r = rng.randint(2, 3)
            F = random_direction_vector(rng, d, r)
            fam = random_family(rng, F, random_sizes(rng, r, 5), grid=6)
            axis = rng.randint(1, d)
            xs = sorted(rng.sample(range(-2, 10), 4))
            ys = [Fraction(0)]
            for _ in xs[1:]:
                ys.append(ys[-1] + Fraction(rng.randint(1, 9), rng.randint(1, 4)))
            f = MonotoneMap(tuple(zip(map(Fraction, xs), ys)))
            out = apply_axis_map(fam, axis, f)
            assert count_hyperedges(out).edge_count == count_hyperedges(fam).edge_count
            assert edge_set(out) == edge_set(fam)
