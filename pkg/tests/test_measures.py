import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from planarbox import (
    Point,
    entropy,
    inversions,
    local_insertion_complexity,
    make_score_function,
    measure_report,
    position_variation,
    resort_within_stripes,
    runs,
    stripes,
)
from planarbox.oracle import oracle_measures
import planarbox.generators as gen

F = make_score_function("sum")


def test_frozen_sequence():
    seq = (3, 2, 4, 1, 5)
    assert local_insertion_complexity(seq) == 8
    assert inversions(seq) == 4
    count, lengths = runs(seq)
    assert count == 3
    assert sorted(lengths) == [1, 2, 2]


def test_lam_extremes():
    assert local_insertion_complexity((1, 2, 3, 4, 5)) == 4
    assert local_insertion_complexity((5, 4, 3, 2, 1)) == 0


def test_lam_rejects_duplicates():
    with pytest.raises(ValueError):
        local_insertion_complexity((1, 1, 2))


def test_runs_and_inversions_edges():
    assert runs((7,)) == (1, [1])
    assert inversions((7,)) == 0
    assert inversions((1, 2, 3)) == 0
    assert inversions((3, 2, 1)) == 3


def test_entropy():
    assert entropy([4]) == 0.0
    assert entropy([2, 2]) == pytest.approx(1.0)
    assert entropy([1, 1, 1, 1]) == pytest.approx(2.0)


def test_position_variation():
    # sum of |pi_j - pi_(j-1)| over final sorted positions
    assert position_variation((1, 2, 3, 4)) == 3
    assert position_variation((2, 1)) == 1
    assert position_variation((2, 4, 1, 3)) == 2 + 3 + 2


@settings(max_examples=100, deadline=None)
@given(st.permutations(list(range(12))))
def test_lam_bounded_by_position_variation(perm):
    assert local_insertion_complexity(perm) <= position_variation(perm)


@settings(max_examples=150, deadline=None)
@given(st.permutations(list(range(1, 13))))
def test_measures_match_oracle(perm):
    om = oracle_measures(perm)
    assert local_insertion_complexity(perm) == om["lam"]
    assert inversions(perm) == om["inv"]
    count, lengths = runs(perm)
    assert count == om["rho"]
    assert lengths == om["run_lengths"]


@settings(max_examples=100, deadline=None)
@given(st.permutations(list(range(16))))
def test_inv_lower_bound_by_lam(perm):
    assert inversions(perm) >= local_insertion_complexity(perm) / 2 - len(perm)


def test_stripes_decomposition():
    pts = gen.stripe_instance(60, 4, 7)
    sd = stripes(pts, F)
    assert sd.delta == 4
    assert sum(sd.sizes) == 60
    # stripes alternate sign top-down and the topmost is positive
    signs = []
    for sign, block in sd.stripes:
        s = {F.point_score(p) > F.empty_score for p in block}
        assert len(s) == 1
        signs.append(s.pop())
        assert (sign == "positive") is signs[-1]
    assert signs[-1] is True  # topmost stripe positive
    for a, b in zip(signs, signs[1:]):
        assert a != b


def test_stripes_bound_by_sign_counts():
    rng = random.Random(5)
    for trial in range(50):
        n = rng.randint(1, 40)
        pts = gen.uniform_random(n, trial)
        sd = stripes(pts, F)
        p = sum(1 for q in pts if F.point_score(q) > F.empty_score)
        assert sd.delta <= 1 + 2 * min(p, n - p)


def test_stripes_empty_raises():
    with pytest.raises(ValueError):
        stripes([], F)


def test_resort_within_stripes_invariants():
    rng = random.Random(11)
    for trial in range(60):
        n = rng.randint(2, 80)
        delta = rng.randint(1, max(1, min(8, n)))
        pts = gen.stripe_instance(n, delta, trial)
        sd = stripes(pts, F)
        xs_before = [p.x for p in sorted(pts, key=lambda p: (p.y, p.id))]
        xs_after = resort_within_stripes(pts, sd)
        assert sorted(xs_after) == sorted(xs_before)
        assert inversions(xs_after) <= inversions(xs_before)
        count, lengths = runs(xs_after)
        assert count <= sd.delta
        assert entropy(lengths) <= entropy(sd.sizes) + 1e-9


def test_measure_report_consistency():
    pts = gen.stripe_instance(100, 4, 3)
    mr = measure_report(pts, F)
    assert mr.n == 100
    assert mr.delta == 4
    xs = [p.x for p in sorted(pts, key=lambda p: (p.y, p.id))]
    assert mr.lam == local_insertion_complexity(xs)
    assert mr.inv == inversions(xs)
    assert mr.rho == runs(xs)[0]
    assert mr.position_variation == position_variation(xs)
    assert mr.rho_resorted <= mr.delta
    d = mr.as_dict()
    assert d["n"] == 100 and "lam_resorted" in d
