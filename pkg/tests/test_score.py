import math

import pytest
from hypothesis import given, strategies as st

from planarbox import (
    NEG_INF,
    OpCounters,
    Point,
    classify_sign,
    compose,
    make_score_function,
    POSITIVE,
    NEGATIVE,
)


ALL_NAMES = ["sum", "count", "discrepancy", "boxnored", "maxweight"]


def test_registry_names():
    for name in ALL_NAMES:
        f = make_score_function(name)
        assert f.name == name
    with pytest.raises(ValueError):
        make_score_function("nope")


def test_empty_scores():
    assert make_score_function("sum").empty_score == 0
    assert make_score_function("count").empty_score == 0
    assert make_score_function("discrepancy").empty_score == 0
    assert make_score_function("boxnored").empty_score == 0
    assert make_score_function("maxweight").empty_score == NEG_INF


def test_point_scores():
    blue = Point(0, 0, 5, "blue", 0)
    red = Point(1, 1, -3, "red", 1)
    assert make_score_function("sum").point_score(blue) == 5
    assert make_score_function("sum").point_score(red) == -3
    assert make_score_function("count").point_score(red) == 1
    assert make_score_function("discrepancy").point_score(blue) == 1
    assert make_score_function("discrepancy").point_score(red) == -1
    assert make_score_function("boxnored").point_score(blue) == 1
    assert make_score_function("boxnored").point_score(red) == NEG_INF
    assert make_score_function("maxweight").point_score(blue) == 5


def test_compose_charges_one():
    f = make_score_function("sum")
    ctr = OpCounters()
    assert compose(f, 2, 3, ctr) == 5
    assert ctr.score_compositions == 1


def test_boxnored_saturates():
    f = make_score_function("boxnored")
    ctr = OpCounters()
    assert compose(f, NEG_INF, 1, ctr) == NEG_INF
    assert compose(f, 1, NEG_INF, ctr) == NEG_INF
    assert compose(f, NEG_INF, NEG_INF, ctr) == NEG_INF


def test_maxweight_identity():
    # for maxweight the empty score is the identity of g = max
    f = make_score_function("maxweight")
    ctr = OpCounters()
    assert compose(f, f.empty_score, 7, ctr) == 7
    assert compose(f, -2, f.empty_score, ctr) == -2


@given(st.sampled_from(ALL_NAMES), st.lists(st.integers(-9, 9), min_size=1, max_size=8))
def test_g_is_associative(name, ws):
    f = make_score_function(name)
    pts = [Point(i, i, w, "blue" if w >= 0 else "red", i) for i, w in enumerate(ws)]
    vals = [f.point_score(p) for p in pts]
    ctr = OpCounters()
    left = vals[0]
    for v in vals[1:]:
        left = compose(f, left, v, ctr)
    right = vals[-1]
    for v in reversed(vals[:-1]):
        right = compose(f, v, right, ctr)
    assert left == right


@given(st.sampled_from(ALL_NAMES), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
def test_g_is_monotone(name, a, b, c):
    f = make_score_function(name)
    ctr = OpCounters()
    lo, hi = min(b, c), max(b, c)
    assert compose(f, a, lo, ctr) <= compose(f, a, hi, ctr)
    assert compose(f, lo, a, ctr) <= compose(f, hi, a, ctr)


def test_classify_sign():
    f = make_score_function("sum")
    assert classify_sign(f, Point(0, 0, 3, None, 0)) == POSITIVE
    assert classify_sign(f, Point(0, 0, -1, None, 0)) == NEGATIVE
    assert classify_sign(f, Point(0, 0, 0, None, 0)) == NEGATIVE
    fm = make_score_function("maxweight")
    # any finite weight beats f(empty) = -inf
    assert classify_sign(fm, Point(0, 0, -5, None, 0)) == POSITIVE


def test_counter_snapshot_and_add():
    a = OpCounters(1, 2, 3)
    b = a.snapshot()
    a.add(OpCounters(10, 20, 30))
    assert (a.coord_cmps, a.score_compositions, a.score_cmps) == (11, 22, 33)
    assert (b.coord_cmps, b.score_compositions, b.score_cmps) == (1, 2, 3)
    assert a.as_dict()["score_cmps"] == 33
