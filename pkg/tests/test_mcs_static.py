import random

import pytest
from hypothesis import given, settings, strategies as st

from planarbox import OpCounters, StaticMcsTree, make_score_function
from planarbox.interval import Interval, empty_interval, imax, join
from planarbox.oracle import brute_best_subsequence

F = make_score_function("sum")


def build(values, keys=None):
    keys = keys if keys is not None else list(range(len(values)))
    t = StaticMcsTree(keys, F)
    for k, v in zip(keys, values):
        t.activate(k, v)
    return t


def test_imax_tie_breaks():
    ctr = OpCounters()
    e = empty_interval(0)
    a = Interval(1, 3, 0)
    assert imax(e, a, ctr) is e  # empty wins ties
    b = Interval(0, 5, 0)
    assert imax(a, b, ctr) is b  # leftmost
    c = Interval(0, 2, 0)
    assert imax(b, c, ctr) is c  # then shortest


def test_join_empty_is_free():
    ctr = OpCounters()
    e = empty_interval(0)
    a = Interval(2, 4, 7)
    assert join(e, a, F, ctr) is a
    assert join(a, e, F, ctr) is a
    assert ctr.score_compositions == 0
    assert join(Interval(0, 1, 1), a, F, ctr).score == 8
    assert ctr.score_compositions == 1


def test_frozen_example():
    t = build([3, -4, 5, -2, 4])
    best = t.global_best()
    assert best.score == 7
    assert (best.lo, best.hi) == (2, 4)


def test_classic_example():
    vals = [-2, 1, -3, 4, -1, 2, 1, -5, 4]
    t = build(vals)
    best = t.global_best()
    assert best.score == 6
    assert (best.lo, best.hi) == (3, 6)
    assert brute_best_subsequence(vals, F) == (3, 6, 6)


def test_subrange_and_through():
    t = build([3, -4, 5, -2, 4])
    assert t.subrange_best(0, 1).score == 3
    assert t.best_through(2).score == 7
    assert t.best_through(1).score == 6  # 3 - 4 + 5 - 2 + 4
    with pytest.raises(ValueError):
        t.subrange_best(3, 1)
    with pytest.raises(KeyError):
        t.subrange_best(0, 99)


def test_deactivate():
    t = build([3, -4, 5, -2, 4])
    t.deactivate(2)
    assert t.global_best().score == 4
    # a deactivated key scores as the empty set in best_through
    assert t.best_through(2).score == 2  # 0 - 2 + 4
    t.activate(2, 5)
    assert t.global_best().score == 7


def test_keys_must_increase():
    with pytest.raises(ValueError):
        StaticMcsTree([3, 1, 2], F)


def test_reset_is_uncharged():
    t = build([1, 2, 3])
    before = t.ctr.score_compositions
    t.reset()
    assert t.ctr.score_compositions == before
    assert t.global_best().is_empty


def test_activation_cost_bound():
    # activating one leaf recomputes at most 4 intervals per level
    for n in (1, 2, 5, 16, 100):
        t = StaticMcsTree(list(range(n)), F, OpCounters())
        h = t.height()
        for k in range(n):
            before = t.ctr.score_compositions
            t.activate(k, 1)
            assert t.ctr.score_compositions - before <= 4 * (h + 1)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=32))
def test_matches_oracle(vals):
    t = build(vals)
    _, _, want = brute_best_subsequence(vals, F)
    got = t.global_best()
    assert got.score == want
    # the returned interval honestly folds to its reported score
    if not got.is_empty:
        assert sum(vals[got.lo : got.hi + 1]) == got.score
    assert t.validate()


def test_random_mutations_vs_oracle():
    rng = random.Random(42)
    for _ in range(100):
        n = rng.randint(1, 40)
        t = StaticMcsTree(list(range(n)), F)
        active = {}
        for _ in range(3 * n):
            k = rng.randrange(n)
            if k in active and rng.random() < 0.4:
                t.deactivate(k)
                del active[k]
            else:
                v = rng.randint(-9, 9)
                if k in active:
                    t.deactivate(k)
                t.activate(k, v)
                active[k] = v
            seq = [active.get(i) for i in range(n)]
            dense = [v for v in seq if v is not None]
            want = brute_best_subsequence(dense, F)[2] if dense else F.empty_score
            assert t.global_best().score == want
        # sub-range probe against the dense oracle
        if active:
            ks = sorted(active)
            lo, hi = sorted(rng.sample(range(n), 2)) if n > 1 else (0, 0)
            inside = [active[k] for k in ks if lo <= k <= hi]
            want = brute_best_subsequence(inside, F)[2] if inside else F.empty_score
            assert t.subrange_best(lo, hi).score == want
        assert t.validate()


def test_arbitrary_keys():
    keys = [3, 7, 10, 50]
    t = StaticMcsTree(keys, F)
    for k, v in zip(keys, [5, -2, -2, 4]):
        t.activate(k, v)
    assert t.global_best().score == 5
    assert t.subrange_best(7, 50).score == 4
    assert t.best_through(10).score == 5  # the whole 5 - 2 - 2 + 4
