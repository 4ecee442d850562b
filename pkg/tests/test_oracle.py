import random

import pytest

from planarbox import Point, make_score_function
from planarbox.oracle import (
    brute_best_box,
    brute_best_subsequence,
    brute_constrained_box,
    oracle_measures,
)

F = make_score_function("sum")


def P(x, y, w, i):
    return Point(x, y, w, "blue" if w >= 0 else "red", i)


def test_subsequence_basics():
    assert brute_best_subsequence([3, -4, 5, -2, 4], F) == (2, 4, 7)
    assert brute_best_subsequence([-1, -2], F) == (None, None, 0)
    assert brute_best_subsequence([], F) == (None, None, 0)


def test_subsequence_maxweight():
    fm = make_score_function("maxweight")
    lo, hi, score = brute_best_subsequence([-5, -1, -7], fm)
    assert score == -1
    assert max([-5, -1, -7][lo : hi + 1]) == -1


def test_best_box_single_point():
    r = brute_best_box([P(0, 0, 5, 0)], F)
    assert r.score == 5
    assert set(r.ids) == {0}


def test_best_box_all_negative_is_empty():
    r = brute_best_box([P(0, 0, -1, 0), P(1, 1, -2, 1)], F)
    assert r.score == 0
    assert len(r.ids) == 0
    assert r.box is None


def test_best_box_avoids_poison():
    pts = [P(0, 0, 5, 0), P(1, 1, -100, 1), P(2, 2, 7, 2)]
    r = brute_best_box(pts, F)
    assert r.score == 7


def test_best_box_tight():
    pts = [P(0, 0, 3, 0), P(10, 10, 4, 1), P(5, 20, -1, 2)]
    r = brute_best_box(pts, F)
    assert r.score == 7
    assert r.box == (0, 10, 0, 10)


def test_best_box_cap():
    pts = [P(i, i, 1, i) for i in range(30)]
    with pytest.raises(ValueError):
        brute_best_box(pts, F)
    assert brute_best_box(pts, F, cap=30).score == 30


def test_constrained_corner():
    pts = [P(0, 0, -2, 0), P(5, 5, 9, 1)]
    # corner 1 = bottom-left vertex of the bounding box: must contain (0, 0)
    s, box = brute_constrained_box(pts, F, ("corner", 1))
    assert s == 7
    # corner 3 = top-right: the 9 alone is reachable
    s, _ = brute_constrained_box(pts, F, ("corner", 3))
    assert s == 9
    # an empty degenerate corner box is allowed when the vertex is vacant
    pts2 = [P(0, 5, -2, 0), P(5, 0, -3, 1)]
    s, _ = brute_constrained_box(pts2, F, ("corner", 1))
    assert s == 0


def test_constrained_side():
    pts = [P(0, 0, -2, 0), P(5, 1, 3, 1), P(2, 9, 8, 2)]
    # side 12 spans the whole bottom edge; the y=0 point is forced
    s, _ = brute_constrained_box(pts, F, ("side", "12"))
    assert s == 9  # everything: -2 + 3 + 8
    s, _ = brute_constrained_box(pts, F, ("side", "34"))
    assert s == 11  # top edge plus the +3, skipping the -2


def test_constrained_edge():
    pts = [P(0, 0, 5, 0), P(2, 2, -7, 1), P(4, 4, 6, 2)]
    q = pts[1]
    s, _ = brute_constrained_box(pts, F, ("edge", q, "left"))
    assert s == -1  # left edge through q: x >= 2, so -7 forced, +6 reachable
    s, _ = brute_constrained_box(pts, F, ("edge", q, "right"))
    assert s == -2  # x <= 2: -7 forced, +5 reachable
    s, _ = brute_constrained_box(pts, F, ("edge", pts[0], "bottom"))
    assert s == 5


def test_constrained_validation():
    pts = [P(0, 0, 1, 0)]
    with pytest.raises(ValueError):
        brute_constrained_box(pts, F, ("corner", 1), cap=0)
    with pytest.raises(ValueError):
        brute_constrained_box([], F, ("corner", 1))
    with pytest.raises(ValueError):
        brute_constrained_box(pts, F, ("side", "13"))
    with pytest.raises(ValueError):
        brute_constrained_box(pts, F, ("edge", pts[0], "diagonal"))
    with pytest.raises(ValueError):
        brute_constrained_box(pts, F, ("blob",))


def test_oracle_measures_definitional():
    om = oracle_measures((3, 2, 4, 1, 5))
    assert om["lam"] == 8
    assert om["inv"] == 4
    assert om["rho"] == 3
    assert sorted(om["run_lengths"]) == [1, 2, 2]


def test_box_score_is_fold_of_content():
    rng = random.Random(12)
    for _ in range(40):
        n = rng.randint(1, 10)
        pts = [P(rng.randint(0, 50), rng.randint(0, 50), rng.randint(-9, 9), i) for i in range(n)]
        if len({p.x for p in pts}) < n or len({p.y for p in pts}) < n:
            continue
        r = brute_best_box(pts, F)
        sel = set(r.ids)
        assert r.score == sum(p.weight for p in pts if p.id in sel)
        if r.box is not None:
            x0, x1, y0, y1 = r.box
            inside = {p.id for p in pts if x0 <= p.x <= x1 and y0 <= p.y <= y1}
            assert inside == sel
