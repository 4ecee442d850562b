"""Sweep solvers for the optimal axis-aligned box problem.

All four solvers sweep candidate top edges downward, maintain the best
consecutive x-run of the active points in a tree, and differ only in which
tops they try and which tree they use:

  baseline  every point is a candidate top; static tree rebuilt per pass.
  stripes   only the topmost point of each positive stripe starts a pass;
            stripes are inserted whole into a splay tree, in x-order within
            each stripe, and queries happen after complete positive stripes.
  finger    like baseline but inserting into a splay tree, so presorted
            x-sequences are cheap.
  combined  the stripe solver run on both axis orientations, keeping the
            run that composed less.
"""
from __future__ import annotations

from dataclasses import dataclass

from .mcs_dynamic import McsSplayTree
from .mcs_static import StaticMcsTree
from .measures import POSITIVE, stripes, y_sorted
from .score import OpCounters, Point, ScoreFunction


@dataclass
class BoxResult:
    ids: tuple
    box: tuple | None  # (xlo, xhi, ylo, yhi), tight over the selection
    score: object
    counters: OpCounters

    @property
    def is_empty(self) -> bool:
        return not self.ids


def _key(p: Point):
    return (p.x, p.id)


def _tight_box(points):
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return (min(xs), max(xs), min(ys), max(ys))


def _result(selection, score, ctr) -> BoxResult:
    if not selection:
        return BoxResult((), None, score, ctr)
    return BoxResult(
        tuple(sorted(p.id for p in selection)), _tight_box(selection), score, ctr
    )


def _empty_result(f, ctr) -> BoxResult:
    return BoxResult((), None, f.empty_score, ctr)


def _better(cand_score, best_score, ctr) -> bool:
    ctr.score_cmps += 1
    return cand_score > best_score


def solve_baseline(points, f: ScoreFunction, ctr: OpCounters | None = None) -> BoxResult:
    """Try every candidate top; quadratic number of activations overall."""
    ctr = ctr if ctr is not None else OpCounters()
    if not points:
        return _empty_result(f, ctr)
    down = y_sorted(points)[::-1]  # decreasing y
    keys = sorted(_key(p) for p in points)
    tree = StaticMcsTree(keys, f, ctr)
    n = len(down)
    best_score = f.empty_score
    best = None  # (i, j, lo_key, hi_key)
    for i in range(n):
        tree.reset()
        for j in range(i, n):
            p = down[j]
            tree.activate(_key(p), f.point_score(p))
            cand = tree.global_best()
            if _better(cand.score, best_score, ctr):
                best_score = cand.score
                best = (i, j, tree.key_at(cand.lo), tree.key_at(cand.hi))
    if best is None:
        return _empty_result(f, ctr)
    i, j, lo_key, hi_key = best
    selection = [p for p in down[i : j + 1] if lo_key <= _key(p) <= hi_key]
    return _result(selection, best_score, ctr)


def solve_finger(points, f: ScoreFunction, ctr: OpCounters | None = None) -> BoxResult:
    """Baseline pass structure over fresh splay trees; cost adapts to the
    sortedness of the x-sequence in sweep order."""
    ctr = ctr if ctr is not None else OpCounters()
    if not points:
        return _empty_result(f, ctr)
    down = y_sorted(points)[::-1]
    n = len(down)
    best_score = f.empty_score
    best = None
    for i in range(n):
        tree = McsSplayTree(f, ctr)
        for j in range(i, n):
            p = down[j]
            tree.insert(_key(p), f.point_score(p))
            cand = tree.global_best()
            if _better(cand.score, best_score, ctr):
                best_score = cand.score
                best = (i, j, cand.lo, cand.hi)
    if best is None:
        return _empty_result(f, ctr)
    i, j, lo_key, hi_key = best
    selection = [p for p in down[i : j + 1] if lo_key <= _key(p) <= hi_key]
    return _result(selection, best_score, ctr)


def solve_stripes(points, f: ScoreFunction, ctr: OpCounters | None = None) -> BoxResult:
    """One pass per positive stripe; queries only where an optimal box can
    end (after complete positive stripes, plus a final safety query)."""
    ctr = ctr if ctr is not None else OpCounters()
    if not points:
        return _empty_result(f, ctr)
    sd = stripes(points, f, ctr)
    blocks = sd.stripes[::-1]  # top stripe first
    if not any(sign == POSITIVE for sign, _ in blocks):
        return _empty_result(f, ctr)
    for _, blk in blocks:
        blk.sort(key=lambda p: (p.x, p.id))
    best_score = f.empty_score
    best = None  # (start stripe, end stripe, lo_key, hi_key)
    for s, (sign, _) in enumerate(blocks):
        if sign != POSITIVE:
            continue
        tree = McsSplayTree(f, ctr)
        for t in range(s, len(blocks)):
            t_sign, blk = blocks[t]
            for p in blk:
                tree.insert(_key(p), f.point_score(p))
            if t_sign == POSITIVE or t == len(blocks) - 1:
                cand = tree.global_best()
                if _better(cand.score, best_score, ctr):
                    best_score = cand.score
                    best = (s, t, cand.lo, cand.hi)
    if best is None:
        return _empty_result(f, ctr)
    s, t, lo_key, hi_key = best
    selection = [
        p
        for t2 in range(s, t + 1)
        for p in blocks[t2][1]
        if lo_key <= _key(p) <= hi_key
    ]
    return _result(selection, best_score, ctr)


def _transpose(points):
    return [Point(p.y, p.x, p.weight, p.color, p.id) for p in points]


def solve_combined(points, f: ScoreFunction, ctr: OpCounters | None = None) -> BoxResult:
    """Stripe solver on both axis orientations; the cheaper run wins.

    The returned counters are those of the cheaper run (plus the shared
    classification work already inside each run)."""
    c_xy = OpCounters()
    r_xy = solve_stripes(points, f, c_xy)
    c_yx = OpCounters()
    r_yx = solve_stripes(_transpose(points), f, c_yx)
    if c_yx.score_compositions < c_xy.score_compositions:
        box = r_yx.box
        if box is not None:
            box = (box[2], box[3], box[0], box[1])
        chosen = BoxResult(r_yx.ids, box, r_yx.score, c_yx)
    else:
        chosen = BoxResult(r_xy.ids, r_xy.box, r_xy.score, c_xy)
    if ctr is not None:
        ctr.add(chosen.counters)
        chosen = BoxResult(chosen.ids, chosen.box, chosen.score, ctr)
    return chosen


SOLVERS = {
    "baseline": solve_baseline,
    "stripes": solve_stripes,
    "finger": solve_finger,
    "combined": solve_combined,
}
