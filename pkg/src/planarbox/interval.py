"""Scored intervals and the four-field node summary used by the MCS trees.

An interval is a contiguous range of keys (or leaf positions) together with
the composed score of the elements it selects.  The distinguished empty
interval has no endpoints and scores as the empty set.  Every tree node keeps
four intervals:

    I  the whole span of the subtree,
    L  the best prefix (empty allowed),
    R  the best suffix (empty allowed),
    M  the best interval anywhere inside (empty allowed).
"""
from __future__ import annotations

from .score import ScoreFunction, OpCounters, compose


class Interval:
    __slots__ = ("lo", "hi", "score")

    def __init__(self, lo, hi, score):
        self.lo = lo
        self.hi = hi
        self.score = score

    @property
    def is_empty(self) -> bool:
        return self.lo is None

    def __repr__(self):
        if self.lo is None:
            return f"Interval(EMPTY, score={self.score})"
        return f"Interval([{self.lo}..{self.hi}], score={self.score})"

    def __eq__(self, other):
        return (
            isinstance(other, Interval)
            and self.lo == other.lo
            and self.hi == other.hi
            and self.score == other.score
        )

    def __hash__(self):
        return hash((self.lo, self.hi, self.score))


def empty_interval(score) -> Interval:
    return Interval(None, None, score)


def imax(a: Interval, b: Interval, ctr: OpCounters) -> Interval:
    """Max of two intervals by score.

    Ties prefer the empty interval, then the leftmost, then the shortest, so
    results are deterministic.
    """
    ctr.score_cmps += 1
    if a.score > b.score:
        return a
    if b.score > a.score:
        return b
    if a.lo is None:
        return a
    if b.lo is None:
        return b
    if (a.lo, a.hi) <= (b.lo, b.hi):
        return a
    return b


def imax3(a: Interval, b: Interval, c: Interval, ctr: OpCounters) -> Interval:
    return imax(imax(a, b, ctr), c, ctr)


def join(a: Interval, b: Interval, f: ScoreFunction, ctr: OpCounters) -> Interval:
    """Concatenate two adjacent intervals; the empty interval is an identity
    and costs no composition."""
    if a.lo is None:
        return b
    if b.lo is None:
        return a
    return Interval(a.lo, b.hi, compose(f, a.score, b.score, ctr))


def join3(a: Interval, k, v, b: Interval, f: ScoreFunction, ctr: OpCounters) -> Interval:
    """Concatenate ``a + [k] + b`` where ``k`` is a single element of value
    ``v``.  Always non-empty since the middle element is included."""
    lo = k if a.lo is None else a.lo
    hi = k if b.lo is None else b.hi
    score = v
    if a.lo is not None:
        score = compose(f, a.score, score, ctr)
    if b.lo is not None:
        score = compose(f, score, b.score, ctr)
    return Interval(lo, hi, score)


class Aug:
    """The (I, L, R, M) summary of a set of consecutive elements."""

    __slots__ = ("I", "L", "R", "M")

    def __init__(self, I: Interval, L: Interval, R: Interval, M: Interval):
        self.I = I
        self.L = L
        self.R = R
        self.M = M

    def __repr__(self):
        return f"Aug(I={self.I}, L={self.L}, R={self.R}, M={self.M})"


def empty_aug(empty_score) -> Aug:
    e = empty_interval(empty_score)
    return Aug(e, e, e, e)


def combine_aug(a: Aug, b: Aug, f: ScoreFunction, ctr: OpCounters) -> Aug:
    """Merge the summaries of two adjacent element blocks (no element in
    between)."""
    return Aug(
        join(a.I, b.I, f, ctr),
        imax(a.L, join(a.I, b.L, f, ctr), ctr),
        imax(join(a.R, b.I, f, ctr), b.R, ctr),
        imax3(a.M, b.M, join(a.R, b.L, f, ctr), ctr),
    )


def combine_aug3(a: Aug, k, v, b: Aug, f: ScoreFunction, ctr: OpCounters, with_m: bool = True) -> Aug:
    """Merge two adjacent summaries around a middle element ``k`` of value
    ``v`` (the node-based rule).

    The partial joins ``a.I + [k]`` and ``[k] + b.I`` are shared between the
    fields, so a full merge charges at most 7 compositions (5 when ``with_m``
    is off; sweeps that never read M can skip its upkeep).
    """
    kv = Interval(k, k, v)
    pk = join(a.I, kv, f, ctr)
    sk = join(kv, b.I, f, ctr)
    I = join(pk, b.I, f, ctr)
    L = imax(a.L, join(pk, b.L, f, ctr), ctr)
    R = imax(join(a.R, sk, f, ctr), b.R, ctr)
    if not with_m:
        return Aug(I, L, R, empty_interval(f.empty_score))
    M = imax3(a.M, b.M, join(join(a.R, kv, f, ctr), b.L, f, ctr), ctr)
    return Aug(I, L, R, M)
