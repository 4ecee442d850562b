"""Static tree maintaining the best consecutive subsequence under
activation and deactivation of elements.

The key set is fixed at construction.  Each key holds a score value when
active; inactive keys contribute the empty score.  The tree answers, in
logarithmic time, for the best-scoring run of consecutive keys: globally,
inside a key range, or forced through one key.

Intervals carry leaf positions (0-based ranks in key order); ``key_at``
translates back to keys.
"""
from __future__ import annotations

from .interval import (
    Aug,
    Interval,
    combine_aug,
    empty_aug,
    empty_interval,
    imax,
    imax3,
    join,
    join3,
)
from .score import OpCounters, ScoreFunction


class StaticMcsTree:
    def __init__(self, keys, f: ScoreFunction, ctr: OpCounters | None = None):
        keys = list(keys)
        if not keys:
            raise ValueError("key set must be non-empty")
        for a, b in zip(keys, keys[1:]):
            if not a < b:
                raise ValueError("keys must be strictly increasing")
        self.keys = keys
        self.f = f
        self.ctr = ctr if ctr is not None else OpCounters()
        self.n = len(keys)
        size = 1
        while size < self.n:
            size *= 2
        self.size = size
        self._pos = {k: i for i, k in enumerate(keys)}
        self._empty = empty_interval(f.empty_score)
        self.values = [None] * self.n
        self.reset()

    # -- mutation ---------------------------------------------------------

    def reset(self):
        """Deactivate everything.  Pure re-initialization, charges nothing."""
        e = self._empty
        m = 2 * self.size
        self.I = [e] * m
        self.L = [e] * m
        self.R = [e] * m
        self.M = [e] * m
        self.values = [None] * self.n

    def activate(self, key, value):
        pos = self._pos[key]
        self.values[pos] = value
        ival = Interval(pos, pos, value)
        i = self.size + pos
        self.I[i] = ival
        lrm = imax(ival, self._empty, self.ctr)
        self.L[i] = lrm
        self.R[i] = lrm
        self.M[i] = lrm
        self._climb(i)

    def deactivate(self, key):
        pos = self._pos[key]
        self.values[pos] = None
        e = self._empty
        i = self.size + pos
        self.I[i] = e
        self.L[i] = e
        self.R[i] = e
        self.M[i] = e
        self._climb(i)

    def _climb(self, i):
        f, ctr = self.f, self.ctr
        I, L, R, M = self.I, self.L, self.R, self.M
        i //= 2
        while i >= 1:
            l, r = 2 * i, 2 * i + 1
            I[i] = join(I[l], I[r], f, ctr)
            L[i] = imax(L[l], join(I[l], L[r], f, ctr), ctr)
            R[i] = imax(join(R[l], I[r], f, ctr), R[r], ctr)
            M[i] = imax3(M[l], M[r], join(R[l], L[r], f, ctr), ctr)
            i //= 2

    # -- queries ----------------------------------------------------------

    def global_best(self) -> Interval:
        return self.M[1]

    def aug_of_range(self, lo_pos: int, hi_pos: int) -> Aug:
        """Summary of the leaf positions in [lo_pos, hi_pos]."""
        if lo_pos > hi_pos:
            raise ValueError("empty position range")
        return self._query(1, 0, self.size - 1, lo_pos, hi_pos)

    def _query(self, i, node_lo, node_hi, lo, hi) -> Aug:
        if lo <= node_lo and node_hi <= hi:
            return Aug(self.I[i], self.L[i], self.R[i], self.M[i])
        mid = (node_lo + node_hi) // 2
        if hi <= mid:
            return self._query(2 * i, node_lo, mid, lo, hi)
        if lo > mid:
            return self._query(2 * i + 1, mid + 1, node_hi, lo, hi)
        a = self._query(2 * i, node_lo, mid, lo, hi)
        b = self._query(2 * i + 1, mid + 1, node_hi, lo, hi)
        return combine_aug(a, b, self.f, self.ctr)

    def subrange_best(self, lo_key, hi_key) -> Interval:
        lo, hi = self._pos[lo_key], self._pos[hi_key]
        if lo > hi:
            raise ValueError("lo_key must not exceed hi_key")
        return self.aug_of_range(lo, hi).M

    def best_through(self, key) -> Interval:
        """Best interval forced to contain ``key``.  A deactivated key
        contributes the empty score but is still included."""
        pos = self._pos[key]
        v = self.values[pos]
        if v is None:
            v = self.f.empty_score
        left = (
            self.aug_of_range(0, pos - 1)
            if pos > 0
            else empty_aug(self.f.empty_score)
        )
        right = (
            self.aug_of_range(pos + 1, self.n - 1)
            if pos < self.n - 1
            else empty_aug(self.f.empty_score)
        )
        return join3(left.R, pos, v, right.L, self.f, self.ctr)

    # -- helpers ----------------------------------------------------------

    def key_at(self, pos: int):
        return self.keys[pos]

    def value_at(self, key):
        return self.values[self._pos[key]]

    def is_active(self, key) -> bool:
        return self.values[self._pos[key]] is not None

    def height(self) -> int:
        return self.size.bit_length() - 1

    def validate(self) -> bool:
        """Recompute every internal node from its children and compare."""
        scratch = OpCounters()
        f = self.f
        for i in range(self.size - 1, 0, -1):
            l, r = 2 * i, 2 * i + 1
            if (
                self.I[i] != join(self.I[l], self.I[r], f, scratch)
                or self.L[i]
                != imax(self.L[l], join(self.I[l], self.L[r], f, scratch), scratch)
                or self.R[i]
                != imax(join(self.R[l], self.I[r], f, scratch), self.R[r], scratch)
                or self.M[i]
                != imax3(
                    self.M[l], self.M[r], join(self.R[l], self.L[r], f, scratch), scratch
                )
            ):
                return False
        return True
