"""Instance-difficulty measures for planar point sets and sequences.

These quantify how close an instance is to easy structure: how few
same-sign horizontal stripes it splits into, how presorted the x-sequence
is (insertion rank distance, inversions, ascending runs), and the entropy
of block-size profiles.
"""
from __future__ import annotations

import math
from bisect import bisect_left, insort
from dataclasses import dataclass, field

from .score import (
    NEGATIVE,
    POSITIVE,
    OpCounters,
    Point,
    ScoreFunction,
    classify_sign,
)


@dataclass
class StripeDecomposition:
    """Maximal same-sign blocks of the points in increasing-y order."""

    stripes: list  # list of (sign, [points in increasing y])
    delta: int
    sizes: list
    candidate_tops: list  # topmost point of each positive stripe
    candidate_bottoms: list  # bottom point of each positive stripe


def y_sorted(points):
    return sorted(points, key=lambda p: (p.y, p.id))


def x_sorted(points):
    return sorted(points, key=lambda p: (p.x, p.id))


def stripes(points, f: ScoreFunction, ctr: OpCounters | None = None) -> StripeDecomposition:
    if not points:
        raise ValueError("stripe decomposition needs at least one point")
    ordered = y_sorted(points)
    blocks = []
    for p in ordered:
        sign = classify_sign(f, p, ctr)
        if blocks and blocks[-1][0] == sign:
            blocks[-1][1].append(p)
        else:
            blocks.append((sign, [p]))
    tops = [blk[-1] for sign, blk in blocks if sign == POSITIVE]
    bottoms = [blk[0] for sign, blk in blocks if sign == POSITIVE]
    return StripeDecomposition(
        stripes=blocks,
        delta=len(blocks),
        sizes=[len(blk) for _, blk in blocks],
        candidate_tops=tops,
        candidate_bottoms=bottoms,
    )


def resort_within_stripes(points, sd: StripeDecomposition):
    """The x-sequence obtained by re-sorting each stripe by increasing x
    while keeping the stripe order."""
    out = []
    for _, blk in sd.stripes:
        out.extend(p.x for p in sorted(blk, key=lambda p: (p.x, p.id)))
    return out


def _check_distinct(xs):
    if len(set(xs)) != len(xs):
        raise ValueError("sequence values must be distinct")


def local_insertion_complexity(xs) -> int:
    """Sum over j >= 2 of |r_j - r_(j-1)| where r_j is the rank of x_j among
    the first j values (1-based, counting x_j itself)."""
    xs = list(xs)
    _check_distinct(xs)
    seen = []
    total = 0
    prev = None
    for x in xs:
        r = bisect_left(seen, x) + 1
        insort(seen, x)
        if prev is not None:
            total += abs(r - prev)
        prev = r
    return total


def position_variation(xs) -> int:
    """Sum of |pi_j - pi_(j-1)| over the final sorted positions pi of the
    sequence values; an upper-bound companion to the insertion measure."""
    xs = list(xs)
    _check_distinct(xs)
    order = sorted(range(len(xs)), key=lambda i: xs[i])
    pos = [0] * len(xs)
    for rank, i in enumerate(order, start=1):
        pos[i] = rank
    return sum(abs(a - b) for a, b in zip(pos, pos[1:]))


def inversions(xs) -> int:
    """Number of out-of-order pairs, counted with a Fenwick tree."""
    xs = list(xs)
    _check_distinct(xs)
    n = len(xs)
    rank = {x: i + 1 for i, x in enumerate(sorted(xs))}
    bit = [0] * (n + 1)
    total = 0
    for j, x in enumerate(xs):
        r = rank[x]
        # count previously seen values greater than x
        seen_le = 0
        i = r
        while i > 0:
            seen_le += bit[i]
            i -= i & -i
        total += j - seen_le
        i = r
        while i <= n:
            bit[i] += 1
            i += i & -i
    return total


def runs(xs):
    """Maximal ascending runs: returns (count, lengths)."""
    xs = list(xs)
    if not xs:
        return 0, []
    _check_distinct(xs)
    lengths = [1]
    for a, b in zip(xs, xs[1:]):
        if b > a:
            lengths[-1] += 1
        else:
            lengths.append(1)
    return len(lengths), lengths


def entropy(sizes) -> float:
    """H(n_1..n_k) = sum (n_i/n) lg(n/n_i), in bits."""
    sizes = [s for s in sizes]
    if not sizes or any(s <= 0 for s in sizes):
        raise ValueError("sizes must be positive")
    n = sum(sizes)
    return sum((s / n) * math.log2(n / s) for s in sizes)


@dataclass
class MeasureReport:
    n: int
    delta: int
    stripe_sizes: list
    stripe_entropy: float
    lam: int
    position_variation: int
    inv: int
    rho: int
    run_lengths: list
    run_entropy: float
    lam_resorted: int | None = None
    inv_resorted: int | None = None
    rho_resorted: int | None = None

    def as_dict(self):
        return dict(self.__dict__)


def measure_report(points, f: ScoreFunction) -> MeasureReport:
    """All measures of an instance: stripe structure of the point set and
    sortedness of the x-sequence in increasing-y order, before and after
    re-sorting within stripes."""
    sd = stripes(points, f)
    xs = [p.x for p in y_sorted(points)]
    resorted = resort_within_stripes(points, sd)
    rho, lengths = runs(xs)
    rho2, _ = runs(resorted)
    return MeasureReport(
        n=len(points),
        delta=sd.delta,
        stripe_sizes=sd.sizes,
        stripe_entropy=entropy(sd.sizes),
        lam=local_insertion_complexity(xs),
        position_variation=position_variation(xs),
        inv=inversions(xs),
        rho=rho,
        run_lengths=lengths,
        run_entropy=entropy(lengths),
        lam_resorted=local_insertion_complexity(resorted),
        inv_resorted=inversions(resorted),
        rho_resorted=rho2,
    )
