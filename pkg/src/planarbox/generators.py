"""Deterministic instance generators for tests and benchmarks.

Every generator is a pure function of its arguments; the same seed always
yields the same instance.  Coordinates are distinct integers.
"""
from __future__ import annotations

import random

from .score import Point

_COORD_RANGE = 10**6


def _weights(rng, n, mode):
    if mode == "mixed":
        return [rng.choice([w for w in range(-9, 10) if w != 0]) for _ in range(n)]
    if mode == "positive":
        return [rng.randint(1, 9) for _ in range(n)]
    if mode == "unit":
        return [1] * n
    raise ValueError(f"unknown weight mode {mode!r}")


def _colors(rng, n):
    return [rng.choice(["blue", "red"]) for _ in range(n)]


def _assemble(xs, ys, weights, colors):
    return [
        Point(x, y, w, c, i)
        for i, (x, y, w, c) in enumerate(zip(xs, ys, weights, colors))
    ]


def uniform_random(n, seed, weight_mode="mixed"):
    """Independent distinct coordinates, random weights and colors."""
    rng = random.Random(f"uniform:{n}:{seed}")
    xs = rng.sample(range(_COORD_RANGE), n)
    ys = rng.sample(range(_COORD_RANGE), n)
    return _assemble(xs, ys, _weights(rng, n, weight_mode), _colors(rng, n))


def stripe_instance(n, delta, seed):
    """Exactly ``delta`` alternating same-sign stripes in y, topmost stripe
    positive, sizes as equal as possible.  Weight signs define the stripes
    under the additive score functions."""
    if delta < 1 or delta > n:
        raise ValueError("need 1 <= delta <= n")
    rng = random.Random(f"stripes:{n}:{delta}:{seed}")
    xs = rng.sample(range(_COORD_RANGE), n)
    base = n // delta
    sizes = [base + (1 if i < n % delta else 0) for i in range(delta)]
    ys = []
    weights = []
    y = 0
    for i, size in enumerate(sizes):  # bottom stripe first
        positive = (delta - 1 - i) % 2 == 0  # topmost stripe positive
        for _ in range(size):
            y += rng.randint(1, 5)
            ys.append(y)
            w = rng.randint(1, 9)
            weights.append(w if positive else -w)
    return _assemble(xs, ys, weights, _colors(rng, n))


def aligned(n, seed, mode="co", rho=None):
    """Sorted-structure instances.

    mode "co": x increases with y (one ascending run); "anti": x decreases
    with y.  With ``rho`` set, the x-sequence in y-order is a concatenation
    of ``rho`` ascending runs instead.
    """
    rng = random.Random(f"aligned:{n}:{seed}:{mode}:{rho}")
    ys = sorted(rng.sample(range(_COORD_RANGE), n))
    xs_sorted = sorted(rng.sample(range(_COORD_RANGE), n))
    if rho is not None:
        if not 1 <= rho <= n:
            raise ValueError("need 1 <= rho <= n")
        cuts = [0] + sorted(rng.sample(range(1, n), rho - 1)) + [n]
        chunks = [xs_sorted[a:b] for a, b in zip(cuts, cuts[1:])]
        # descending chunk order guarantees a descent at every boundary,
        # so the sequence has exactly rho ascending runs
        xs = [v for chunk in reversed(chunks) for v in chunk]
    elif mode == "co":
        xs = xs_sorted
    elif mode == "anti":
        xs = xs_sorted[::-1]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return _assemble(xs, ys, _weights(rng, n, "mixed"), _colors(rng, n))


def diagonal_blocks(n, seed, weight_mode="mixed"):
    """A fully diagonalizable instance: strictly ascending x and y."""
    rng = random.Random(f"diagonal:{n}:{seed}")
    xs = sorted(rng.sample(range(_COORD_RANGE), n))
    ys = sorted(rng.sample(range(_COORD_RANGE), n))
    return _assemble(xs, ys, _weights(rng, n, weight_mode), _colors(rng, n))


# the four-point pattern (y-ranks 2,4,1,3 in x-order) that blocks every
# diagonalization; offsets are from the pattern's center
_WINDMILL_OFFSETS = ((-3, -1), (-1, 3), (1, -3), (3, 1))


def windmill_chain(n, sigma, seed, weight_mode="mixed"):
    """``sigma`` nested windmills around a fully diagonalizable core.

    Peeling the extreme points (always the outermost windmill) exposes the
    next one, so the peeled tree has exactly ``sigma`` one-child nodes.
    Requires n >= 4*sigma + 1.
    """
    if sigma < 1:
        raise ValueError("sigma must be at least 1")
    m = n - 4 * sigma
    if m < 1:
        raise ValueError("need n >= 4*sigma + 1")
    rng = random.Random(f"windmill:{n}:{sigma}:{seed}")
    pts = []
    # innermost scale must dominate the core's extent
    scale = m + 1
    scales = [scale * 4**i for i in range(sigma)][::-1]
    for s in scales:
        for dx, dy in _WINDMILL_OFFSETS:
            pts.append((dx * s, dy * s))
    core = [(j - m // 2, j - m // 2) for j in range(m)]
    pts.extend(core)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    return _assemble(xs, ys, _weights(rng, n, weight_mode), _colors(rng, n))


def diagonalizable_split_pair(n, seed, kind="bottom_up", weight_mode="mixed"):
    """Two random clusters split by one guaranteed diagonalization; returns
    (all points, left cluster, right cluster)."""
    rng = random.Random(f"splitpair:{n}:{seed}:{kind}")
    nl = rng.randint(1, n - 1)
    nr = n - nl
    lx = rng.sample(range(_COORD_RANGE), nl)
    rx = rng.sample(range(_COORD_RANGE, 2 * _COORD_RANGE), nr)
    if kind == "bottom_up":
        ly = rng.sample(range(_COORD_RANGE), nl)
        ry = rng.sample(range(_COORD_RANGE, 2 * _COORD_RANGE), nr)
    else:
        ly = rng.sample(range(_COORD_RANGE, 2 * _COORD_RANGE), nl)
        ry = rng.sample(range(_COORD_RANGE), nr)
    xs = lx + rx
    ys = ly + ry
    pts = _assemble(xs, ys, _weights(rng, n, weight_mode), _colors(rng, n))
    return pts, pts[:nl], pts[nl:]


GENERATORS = {
    "uniform": uniform_random,
    "stripes": stripe_instance,
    "aligned": aligned,
    "diagonal": diagonal_blocks,
    "windmill": windmill_chain,
}


def generate(kind: str, n: int, seed: int, **params):
    if kind == "uniform":
        return uniform_random(n, seed, **params)
    if kind == "stripes":
        return stripe_instance(n, params.pop("delta"), seed)
    if kind == "aligned":
        return aligned(n, seed, **params)
    if kind == "diagonal":
        return diagonal_blocks(n, seed, **params)
    if kind == "windmill":
        return windmill_chain(n, params.pop("sigma"), seed, **params)
    raise ValueError(f"unknown generator {kind!r}")
