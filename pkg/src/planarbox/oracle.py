"""Brute-force reference implementations.

Everything here is written for clarity over speed and shares no code with
the tree or sweep machinery; it exists so the fast paths can be checked
against definitional enumeration on small inputs.
"""
from __future__ import annotations

from dataclasses import dataclass

from .score import ScoreFunction

SUBSEQ_CAP = 1000
BOX_CAP = 24
CONSTRAINED_CAP = 20


def brute_best_subsequence(values, f: ScoreFunction):
    """Best consecutive run of a value sequence by direct enumeration.

    Returns (lo, hi, score) with 0-based inclusive indices, or
    (None, None, empty_score) when the empty run wins.  Ties go to the
    leftmost, then shortest, run; the empty run wins ties outright.
    """
    n = len(values)
    if n > SUBSEQ_CAP:
        raise ValueError(f"sequence too long for the oracle (cap {SUBSEQ_CAP})")
    best = (None, None, f.empty_score)
    for lo in range(n):
        acc = None
        for hi in range(lo, n):
            acc = values[hi] if acc is None else f.g(acc, values[hi])
            if acc > best[2]:
                best = (lo, hi, acc)
    return best


@dataclass
class OracleBox:
    score: object
    box: tuple | None  # (xlo, xhi, ylo, yhi)
    ids: tuple


def _fold(values, f):
    acc = f.empty_score
    first = True
    for v in values:
        acc = v if first else f.g(acc, v)
        first = False
    return acc


def brute_best_box(points, f: ScoreFunction, cap: int = BOX_CAP) -> OracleBox:
    """Optimal axis-aligned box by enumerating all rank-interval pairs.

    For every pair of y-ranks the contained points are listed in x-order and
    every consecutive x-run is scored with an incremental fold.  The empty
    box competes with score f(empty).
    """
    n = len(points)
    if n > cap:
        raise ValueError(f"instance too large for the oracle (cap {cap})")
    ys = sorted(points, key=lambda p: (p.y, p.id))
    best_score = f.empty_score
    best_sel = ()
    for k in range(n):
        for l in range(k, n):
            band = [p for p in ys if ys[k].y <= p.y <= ys[l].y]
            band.sort(key=lambda p: (p.x, p.id))
            for lo in range(len(band)):
                acc = None
                for hi in range(lo, len(band)):
                    v = f.point_score(band[hi])
                    acc = v if acc is None else f.g(acc, v)
                    if acc > best_score:
                        best_score = acc
                        best_sel = tuple(band[lo : hi + 1])
    if not best_sel:
        return OracleBox(f.empty_score, None, ())
    xs = [p.x for p in best_sel]
    ys2 = [p.y for p in best_sel]
    return OracleBox(
        best_score,
        (min(xs), max(xs), min(ys2), max(ys2)),
        tuple(sorted(p.id for p in best_sel)),
    )


def _content(points, box):
    xlo, xhi, ylo, yhi = box
    return [p for p in points if xlo <= p.x <= xhi and ylo <= p.y <= yhi]


def _coords(points):
    xs = sorted({p.x for p in points})
    ys = sorted({p.y for p in points})
    return xs, ys


def brute_constrained_box(points, f: ScoreFunction, constraint, cap: int = CONSTRAINED_CAP):
    """Best box under an anchoring constraint, by direct enumeration.

    ``constraint`` is one of:
      ("corner", c)    c in {1, 2, 3, 4}: the box must contain the
                       bottom-left / bottom-right / top-right / top-left
                       vertex of the bounding box of ``points``;
      ("side", s)      s in {"12", "23", "34", "41"}: the box must contain
                       both bottom / right / top / left vertices;
      ("edge", q, e)   e in {"top", "bottom", "left", "right"}: the stated
                       box edge passes through point ``q`` (q inside).

    Returns (score, box) where box is None only when the constrained family
    admits an empty degenerate box and it wins.
    """
    n = len(points)
    if n > cap:
        raise ValueError(f"instance too large for the oracle (cap {cap})")
    if not points:
        raise ValueError("constrained oracle needs at least one point")
    xs, ys = _coords(points)
    X0, X1, Y0, Y1 = xs[0], xs[-1], ys[0], ys[-1]
    boxes = []
    kind = constraint[0]
    if kind == "corner":
        c = constraint[1]
        x_cands = [X0] + xs if c in (1, 4) else xs + [X1]
        y_cands = [Y0] + ys if c in (1, 2) else ys + [Y1]
        for xc in x_cands:
            for yc in y_cands:
                if c == 1:
                    boxes.append((X0, xc, Y0, yc))
                elif c == 2:
                    boxes.append((xc, X1, Y0, yc))
                elif c == 3:
                    boxes.append((xc, X1, yc, Y1))
                else:
                    boxes.append((X0, xc, yc, Y1))
    elif kind == "side":
        s = constraint[1]
        if s == "12":
            boxes = [(X0, X1, Y0, t) for t in ys]
        elif s == "34":
            boxes = [(X0, X1, t, Y1) for t in ys]
        elif s == "41":
            boxes = [(X0, t, Y0, Y1) for t in xs]
        elif s == "23":
            boxes = [(t, X1, Y0, Y1) for t in xs]
        else:
            raise ValueError(f"unknown side {s!r}")
    elif kind == "edge":
        q, e = constraint[1], constraint[2]
        if e not in ("top", "bottom", "left", "right"):
            raise ValueError(f"unknown edge {e!r}")
        if e in ("top", "bottom"):
            for a in [q.x] + xs:
                for b in [q.x] + xs:
                    for c in [q.y] + ys:
                        if e == "top":
                            boxes.append((min(a, q.x), max(b, q.x), min(c, q.y), q.y))
                        else:
                            boxes.append((min(a, q.x), max(b, q.x), q.y, max(c, q.y)))
        else:
            for a in [q.x] + xs:
                for c in [q.y] + ys:
                    for d in [q.y] + ys:
                        ylo, yhi = min(c, d, q.y), max(c, d, q.y)
                        if e == "left":
                            boxes.append((q.x, max(a, q.x), ylo, yhi))
                        else:
                            boxes.append((min(a, q.x), q.x, ylo, yhi))
    else:
        raise ValueError(f"unknown constraint kind {kind!r}")

    best_score = None
    best_box = None
    for box in boxes:
        content = _content(points, box)
        score = _fold([f.point_score(p) for p in content], f)
        if best_score is None or score > best_score:
            best_score = score
            best_box = box if content else None
    return best_score, best_box


def oracle_measures(xs):
    """Definitional O(n^2) versions of the sequence measures."""
    xs = list(xs)
    n = len(xs)
    if len(set(xs)) != n:
        raise ValueError("sequence values must be distinct")
    lam = 0
    prev_rank = None
    for j in range(n):
        r = 1 + sum(1 for i in range(j + 1) if xs[i] < xs[j])
        if prev_rank is not None:
            lam += abs(r - prev_rank)
        prev_rank = r
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if xs[i] > xs[j])
    lengths = []
    for j in range(n):
        if j == 0 or xs[j] < xs[j - 1]:
            lengths.append(1)
        else:
            lengths[-1] += 1
    return {"lam": lam, "inv": inv, "rho": len(lengths), "run_lengths": lengths}
