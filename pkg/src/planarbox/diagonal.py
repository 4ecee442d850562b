"""Divide-and-conquer over diagonalizable point sets.

A point set diagonalizes at k when, in x-order, the first k points lie
entirely below (bottom-up) or entirely above (top-down) the remaining
points.  Recursive diagonalization yields a tree whose per-node work is one
constant-size combination of ten canonical boxes:

  whole      the bounding box of the subset (score of everything),
  opt        an optimal box,
  c1..c4     optimal boxes forced to contain the bottom-left, bottom-right,
             top-right, top-left vertex of the subset's bounding box,
  s12..s41   optimal boxes forced to contain both bottom / right / top /
             left vertices.

Point sets that do not diagonalize have exactly four extreme points which
contain a windmill: four points each realizing one side of the bounding
box, arranged so that no split works.  Peeling the extreme points restores
diagonalizability; the resulting tree has one-child "peel" nodes whose ten
boxes are rebuilt from sweeps over the full subset.
"""
from __future__ import annotations

from itertools import combinations

from .interval import empty_interval, imax, join3
from .mcs_dynamic import McsSplayTree
from .score import OpCounters, Point, ScoreFunction, compose
from .sweep import BoxResult, solve_baseline

BOTTOM_UP = "bottom_up"
TOP_DOWN = "top_down"


# ---------------------------------------------------------------------------
# diagonalization test and tree construction


def try_diagonalize(pi, ctr: OpCounters | None = None):
    """Find a diagonalization of a y-rank sequence ``pi`` (a permutation of
    1..n given in x-order).

    Scans prefixes and suffixes in lockstep, so a split at k costs
    O(min(k, n - k)); a miss costs O(n).  Returns (k, kind) for the first
    split found, or None.
    """
    ctr = ctr if ctr is not None else OpCounters()
    n = len(pi)
    if n <= 1:
        return None
    max_l = min_l = pi[0]
    max_r = min_r = pi[-1]
    for j in range(1, (n // 2) + 1):
        if pi[j - 1] > max_l:
            max_l = pi[j - 1]
        if pi[j - 1] < min_l:
            min_l = pi[j - 1]
        if pi[n - j] > max_r:
            max_r = pi[n - j]
        if pi[n - j] < min_r:
            min_r = pi[n - j]
        ctr.coord_cmps += 4
        if j < n:
            ctr.coord_cmps += 2
            if max_l == j:
                return j, BOTTOM_UP
            if min_l == n - j + 1:
                return j, TOP_DOWN
        k = n - j
        if k != j and k > 0:
            ctr.coord_cmps += 2
            if min_r == k + 1:
                return k, BOTTOM_UP
            if max_r == j:
                return k, TOP_DOWN
    return None


def _rank_sequence(points):
    """y-ranks (1-based) of points listed in x-order."""
    order = sorted(range(len(points)), key=lambda i: (points[i].y, points[i].id))
    rank = [0] * len(points)
    for r, i in enumerate(order, start=1):
        rank[i] = r
    return rank


def _split_ranks(pi, k, kind):
    """Rank sequences of the two sides after a split; O(n), no comparisons."""
    n = len(pi)
    if kind == BOTTOM_UP:
        return pi[:k], [v - k for v in pi[k:]]
    return [v - (n - k) for v in pi[:k]], pi[k:]


class DLeaf:
    __slots__ = ("points",)

    def __init__(self, points):
        self.points = points


class DNode:
    __slots__ = ("kind", "left", "right")

    def __init__(self, kind, left, right):
        self.kind = kind
        self.left = left
        self.right = right


class PeelNode:
    """One-child node: four extreme points peeled off a non-diagonalizable
    subset.  ``child`` is None when nothing remains."""

    __slots__ = ("xpoints", "child", "points")

    def __init__(self, xpoints, child, points):
        self.xpoints = xpoints
        self.child = child
        self.points = points


def _build(points_x, pi, ctr, peel: bool):
    """Iterate on the larger side, recurse on the smaller, so recursion depth
    stays logarithmic even for chain-shaped trees."""
    pending = []
    pts, ranks = points_x, pi
    while True:
        split = try_diagonalize(ranks, ctr) if len(pts) > 1 else None
        if split is None:
            if len(pts) <= 1:
                node = DLeaf(pts)
            elif peel:
                node = _build_peel(pts, ctr)
            else:
                node = DLeaf(pts)
            break
        k, kind = split
        lp, rp = pts[:k], pts[k:]
        lr, rr = _split_ranks(ranks, k, kind)
        if k <= len(pts) - k:
            pending.append((kind, _build(lp, lr, ctr, peel), "L"))
            pts, ranks = rp, rr
        else:
            pending.append((kind, _build(rp, rr, ctr, peel), "R"))
            pts, ranks = lp, lr
    for kind, sub, side in reversed(pending):
        node = DNode(kind, sub, node) if side == "L" else DNode(kind, node, sub)
    return node


def _build_peel(pts, ctr):
    ext = extreme_points(pts)
    ext_ids = {p.id for p in ext}
    rest = [p for p in pts if p.id not in ext_ids]
    child = None
    if rest:
        child = _build(rest, _rank_sequence(rest), ctr, peel=True)
    return PeelNode(ext, child, pts)


def build_dtree(points, ctr: OpCounters | None = None):
    """Diagonalization tree.  Raises if some subset fails to diagonalize."""
    ctr = ctr if ctr is not None else OpCounters()
    if not points:
        raise ValueError("need at least one point")
    pts = sorted(points, key=lambda p: (p.x, p.id))
    root = _build(pts, _rank_sequence(pts), ctr, peel=False)
    _check_fully_diagonalized(root)
    return root


def _check_fully_diagonalized(node):
    # iterative so chain-shaped trees do not overflow the stack
    stack = [node]
    while stack:
        v = stack.pop()
        if isinstance(v, DLeaf):
            if len(v.points) > 1:
                raise ValueError(
                    f"subset of size {len(v.points)} does not diagonalize"
                )
        elif isinstance(v, DNode):
            stack.append(v.left)
            stack.append(v.right)


def build_dstar(points, ctr: OpCounters | None = None):
    """Diagonalization tree with extreme-point peeling at stuck subsets."""
    ctr = ctr if ctr is not None else OpCounters()
    if not points:
        raise ValueError("need at least one point")
    pts = sorted(points, key=lambda p: (p.x, p.id))
    return _build(pts, _rank_sequence(pts), ctr, peel=True)


def tree_leaf_sets(node):
    """Frozensets of point ids at the leaves, for partition comparisons."""
    out = []
    stack = [node]
    while stack:
        v = stack.pop()
        if isinstance(v, DLeaf):
            if v.points:
                out.append(frozenset(p.id for p in v.points))
        elif isinstance(v, DNode):
            stack.append(v.left)
            stack.append(v.right)
        else:
            out.append(frozenset(p.id for p in v.xpoints))
            if v.child is not None:
                stack.append(v.child)
    return sorted(out, key=sorted)


def count_peels(node) -> int:
    """Number of one-child nodes (peeled subsets with a non-empty rest)."""
    if isinstance(node, DLeaf):
        return 0
    if isinstance(node, DNode):
        return count_peels(node.left) + count_peels(node.right)
    return (1 if node.child is not None else 0) + (
        count_peels(node.child) if node.child is not None else 0
    )


# ---------------------------------------------------------------------------
# extreme points and windmills


def extreme_points(points):
    """The points realizing min/max x and y; deduplicated, at most four."""
    if not points:
        raise ValueError("need at least one point")
    picks = [
        min(points, key=lambda p: (p.x, p.id)),
        max(points, key=lambda p: (p.x, p.id)),
        min(points, key=lambda p: (p.y, p.id)),
        max(points, key=lambda p: (p.y, p.id)),
    ]
    seen = {}
    for p in picks:
        seen.setdefault(p.id, p)
    return list(seen.values())


def is_windmill(points) -> bool:
    """Four points, one per bounding-box side, that do not diagonalize."""
    if len(points) != 4:
        return False
    pts = sorted(points, key=lambda p: (p.x, p.id))
    return try_diagonalize(_rank_sequence(pts)) is None


def find_windmill(points):
    """A windmill containing at least one extreme point, if one exists.

    For a non-diagonalizable input a windmill is guaranteed; returns None
    only when the precondition is violated.
    """
    ext = extreme_points(points)
    others = [p for p in points if all(p.id != e.id for e in ext)]
    for e in ext:
        pool = [p for p in ext if p.id != e.id] + others
        for trio in combinations(pool, 3):
            if is_windmill([e, *trio]):
                return [e, *trio]
    return None


# ---------------------------------------------------------------------------
# the ten boxes


class Member:
    """One canonical box: geometry plus the composed score of the points of
    the subset it contains.  ``box`` is None for an empty selection."""

    __slots__ = ("box", "score")

    def __init__(self, box, score):
        self.box = box
        self.score = score

    def __repr__(self):
        return f"Member(box={self.box}, score={self.score})"


class TenBoxes:
    __slots__ = ("whole", "opt", "c1", "c2", "c3", "c4", "s12", "s23", "s34", "s41")

    FIELDS = ("whole", "opt", "c1", "c2", "c3", "c4", "s12", "s23", "s34", "s41")

    def __init__(self, **kw):
        for name in self.FIELDS:
            setattr(self, name, kw[name])

    def as_dict(self):
        return {name: getattr(self, name) for name in self.FIELDS}


def _box_union(a, b):
    return (min(a[0], b[0]), max(a[1], b[1]), min(a[2], b[2]), max(a[3], b[3]))


def _box_with_point(box, x, y):
    return (min(box[0], x), max(box[1], x), min(box[2], y), max(box[3], y))


def _m_union(a: Member, b: Member, f, ctr) -> Member:
    return Member(_box_union(a.box, b.box), compose(f, a.score, b.score, ctr))


def _m_extend(m: Member, x, y) -> Member:
    if m.box is None:
        return Member((x, x, y, y), m.score)
    return Member(_box_with_point(m.box, x, y), m.score)


def _m_max(ctr, *members) -> Member:
    best = members[0]
    for m in members[1:]:
        ctr.score_cmps += 1
        if m.score > best.score:
            best = m
    return best


def _reflect_box(box):
    if box is None:
        return None
    return (box[0], box[1], -box[3], -box[2])


def _reflect_ten(t: TenBoxes) -> TenBoxes:
    r = lambda m: Member(_reflect_box(m.box), m.score)
    return TenBoxes(
        whole=r(t.whole),
        opt=r(t.opt),
        c1=r(t.c4),
        c2=r(t.c3),
        c3=r(t.c2),
        c4=r(t.c1),
        s12=r(t.s34),
        s23=r(t.s23),
        s34=r(t.s12),
        s41=r(t.s41),
    )


def _combine_bottom_up(tl: TenBoxes, tr: TenBoxes, f, ctr) -> TenBoxes:
    """Combination when the left side lies entirely below the right side."""
    whole = _m_union(tl.whole, tr.whole, f, ctr)
    u2 = (whole.box[1], whole.box[2])  # bottom-right vertex
    u4 = (whole.box[0], whole.box[3])  # top-left vertex
    opt = _m_max(ctr, tl.opt, tr.opt, _m_union(tl.c3, tr.c1, f, ctr))
    c1 = _m_max(ctr, tl.c1, _m_union(tl.whole, tr.c1, f, ctr))
    # u2 and u4 are vertices of the combined bounding box that belong to
    # neither block, so the degenerate empty box sitting there is always a
    # valid anchored candidate that no child member can represent.
    empty2 = Member((u2[0], u2[0], u2[1], u2[1]), f.empty_score)
    empty4 = Member((u4[0], u4[0], u4[1], u4[1]), f.empty_score)
    c2 = _m_extend(
        _m_max(ctr, tl.c2, tr.c2, _m_union(tl.s23, tr.s12, f, ctr), empty2), *u2
    )
    c3 = _m_max(ctr, _m_union(tl.c3, tr.whole, f, ctr), tr.c3)
    c4 = _m_extend(
        _m_max(ctr, tl.c4, tr.c4, _m_union(tl.s34, tr.s41, f, ctr), empty4), *u4
    )
    s12 = _m_max(ctr, _m_extend(tl.s12, *u2), _m_union(tl.whole, tr.s12, f, ctr))
    s23 = _m_max(ctr, _m_extend(tr.s23, *u2), _m_union(tr.whole, tl.s23, f, ctr))
    s34 = _m_max(ctr, _m_extend(tr.s34, *u4), _m_union(tr.whole, tl.s34, f, ctr))
    s41 = _m_max(ctr, _m_extend(tl.s41, *u4), _m_union(tl.whole, tr.s41, f, ctr))
    return TenBoxes(
        whole=whole, opt=opt, c1=c1, c2=c2, c3=c3, c4=c4,
        s12=s12, s23=s23, s34=s34, s41=s41,
    )


def combine_ten(tl: TenBoxes, tr: TenBoxes, kind, f: ScoreFunction, ctr: OpCounters) -> TenBoxes:
    """Combine the ten boxes of a left block and a right block split by a
    diagonalization of the given kind."""
    if kind == BOTTOM_UP:
        return _combine_bottom_up(tl, tr, f, ctr)
    return _reflect_ten(_combine_bottom_up(_reflect_ten(tl), _reflect_ten(tr), f, ctr))


# ---------------------------------------------------------------------------
# direct computation of the ten boxes by sweeps


def _bbox(points):
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return (min(xs), max(xs), min(ys), max(ys))


def _cumulative_side(points_in_order, f, ctr, box_of):
    """Best prefix of a forced-inclusion family: fold points one by one,
    tracking the best score seen.  ``box_of(i)`` is the box once the first
    i+1 points are in."""
    best = None
    acc = None
    for i, p in enumerate(points_in_order):
        v = f.point_score(p)
        acc = v if acc is None else compose(f, acc, v, ctr)
        if best is None or _gt(acc, best.score, ctr):
            best = Member(box_of(i), acc)
    return best


def _gt(a, b, ctr):
    ctr.score_cmps += 1
    return a > b


class _AnchoredPass:
    """One sweep of a peel subset: points are inserted in sweep order into
    two splay trees split around the first (extreme) point, giving, after
    every step, the best prefix/suffix/full runs and the best run through
    the extreme point."""

    def __init__(self, first: Point, f, ctr):
        self.f = f
        self.ctr = ctr
        self.first = first
        self.key = (first.x, first.id)
        self.value = f.point_score(first)
        self.left = McsSplayTree(f, ctr, with_m=False)
        self.right = McsSplayTree(f, ctr, with_m=False)
        self._e = empty_interval(f.empty_score)

    def insert(self, p: Point):
        k = (p.x, p.id)
        (self.left if k < self.key else self.right).insert(k, self.f.point_score(p))

    def _laug(self):
        return self.left.root.aug if self.left.root is not None else None

    def _raug(self):
        return self.right.root.aug if self.right.root is not None else None

    def through(self):
        la, ra = self._laug(), self._raug()
        R = la.R if la is not None else self._e
        L = ra.L if ra is not None else self._e
        return join3(R, self.key, self.value, L, self.f, self.ctr)

    def best_prefix(self, force_through_first: bool):
        """Best prefix of the full key order; when the first point is the
        leftmost, every non-degenerate prefix contains it, so the empty
        option is dropped."""
        la, ra = self._laug(), self._raug()
        rL = ra.L if ra is not None else self._e
        if force_through_first:
            return join3(self._e, self.key, self.value, rL, self.f, self.ctr)
        lI = la.I if la is not None else self._e
        lL = la.L if la is not None else self._e
        return imax(lL, join3(lI, self.key, self.value, rL, self.f, self.ctr), self.ctr)

    def best_suffix(self, force_through_first: bool):
        la, ra = self._laug(), self._raug()
        lR = la.R if la is not None else self._e
        if force_through_first:
            return join3(lR, self.key, self.value, self._e, self.f, self.ctr)
        rI = ra.I if ra is not None else self._e
        rR = ra.R if ra is not None else self._e
        return imax(join3(lR, self.key, self.value, rI, self.f, self.ctr), rR, self.ctr)


def _anchored_pass_vertical(points, f, ctr, from_bottom: bool, bbox, want_through: bool):
    """Sweep in y-order (bottom-up or top-down) over x-keyed trees.

    Returns (corner-left member, corner-right member, side member, through
    member or None) anchored to the bottom (or top) of ``bbox``.
    """
    X0, X1, Y0, Y1 = bbox
    order = sorted(points, key=lambda p: (p.y, p.id), reverse=not from_bottom)
    first = order[0]
    ay = Y0 if from_bottom else Y1  # anchored horizontal edge

    def ybounds(y):
        return (min(ay, y), max(ay, y))

    left_is_first = first.x == X0
    right_is_first = first.x == X1
    sweep = _AnchoredPass(first, f, ctr)
    e_score = f.empty_score
    best_cl = None if left_is_first else Member((X0, X0, ay, ay), e_score)
    best_cr = None if right_is_first else Member((X1, X1, ay, ay), e_score)
    best_side = None
    best_th = None
    acc = None
    for i, p in enumerate(order):
        if i > 0:
            sweep.insert(p)
        ylo, yhi = ybounds(p.y)
        # corner boxes: best prefix / suffix of the active x-order
        pref = sweep.best_prefix(left_is_first)
        cl = Member(
            ((X0, X0, ay, ay) if pref.is_empty else (X0, pref.hi[0], ylo, yhi)),
            pref.score,
        )
        if best_cl is None or _gt(cl.score, best_cl.score, ctr):
            best_cl = cl
        suf = sweep.best_suffix(right_is_first)
        cr = Member(
            ((X1, X1, ay, ay) if suf.is_empty else (suf.lo[0], X1, ylo, yhi)),
            suf.score,
        )
        if best_cr is None or _gt(cr.score, best_cr.score, ctr):
            best_cr = cr
        # side box: everything active
        v = f.point_score(p)
        acc = v if acc is None else compose(f, acc, v, ctr)
        if best_side is None or _gt(acc, best_side.score, ctr):
            best_side = Member((X0, X1, ylo, yhi), acc)
        if want_through:
            th = sweep.through()
            m = Member((th.lo[0], th.hi[0], ylo, yhi), th.score)
            if best_th is None or _gt(m.score, best_th.score, ctr):
                best_th = m
    return best_cl, best_cr, best_side, best_th, acc


def _through_pass_horizontal(points, f, ctr, from_left: bool):
    """Sweep in x-order over y-keyed trees; best box with its left (or
    right) edge through the first point."""
    order = sorted(points, key=lambda p: (p.x, p.id), reverse=not from_left)
    first = order[0]
    best = None
    sweep = None
    for i, p in enumerate(order):
        q = Point(p.y, p.x, p.weight, p.color, p.id)  # transpose
        if i == 0:
            sweep = _AnchoredPass(q, f, ctr)
        else:
            sweep.insert(q)
        th = sweep.through()
        ylo, yhi = th.lo[0], th.hi[0]
        xlo = min(first.x, p.x)
        xhi = max(first.x, p.x)
        m = Member((xlo, xhi, ylo, yhi), th.score)
        if best is None or _gt(m.score, best.score, ctr):
            best = m
    return best


def anchored_members(points, f: ScoreFunction, ctr: OpCounters, want_throughs: bool = False):
    """The nine anchored members of the ten boxes (everything but ``opt``),
    computed by sweeps.  With ``want_throughs`` also returns the best boxes
    forced through each extreme point, one per bounding-box side.
    """
    box = _bbox(points)
    X0, X1, Y0, Y1 = box
    by_x = sorted(points, key=lambda p: (p.x, p.id))
    cl_b, cr_b, side_b, th_b, total = _anchored_pass_vertical(
        points, f, ctr, True, box, want_throughs
    )
    cl_t, cr_t, side_t, th_t, _ = _anchored_pass_vertical(
        points, f, ctr, False, box, want_throughs
    )
    s41 = _cumulative_side(
        by_x, f, ctr, lambda i: (X0, by_x[i].x, Y0, Y1)
    )
    s23 = _cumulative_side(
        by_x[::-1], f, ctr, lambda i: (by_x[len(by_x) - 1 - i].x, X1, Y0, Y1)
    )
    members = {
        "whole": Member(box, total),
        "c1": cl_b,
        "c2": cr_b,
        "c3": cr_t,
        "c4": cl_t,
        "s12": side_b,
        "s34": side_t,
        "s41": s41,
        "s23": s23,
    }
    throughs = None
    if want_throughs:
        throughs = [th_b, th_t]
        lm = min(points, key=lambda p: (p.x, p.id))
        rm = max(points, key=lambda p: (p.x, p.id))
        bm = min(points, key=lambda p: (p.y, p.id))
        tm = max(points, key=lambda p: (p.y, p.id))
        if lm.id not in (bm.id, tm.id):
            throughs.append(_through_pass_horizontal(points, f, ctr, True))
        if rm.id not in (bm.id, tm.id):
            throughs.append(_through_pass_horizontal(points, f, ctr, False))
    return members, throughs


def ten_boxes_direct(points, f: ScoreFunction, ctr: OpCounters | None = None, inner=None) -> TenBoxes:
    """Compute the ten boxes of a point set from scratch."""
    ctr = ctr if ctr is not None else OpCounters()
    inner = inner if inner is not None else solve_baseline
    if not points:
        raise ValueError("need at least one point")
    members, _ = anchored_members(points, f, ctr)
    r = inner(points, f, ctr)
    members["opt"] = Member(r.box, r.score)
    return TenBoxes(**members)


# ---------------------------------------------------------------------------
# solving over the trees


def _peel_ten(node: PeelNode, child_ten, f, ctr, inner) -> TenBoxes:
    points = node.points
    if child_ten is None:
        return ten_boxes_direct(points, f, ctr, inner)
    members, throughs = anchored_members(points, f, ctr, want_throughs=True)
    cands = [child_ten.opt] + [t for t in throughs if t is not None]
    members["opt"] = _m_max(ctr, *cands)
    return TenBoxes(**members)


def _solve_tree(root, f, ctr, inner) -> TenBoxes:
    # iterative post-order so chain-shaped trees do not overflow the stack
    ten_of = {}
    stack = [(root, False)]
    while stack:
        node, done = stack.pop()
        if isinstance(node, DLeaf):
            ten_of[id(node)] = ten_boxes_direct(node.points, f, ctr, inner)
        elif isinstance(node, DNode):
            if done:
                ten_of[id(node)] = combine_ten(
                    ten_of.pop(id(node.left)), ten_of.pop(id(node.right)), node.kind, f, ctr
                )
            else:
                stack.append((node, True))
                stack.append((node.left, False))
                stack.append((node.right, False))
        else:  # PeelNode
            if done or node.child is None:
                child = ten_of.pop(id(node.child)) if node.child is not None else None
                ten_of[id(node)] = _peel_ten(node, child, f, ctr, inner)
            else:
                stack.append((node, True))
                stack.append((node.child, False))
    return ten_of[id(root)]


def _result_from_member(points, m: Member, ctr) -> BoxResult:
    if m.box is None:
        return BoxResult((), None, m.score, ctr)
    xlo, xhi, ylo, yhi = m.box
    sel = [p for p in points if xlo <= p.x <= xhi and ylo <= p.y <= yhi]
    if not sel:
        return BoxResult((), None, m.score, ctr)
    xs = [p.x for p in sel]
    ys = [p.y for p in sel]
    return BoxResult(
        tuple(sorted(p.id for p in sel)),
        (min(xs), max(xs), min(ys), max(ys)),
        m.score,
        ctr,
    )


def solve_dtree(points, f: ScoreFunction, ctr: OpCounters | None = None, inner=None) -> BoxResult:
    """Optimal box via recursive diagonalization.  Requires a fully
    diagonalizable instance."""
    ctr = ctr if ctr is not None else OpCounters()
    inner = inner if inner is not None else solve_baseline
    if not points:
        return BoxResult((), None, f.empty_score, ctr)
    root = build_dtree(points, ctr)
    ten = _solve_tree(root, f, ctr, inner)
    return _result_from_member(points, ten.opt, ctr)


def solve_dstar(points, f: ScoreFunction, ctr: OpCounters | None = None, inner=None) -> BoxResult:
    """Optimal box via diagonalization with extreme-point peeling; works on
    any instance."""
    ctr = ctr if ctr is not None else OpCounters()
    inner = inner if inner is not None else solve_baseline
    if not points:
        return BoxResult((), None, f.empty_score, ctr)
    root = build_dstar(points, ctr)
    ten = _solve_tree(root, f, ctr, inner)
    return _result_from_member(points, ten.opt, ctr)


# ---------------------------------------------------------------------------
# boundary-constrained search


def boundary_constrained_best(points, q: Point, edge: str, f: ScoreFunction, ctr: OpCounters | None = None) -> BoxResult:
    """Best box whose stated edge passes through ``q`` (with ``q`` inside).

    Implemented as one sweep away from the fixed edge, keeping the best run
    through ``q``'s key after every step.
    """
    ctr = ctr if ctr is not None else OpCounters()
    if edge in ("left", "right"):
        flipped = boundary_constrained_best(
            [Point(p.y, p.x, p.weight, p.color, p.id) for p in points],
            Point(q.y, q.x, q.weight, q.color, q.id),
            "bottom" if edge == "left" else "top",
            f,
            ctr,
        )
        box = flipped.box
        if box is not None:
            box = (box[2], box[3], box[0], box[1])
        return BoxResult(flipped.ids, box, flipped.score, ctr)
    if edge == "top":
        eligible = [p for p in points if p.y <= q.y and p.id != q.id]
        order = sorted(eligible, key=lambda p: (p.y, p.id), reverse=True)
    elif edge == "bottom":
        eligible = [p for p in points if p.y >= q.y and p.id != q.id]
        order = sorted(eligible, key=lambda p: (p.y, p.id))
    else:
        raise ValueError(f"unknown edge {edge!r}")
    sweep = _AnchoredPass(q, f, ctr)
    best = sweep.through()
    best_far = q.y
    for p in order:
        sweep.insert(p)
        cand = sweep.through()
        if _gt(cand.score, best.score, ctr):
            best = cand
            best_far = p.y
    lo_key, hi_key = best.lo, best.hi
    ylo, yhi = (best_far, q.y) if edge == "top" else (q.y, best_far)
    sel = [
        p
        for p in points
        if ylo <= p.y <= yhi and lo_key <= (p.x, p.id) <= hi_key
    ]
    xs = [p.x for p in sel]
    ys = [p.y for p in sel]
    return BoxResult(
        tuple(sorted(p.id for p in sel)),
        (min(xs), max(xs), min(ys), max(ys)),
        best.score,
        ctr,
    )
