"""Dynamic trees for the best consecutive subsequence under insertion,
deletion, and value updates.

Elements live at the nodes.  A node summary covers its whole subtree:

    I = I(left) + [k] + I(right)
    L = max(L(left), I(left) + [k] + L(right))
    R = max(R(left) + [k] + I(right), R(right))
    M = max(M(left), M(right), R(left) + [k] + L(right))

Two balancing strategies are provided: height balancing (rotations on
insert/delete keep the tree within the AVL height bound) and self-adjusting
splaying (accessed nodes move to the root; runs of nearby keys are cheap by
the dynamic finger property).
"""
from __future__ import annotations

from .interval import (
    Aug,
    Interval,
    combine_aug3,
    empty_aug,
    imax,
    join3,
)
from .score import OpCounters, ScoreFunction


class _Node:
    __slots__ = ("key", "value", "left", "right", "parent", "height", "aug")

    def __init__(self, key, value):
        self.key = key
        self.value = value
        self.left = None
        self.right = None
        self.parent = None
        self.height = 1
        self.aug = None


def _aug_of(node, empty):
    return node.aug if node is not None else empty


class _McsTreeBase:
    """Shared queries for both dynamic variants."""

    def __init__(self, f: ScoreFunction, ctr: OpCounters | None = None, with_m: bool = True):
        self.f = f
        self.ctr = ctr if ctr is not None else OpCounters()
        self.root = None
        self.n = 0
        self.with_m = with_m  # sweeps that never read M can skip its upkeep
        self._empty_aug = empty_aug(f.empty_score)

    def _pull(self, node):
        node.aug = combine_aug3(
            _aug_of(node.left, self._empty_aug),
            node.key,
            node.value,
            _aug_of(node.right, self._empty_aug),
            self.f,
            self.ctr,
            self.with_m,
        )

    # -- queries ----------------------------------------------------------

    def global_best(self) -> Interval:
        if self.root is None:
            return self._empty_aug.M
        return self.root.aug.M

    def _find(self, key):
        node = self.root
        while node is not None:
            self.ctr.coord_cmps += 1
            if key == node.key:
                return node
            node = node.left if key < node.key else node.right
        raise KeyError(key)

    def search(self, key):
        return self._find(key).value

    def _range_aug(self, node, lo, hi) -> Aug:
        """Summary of keys in [lo, hi]; ``None`` bounds are unbounded."""
        if node is None:
            return self._empty_aug
        if hi is not None and node.key > hi:
            self.ctr.coord_cmps += 1
            return self._range_aug(node.left, lo, hi)
        if lo is not None and node.key < lo:
            self.ctr.coord_cmps += 1
            return self._range_aug(node.right, lo, hi)
        if lo is None and hi is None:
            return node.aug
        a = self._range_aug(node.left, lo, None)
        b = self._range_aug(node.right, None, hi)
        return combine_aug3(a, node.key, node.value, b, self.f, self.ctr)

    def _aug_below(self, node, key) -> Aug:
        """Summary of keys strictly below ``key``."""
        if node is None:
            return self._empty_aug
        self.ctr.coord_cmps += 1
        if node.key >= key:
            return self._aug_below(node.left, key)
        return combine_aug3(
            _aug_of(node.left, self._empty_aug),
            node.key,
            node.value,
            self._aug_below(node.right, key),
            self.f,
            self.ctr,
        )

    def _aug_above(self, node, key) -> Aug:
        if node is None:
            return self._empty_aug
        self.ctr.coord_cmps += 1
        if node.key <= key:
            return self._aug_above(node.right, key)
        return combine_aug3(
            self._aug_above(node.left, key),
            node.key,
            node.value,
            _aug_of(node.right, self._empty_aug),
            self.f,
            self.ctr,
        )

    def subrange_best(self, lo_key, hi_key) -> Interval:
        if lo_key > hi_key:
            raise ValueError("lo_key must not exceed hi_key")
        lo_node = self._find(lo_key)
        self._find(hi_key)
        result = self._range_aug(self.root, lo_key, hi_key).M
        self._after_query(lo_node)
        return result

    def best_through(self, key) -> Interval:
        node = self._find(key)
        below = self._aug_below(self.root, key)
        above = self._aug_above(self.root, key)
        result = join3(below.R, key, node.value, above.L, self.f, self.ctr)
        self._after_query(node)
        return result

    def _after_query(self, node):
        pass

    def update_value(self, key, value):
        node = self._find(key)
        node.value = value
        self._fix_to_root(node)

    def _fix_to_root(self, node):
        while node is not None:
            self._pull(node)
            node = node.parent

    # -- diagnostics ------------------------------------------------------

    def height(self) -> int:
        def h(node):
            return 0 if node is None else 1 + max(h(node.left), h(node.right))

        return h(self.root)

    def keys_inorder(self):
        out = []
        stack = []
        node = self.root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node.left
            node = stack.pop()
            out.append(node.key)
            node = node.right
        return out

    def validate(self) -> bool:
        """Recompute every node summary bottom-up and compare fields."""
        scratch = OpCounters()
        empty = self._empty_aug

        def check(node):
            if node is None:
                return True
            if not (check(node.left) and check(node.right)):
                return False
            want = combine_aug3(
                _aug_of(node.left, empty),
                node.key,
                node.value,
                _aug_of(node.right, empty),
                self.f,
                scratch,
            )
            got = node.aug
            return (
                got.I == want.I
                and got.L == want.L
                and got.R == want.R
                and got.M == want.M
            )

        return check(self.root)


class McsBalancedTree(_McsTreeBase):
    """Height-balanced variant; every operation is worst-case logarithmic."""

    def __init__(self, f: ScoreFunction, ctr: OpCounters | None = None):
        super().__init__(f, ctr)
        self.rotations = 0

    @staticmethod
    def _h(node):
        return node.height if node is not None else 0

    def _refresh(self, node):
        node.height = 1 + max(self._h(node.left), self._h(node.right))
        self._pull(node)

    def _set_child(self, parent, node):
        if node is not None:
            node.parent = parent

    def _rotate_right(self, y):
        x = y.left
        y.left = x.right
        self._set_child(y, y.left)
        x.right = y
        y.parent = x
        self._refresh(y)
        self._refresh(x)
        self.rotations += 1
        return x

    def _rotate_left(self, x):
        y = x.right
        x.right = y.left
        self._set_child(x, x.right)
        y.left = x
        x.parent = y
        self._refresh(x)
        self._refresh(y)
        self.rotations += 1
        return y

    def _balance(self, node):
        self._refresh(node)
        bal = self._h(node.left) - self._h(node.right)
        if bal > 1:
            if self._h(node.left.left) < self._h(node.left.right):
                node.left = self._rotate_left(node.left)
                node.left.parent = node
            return self._rotate_right(node)
        if bal < -1:
            if self._h(node.right.right) < self._h(node.right.left):
                node.right = self._rotate_right(node.right)
                node.right.parent = node
            return self._rotate_left(node)
        return node

    def insert(self, key, value):
        def rec(node):
            if node is None:
                leaf = _Node(key, value)
                self._pull(leaf)
                return leaf
            self.ctr.coord_cmps += 1
            if key == node.key:
                raise ValueError(f"duplicate key {key!r}")
            if key < node.key:
                node.left = rec(node.left)
                node.left.parent = node
            else:
                node.right = rec(node.right)
                node.right.parent = node
            return self._balance(node)

        self.root = rec(self.root)
        self.root.parent = None
        self.n += 1

    def delete(self, key):
        def rec(node):
            if node is None:
                raise KeyError(key)
            self.ctr.coord_cmps += 1
            if key < node.key:
                node.left = rec(node.left)
                self._set_child(node, node.left)
            elif key > node.key:
                node.right = rec(node.right)
                self._set_child(node, node.right)
            else:
                if node.left is None:
                    return node.right
                if node.right is None:
                    return node.left
                succ = node.right
                while succ.left is not None:
                    succ = succ.left
                node.key, node.value = succ.key, succ.value
                node.right = _delete_min(node.right)
                self._set_child(node, node.right)
            return self._balance(node)

        def _delete_min(node):
            if node.left is None:
                return node.right
            node.left = _delete_min(node.left)
            self._set_child(node, node.left)
            return self._balance(node)

        self.root = rec(self.root)
        if self.root is not None:
            self.root.parent = None
        self.n -= 1

    def update_value(self, key, value):
        node = self._find(key)
        node.value = value
        while node is not None:
            self._refresh(node)
            node = node.parent


class McsSplayTree(_McsTreeBase):
    """Self-adjusting variant.  Insertions splay the new node, searches splay
    the found node, deletions splay the predecessor into the root position,
    and queries splay the deepest node they touch."""

    def __init__(self, f: ScoreFunction, ctr: OpCounters | None = None, with_m: bool = True):
        super().__init__(f, ctr, with_m)
        self.rotations = 0

    def _rotate_up(self, x):
        p = x.parent
        g = p.parent
        if p.left is x:
            p.left = x.right
            if p.left is not None:
                p.left.parent = p
            x.right = p
        else:
            p.right = x.left
            if p.right is not None:
                p.right.parent = p
            x.left = p
        p.parent = x
        x.parent = g
        if g is not None:
            if g.left is p:
                g.left = x
            else:
                g.right = x
        self.rotations += 1
        return p

    @staticmethod
    def _depth(node):
        d = 0
        while node.parent is not None:
            node = node.parent
            d += 1
        return d

    def _splay(self, x):
        # Rotate first, restore summaries afterwards: a node's summary is
        # only read once its children are final, so pulling the displaced
        # nodes bottom-up at the end avoids recomputing ones that rotations
        # would touch again.
        moved = []
        while x.parent is not None:
            p = x.parent
            g = p.parent
            if g is None:
                moved.append(self._rotate_up(x))
            elif (g.left is p) == (p.left is x):  # zig-zig
                moved.append(self._rotate_up(p))
                moved.append(self._rotate_up(x))
            else:  # zig-zag
                moved.append(self._rotate_up(x))
                moved.append(self._rotate_up(x))
        self.root = x
        fresh = []
        seen = set()
        for node in moved:
            if id(node) not in seen:
                seen.add(id(node))
                fresh.append(node)
        fresh.sort(key=self._depth, reverse=True)
        for node in fresh:
            self._pull(node)
        self._pull(x)

    def insert(self, key, value):
        if self.root is None:
            node = _Node(key, value)
            self._pull(node)
            self.root = node
            self.n = 1
            return
        cur = self.root
        while True:
            self.ctr.coord_cmps += 1
            if key == cur.key:
                raise ValueError(f"duplicate key {key!r}")
            nxt = cur.left if key < cur.key else cur.right
            if nxt is None:
                break
            cur = nxt
        node = _Node(key, value)
        node.parent = cur
        if key < cur.key:
            cur.left = node
        else:
            cur.right = node
        self._pull(node)
        self._splay(node)
        self.n += 1

    def search(self, key):
        node = self._find(key)
        self._splay(node)
        return node.value

    def delete(self, key):
        node = self._find(key)
        self._splay(node)
        left, right = node.left, node.right
        if left is not None:
            left.parent = None
        if right is not None:
            right.parent = None
        if left is None:
            self.root = right
        else:
            pred = left
            while pred.right is not None:
                pred = pred.right
            self.root = left
            self._splay(pred)
            pred.right = right
            if right is not None:
                right.parent = pred
            self._pull(pred)
            self.root = pred
        self.n -= 1

    def update_value(self, key, value):
        node = self._find(key)
        self._splay(node)
        node.value = value
        self._pull(node)

    def _after_query(self, node):
        self._splay(node)


def splay_access_cost_probe(script, f: ScoreFunction):
    """Run a mutation/access script on a fresh splay tree and report cost.

    ``script`` is a sequence of tuples: ("insert", key, value),
    ("delete", key), ("search", key), ("update", key, value),
    ("global",), ("through", key), or ("subrange", lo, hi).
    Returns the rotation total and the counter snapshot.
    """
    ctr = OpCounters()
    tree = McsSplayTree(f, ctr)
    for op in script:
        kind = op[0]
        if kind == "insert":
            tree.insert(op[1], op[2])
        elif kind == "delete":
            tree.delete(op[1])
        elif kind == "search":
            tree.search(op[1])
        elif kind == "update":
            tree.update_value(op[1], op[2])
        elif kind == "global":
            tree.global_best()
        elif kind == "through":
            tree.best_through(op[1])
        elif kind == "subrange":
            tree.subrange_best(op[1], op[2])
        else:
            raise ValueError(f"unknown op {kind!r}")
    return {"rotations": tree.rotations, "counters": ctr.snapshot(), "tree": tree}
