"""
Maximum-scoring runs of a sequence, three ways
==============================================

The same query interface -- best run overall, best run inside a window,
best run through a position -- backed by a static tree over a fixed key
set, a height-balanced tree, and a splay tree.
"""

from planarbox import OpCounters, StaticMcsTree, make_score_function
from planarbox.mcs_dynamic import McsBalancedTree, McsSplayTree

f = make_score_function("sum")
values = [3, -4, 5, -2, 4, 1, -9, 6, -1]

# A static tree is built over the key universe up front; values arrive
# (and leave) through activation.
static = StaticMcsTree(range(len(values)), f)
for k, v in enumerate(values):
    static.activate(k, v)

print("sequence:", values)
best = static.global_best()
print(f"best run overall: positions {best.lo}..{best.hi}, score {best.score}")
print("best run within 2..6:", static.subrange_best(2, 6).score)
print("best run through position 6:", static.best_through(6).score)

# Drop the -9 and the two halves merge.
static.deactivate(6)
print("after removing position 6:", static.global_best().score)
static.activate(6, -9)

# The dynamic trees support arbitrary keys and true insertion/deletion.
# Both answer every query identically; they differ only in cost profile.
for cls in (McsBalancedTree, McsSplayTree):
    ctr = OpCounters()
    tree = cls(f, ctr)
    for k, v in enumerate(values):
        tree.insert(10 * k, v)  # sparse keys are fine
    print(f"{cls.__name__}: global best {tree.global_best().score}, "
          f"compositions {ctr.score_compositions}")

# Splay trees adapt to access locality: sequential inserts cost a constant
# number of rotations each, random inserts do not.
import random

from planarbox import splay_access_cost_probe

n = 4096
seq = splay_access_cost_probe([("insert", k, 1) for k in range(n)], f)
keys = list(range(n))
random.Random(0).shuffle(keys)
rnd = splay_access_cost_probe([("insert", k, 1) for k in keys], f)
print(f"splay rotations for {n} inserts: sequential {seq['rotations']}, "
      f"random {rnd['rotations']}")
