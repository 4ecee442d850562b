"""
Diagonal decompositions and the ten-boxes algebra
=================================================

Some point sets split along a monotone staircase: everything left of a
vertical line is also below (or above) everything right of it.  Each
block can then be solved independently and the answers merged with a
constant number of candidate boxes -- the "ten boxes" of a block: the
best box anchored at each corner, each side pair, the whole bounding
box, and the unconstrained best.
"""

from planarbox import OpCounters, make_score_function
from planarbox.diagonal import (
    build_dstar,
    combine_ten,
    count_peels,
    solve_dstar,
    solve_dtree,
    ten_boxes_direct,
    try_diagonalize,
)
import planarbox.generators as gen

f = make_score_function("sum")

# try_diagonalize looks at the x-ranks in y-order and reports a split.
print("ranks (1,2,3,4):", try_diagonalize((1, 2, 3, 4)))   # bottom-up split
print("ranks (4,3,2,1):", try_diagonalize((4, 3, 2, 1)))   # top-down split
print("ranks (2,4,1,3):", try_diagonalize((2, 4, 1, 3)))   # windmill: none

# Merging two blocks' ten boxes reproduces the direct computation.
pts, lo, hi = gen.diagonalizable_split_pair(12, 0, "bottom_up")
ctr = OpCounters()
merged = combine_ten(ten_boxes_direct(lo, f, ctr), ten_boxes_direct(hi, f, ctr),
                     "bottom_up", f, ctr)
direct = ten_boxes_direct(pts, f)
print()
print(f"merged opt {merged.opt.score} == direct opt {direct.opt.score}")

# Fully diagonalizable instances decompose all the way to single points,
# and the tree solver runs in a linear number of compositions.
for n in (512, 1024, 2048):
    ctr = OpCounters()
    result = solve_dtree(gen.diagonal_blocks(n, 1, "mixed"), f, ctr)
    print(f"dtree n={n}: score {result.score}, "
          f"compositions/n = {ctr.score_compositions / n:.2f}")

# Windmills block diagonalization.  Peeling the four extreme points strips
# the outermost windmill; sigma nested windmills need sigma peels, and the
# peeled solver pays an extra sweep per peel.
print()
for sigma in (1, 2, 4):
    pts = gen.windmill_chain(256, sigma, 0)
    print(f"windmill sigma={sigma}: peels={count_peels(build_dstar(pts))}", end="")
    ctr = OpCounters()
    solve_dstar(pts, f, ctr)
    print(f", compositions {ctr.score_compositions}")
