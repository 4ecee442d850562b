"""
Adaptive sweeps for the best axis-aligned box
=============================================

Every solver finds the same optimal box; what differs is how much work
the structure of the input lets them skip.  Work is counted in score
compositions (calls to the combining function), not wall time.
"""

from planarbox import OpCounters, SOLVERS, make_score_function
import planarbox.generators as gen

f = make_score_function("sum")


def cost(solver, points):
    ctr = OpCounters()
    result = solver(points, f, ctr)
    return result.score, ctr.score_compositions


# On unstructured input the baseline sweep is the yardstick.
pts = gen.uniform_random(256, 0)
for name in ("baseline", "stripes", "finger", "combined"):
    score, c = cost(SOLVERS[name], pts)
    print(f"uniform n=256  {name:9s} score {score:6d}  compositions {c}")

# A stripe instance: positive and negative weights separate into two
# horizontal bands.  The stripe solver collapses each band.
print()
pts = gen.stripe_instance(256, 2, 0)
for name in ("baseline", "stripes"):
    score, c = cost(SOLVERS[name], pts)
    print(f"stripes n=256  {name:9s} score {score:6d}  compositions {c}")

# A co-sorted instance: x-order equals y-order, so each sweep step
# touches the tree right where the previous one left off.
print()
pts = gen.aligned(256, 0, mode="co", rho=1)
for name in ("baseline", "finger"):
    score, c = cost(SOLVERS[name], pts)
    print(f"aligned n=256  {name:9s} score {score:6d}  compositions {c}")

# The combined solver measures the input first and picks the cheaper
# strategy, so it tracks the better specialist on both extremes.
print()
for kind, pts in [("stripes", gen.stripe_instance(256, 2, 0)),
                  ("aligned", gen.aligned(256, 0, mode="co", rho=1))]:
    score, c = cost(SOLVERS["combined"], pts)
    print(f"{kind} n=256  combined  score {score:6d}  compositions {c}")
