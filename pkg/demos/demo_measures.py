"""
Measuring how sorted a point set already is
===========================================

Reading points in y-order induces a sequence of x-ranks.  Classic
presortedness measures of that sequence -- inversions, runs, local
insertion complexity -- predict which sweep strategy will be cheap,
before any sweep runs.
"""

from planarbox import (
    entropy,
    inversions,
    local_insertion_complexity,
    make_score_function,
    measure_report,
    resort_within_stripes,
    runs,
    stripes,
)
import planarbox.generators as gen

f = make_score_function("sum")

for kind, pts in [("uniform", gen.uniform_random(64, 0)),
                  ("co-sorted", gen.aligned(64, 0, mode="co", rho=1)),
                  ("2-stripe", gen.stripe_instance(64, 2, 0))]:
    seq = [p.x for p in sorted(pts, key=lambda p: p.y)]
    rho, lengths = runs(seq)
    print(f"{kind:9s} n=64: Inv={inversions(seq):5d}  "
          f"lam={local_insertion_complexity(seq):5d}  "
          f"rho={rho:3d}  H(runs)={entropy(lengths):.2f}")

# Stripes partition the points into maximal same-sign horizontal bands.
pts = gen.stripe_instance(64, 4, 1)
sd = stripes(pts, f)
print()
print("stripe decomposition (top to bottom):",
      [(sign, len(block)) for sign, block in sd.stripes])

# Re-sorting by x inside each stripe can only reduce disorder: inversions
# never grow, the number of runs is capped by the stripe count, and the
# run-length entropy is capped by the stripe-size entropy.
before = [p.x for p in sorted(pts, key=lambda p: p.y)]
after = resort_within_stripes(pts, sd)
print(f"before resort: Inv={inversions(before)}  rho={runs(before)[0]}")
print(f"after  resort: Inv={inversions(after)}  rho={runs(after)[0]}")

# measure_report bundles all of this for one point set.
print()
report = measure_report(gen.uniform_random(32, 7), f)
for key, value in report.as_dict().items():
    print(f"  {key}: {value}")
