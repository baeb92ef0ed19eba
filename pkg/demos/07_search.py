# Scan a grid for cases like the SL_5 demo: Theorem A applies but the target Weyl
# module is not simple, so L(omega) picks up extra primitive vectors.

from collections import Counter

from weylprim.theorems import search

recs = search(4, 3, 3, 2)
print(len(recs), "records")
print(Counter((r.theorem_a.applies, r.target_simple) for r in recs))
for r in recs:
    if r.new_primitive_weights:
        print(r.omega, "k =", r.k, "new weights:", [str(w) for w in r.new_primitive_weights], "dim:", r.verified_dim)
