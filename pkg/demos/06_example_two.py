# SL_5, p = 5, omega = (3,3,1,2).  k = 1, 2, 3 give Weyl submodules; k = 4
# fails the divisibility test.  For k = 2, 3 the target Weyl modules are not
# simple, and their extra primitive vectors show up in L(omega).
# Takes roughly 15 seconds.

import time

from weylprim.roots import Weight
from weylprim.theorems import search

t0 = time.time()
omega = Weight((3, 3, 1, 2))
for rec in search(5, 5, 3, 4, weights=[omega]):
    a = rec.theorem_a
    line = f"k={rec.k} applies={a.applies} failing_l={a.failing_l} target={a.target} simple={rec.target_simple}"
    if rec.new_primitive_drops:
        line += f"\n      dim={rec.verified_dim} new primitive drops={rec.new_primitive_drops} confirmed={rec.confirmed_in_L}"
    print(line)
print(f"{time.time() - t0:.1f}s")
