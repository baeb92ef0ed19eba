# Which Weyl modules are simple in characteristic p?  The Jantzen criterion is
# pure arithmetic on <omega + rho, alpha>, and every verdict comes with
# witnesses that can be re-checked.

from weylprim.jantzen import check_witness, is_weyl_simple, p_decompose
from weylprim.roots import Weight

print(p_decompose(8, 5))

for coords in [(4, 1, 2), (5, 1, 2), (6, 1, 2)]:
    rep = is_weyl_simple(Weight(coords), 5)
    print(coords, "simple" if rep.simple else "NOT simple", "failing roots:", [str(r) for r in rep.failing_roots])
    for rec in rep.records:
        if rec.witness and len(rec.witness) > 1:
            chain = " + ".join(str(b) for b in rec.witness)
            print(f"    {rec.alpha} = {chain}   recheck: {check_witness(Weight(coords), 5, rec)}")

# a whole table for SL_3, p = 3
print("\nSL_3, p=3  (rows a_1, columns a_2)")
for a in range(6):
    print("   ", " ".join("S" if is_weyl_simple(Weight((a, b)), 3).simple else "." for b in range(6)))
