# Weights live in the fundamental basis, root sums in the simple-root basis.
# Converting between them goes through the Cartan matrix.

from weylprim.roots import (
    E_set, PositiveRoot, RootSum, Weight, cartan_matrix, dual_twist, pairing, restrict_q1, subtract_rootsum,
)

omega = Weight.parse("3,3,1,2")  # an SL_5 weight
print("omega =", omega)
print("Cartan matrix for SL_5:")
for row in cartan_matrix(4):
    print("   ", row)

# pairing with a positive root alpha_i + ... + alpha_{j-1} just sums coordinates
for root in (PositiveRoot.simple(1), PositiveRoot(2, 4), PositiveRoot(1, 5)):
    print(f"<omega, {root}> =", pairing(omega, root))

# lower the weight by 2 alpha_1 + alpha_2
drop = RootSum((2, 1, 0, 0))
print("omega -", drop, "=", subtract_rootsum(omega, drop))

print("restricted to the lower-right SL_4:", restrict_q1(omega))
print("dual twist (swaps alpha_1 and alpha_4):", dual_twist(omega))

# staircase root sums k = b_1 >= b_2 >= ... >= 0
for s in sorted(E_set(5, 2), key=lambda s: s.coeffs):
    print("  E(1,2) member:", s)
