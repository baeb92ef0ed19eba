# Build Delta(omega) over GF(p) one weight space at a time and compare it with
# L(omega) = Delta(omega) / radical of the contravariant form.

import numpy as np

from weylprim.characters import dim_weyl, weight_multiplicities
from weylprim.roots import Weight
from weylprim.weyl import WeylModule

omega = Weight((1, 1))  # adjoint module of SL_3
mod = WeylModule(omega)
print("Freudenthal multiplicities:", weight_multiplicities(omega))

for p in (2, 3, 5):
    zero = mod.weight_space((1, 1), p)
    print(f"p={p}: zero weight space dim {zero.dim}, Gram matrix")
    print(np.array(zero.gram))
    print("   dim L =", mod.simple_total_dim(p), "of", dim_weyl(omega))

# a bigger one
omega = Weight((3, 3, 3))
mod = WeylModule(omega)
for p in (2, 3, 5):
    print(omega, f"p={p}: dim L = {mod.simple_total_dim(p)}  dim Delta = {dim_weyl(omega)}")
