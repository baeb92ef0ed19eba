# SL_3, p = 5, omega = 4 omega_1 + 3 omega_2, k = 4.
# The SL_2 generated by X_{-alpha_1,4} v+ inside L(omega) is the full Weyl
# module of highest weight 7, even though that Weyl module is not simple.

from weylprim.roots import Weight
from weylprim.theorems import submodule_primitive_drops, theorem_a, verify_embedding
from weylprim.weyl import primitive_vectors

omega = Weight((4, 3))
rep = theorem_a(omega, 5, 4)
print("applies:", rep.applies, " m_witness:", rep.m_witness, " target:", rep.target)

emb = verify_embedding(omega, 5, 4)
print("generated submodule dim", emb.dim, "Weyl module dim", emb.expected)

vecs = primitive_vectors(omega, 5, (4, 3), omitted={1})
print("primitive vectors at omega - 4 alpha_1 - 3 alpha_2:", len(vecs))
print("their support size:", [len(v) for v in vecs])
print("primitive weights of the submodule:", submodule_primitive_drops(omega, 5, 4))
