# Standard tableaux index a basis of the Weyl module of the smaller group.
# Rows are numbered from 2, entries live in {2, ..., n}.

from weylprim.characters import dim_weyl
from weylprim.roots import Weight
from weylprim.tableaux import (
    Tableau, coherent_shape, enumerate_standard, f_monomial, is_standard, rho_m, top_row_excess, weight_of,
)

kappa = Weight((2, 1, 2))
shape = coherent_shape(kappa)
print("shape for kappa =", kappa, "is", shape.lam)

t = Tableau.from_rows(5, [[2, 3, 3, 4, 5], [3, 4, 4], [4, 5], []])
print(t)
print("standard?", is_standard(t))
print("F_t =", f_monomial(t))
print("weight drop:", weight_of(t), " top row entries > 2:", top_row_excess(t))
print("remove a 3 from the top row:")
print(rho_m(t, 3))
print("remove a 6:", rho_m(t, 6))

# counts agree with the Weyl dimension formula
for coords in [(1, 1), (2, 0), (1, 2, 1), (3, 0, 2)]:
    k = Weight(coords)
    print(coords, len(enumerate_standard(coherent_shape(k))), dim_weyl(k))
