"""A 3x3 weight obtained from e^{-x^2} I by a Darboux transformation.

h_n I . V = A_n H_n for the published second-order intertwiner V, and the
cofactor N makes V N and N V members of the respective operator algebras.
Two findings are worth seeing directly: A_0 is singular, and the
published expansion of V N in the Hermite operator differs from the
product in its (3,3) entry.
"""

from mvopq import exact
from mvopq.catalog import ex2_case, ex2_D_delta_grid
from mvopq.darboux import darboux_quadratic_check, factorization_check, intertwine_check, normalizers
from mvopq.diffop import compose, op_from_delta_poly

case = ex2_case(1, 1)
rep = intertwine_check(case, 6)
print(rep.summary())
A = normalizers(case, 1)
print("A_0 =", exact.matrix_to_json(A[0]), "rank", exact.rank(A[0]))
print("det A_1 =", exact.det(A[1]))

print(factorization_check(case, 5).summary())

VN = compose(case.V, case.N)
printed = op_from_delta_poly(ex2_D_delta_grid(1, 1))
for j in sorted(VN.terms):
    diff = VN.coeff(j) - printed.coeff(j)
    if not diff.is_zero():
        print(f"order {j}: computed minus printed = {diff}")

print(darboux_quadratic_check(case.target, case, 4).summary())
