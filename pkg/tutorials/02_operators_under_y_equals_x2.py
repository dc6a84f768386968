"""Second-order operators and the change of variables y = x^2.

For the 3x3 weight with A = [[0,0,a],[0,0,b],[0,0,0]] the operator
D = d^2 I + d 2x(2A - I) + A_0 has the monic polynomials as eigenfunctions.
Writing D in y = x^2 gives an operator for the even-side weight V; conjugating
by x first gives one for the odd-side weight U.
"""

from mvopq import exact
from mvopq.catalog import dg2005_3x3
from mvopq.diffop import eigen_check, lambda_eigenvalue, symmetry_check
from mvopq.quadmap import spectral_match_check, transform_even, transform_odd
from mvopq.weights import pushforward

W, (D,) = dg2005_3x3(1, 1)
V, U = pushforward(W, "even"), pushforward(W, "odd")
Dt, Et = transform_even(D), transform_odd(D)
for name, op in (("D~", Dt), ("E~", Et)):
    print(name)
    for j, c in op.terms.items():
        print(f"  order {j}: {c}")

print(eigen_check(W, D, 6).summary())
print(eigen_check(V, Dt, 6).summary())
print(eigen_check(U, Et, 6).summary())
print("Lambda_2(D~) =", exact.matrix_to_json(lambda_eigenvalue(Dt, 2)))
print("Lambda_4(D)  =", exact.matrix_to_json(lambda_eigenvalue(D, 4)))
print(spectral_match_check(W, D, 5).summary())
print(symmetry_check(V, Dt, 6).summary())
