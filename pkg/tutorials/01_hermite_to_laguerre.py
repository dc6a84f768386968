"""From a symmetric Hermite-type weight to two Laguerre-type weights.

The 2x2 weight e^{-x^2} [[1 + a^2 x^4, a x^2], [a x^2, 1]] is even in x.  Its
monic orthogonal polynomials split by parity, and under y = x^2 the even
half gives the monic sequence of y^{-1/2} e^{-y} Z(sqrt y) while the odd half
(after dividing by x) gives that of y^{1/2} e^{-y} Z(sqrt y).
"""

from mvopq import exact
from mvopq.catalog import dg2004_2x2, dg2004_H_printed
from mvopq.orthopoly import monic_op, recurrence_coeffs
from mvopq.quadmap import correspondence_check
from mvopq.weights import pushforward

W, _ = dg2004_2x2(1)
H = monic_op(W, 6)
print("H_2 =", H[2])
print("H_3 =", H[3])
print("matches the published closed form for n <= 6:",
      all(H[n] == dg2004_H_printed(n, 1) for n in range(7)))

# the recurrence has B_n = 0 because the weight is even
rec = recurrence_coeffs(H)
print("A_1 =", exact.matrix_to_json(rec.A[1]))

V, U = pushforward(W, "even"), pushforward(W, "odd")
L, F = monic_op(V, 3), monic_op(U, 2)
print("L_1(y) =", L[1])
print("H_2(x) == L_1(x^2):", H[2] == L[1].compose_square())
print("H_3(x) == x F_1(x^2):", H[3] == F[1].compose_square().shift(1))

print(correspondence_check(W, 6).summary())
