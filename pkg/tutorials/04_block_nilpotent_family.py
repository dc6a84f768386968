"""The block-nilpotent family e^{-x^2} e^{Bx^2} e^{B^T x^2} in any size.

Each member has a symmetric second-order operator.  The script also compares
the algorithmic Laguerre-side operators with the closed forms stated for the
family, letting the eigenvalue equation decide between them.
"""

from mvopq.catalog import blocknil, blocknil_A0, blocknil_B, blocknil_Dtilde_printed, blocknil_Etilde_printed
from mvopq.diffop import eigen_check, symmetry_check
from mvopq.quadmap import compare_operators, transform_even, transform_odd
from mvopq.weights import pushforward

for sizes, Vs in (([1, 1], [[[2]]]), ([2, 1], [[[1], [1]]]), ([1, 1, 1, 1], [[[1]], [[2]], [[1]]])):
    W, (D,) = blocknil(sizes, Vs)
    print(W.name, symmetry_check(W, D, 6).summary(), eigen_check(W, D, 6).summary())

sizes, Vs = [2, 1], [[[1], [1]]]
W, (D,) = blocknil(sizes, Vs)
B = blocknil_B(sizes, Vs)
A0 = blocknil_A0(sizes, B)
cases = (("even", transform_even(D), blocknil_Dtilde_printed(B, A0)),
         ("odd", transform_odd(D), blocknil_Etilde_printed(B, A0)))
for side, computed, printed in cases:
    rep = compare_operators(computed, printed, pushforward(W, side), 4, f"{side} side")
    for r in rep.records:
        print(f"  {side}: {r.name} n={r.n} {'agree' if r.verdict else 'differ'} {r.note}")
