from fractions import Fraction

import pytest

from mvopq import exact
from mvopq.catalog import (CATALOG, blocknil, blocknil_A0, blocknil_B, catalog_build, dg2004_2x2,
                           dg2004_F_printed, dg2004_H_printed, dg2004_L_printed, dg2005_3x3,
                           dg2005_Dtilde_printed, dg2005_Etilde_printed, exp_nilpotent, hermite_monic,
                           laguerre_monic)
from mvopq.diffop import eigen_check
from mvopq.exact import DimensionError, DomainError
from mvopq.matpoly import MatPoly
from mvopq.orthopoly import monic_op
from mvopq.quadmap import transform_even, transform_odd
from mvopq.weights import pushforward


def test_classical_polynomials():
    assert hermite_monic(3) == MatPoly.from_scalar([0, Fraction(-3, 2), 0, 1])
    assert laguerre_monic(1, Fraction(-1, 2)) == MatPoly.from_scalar([Fraction(-1, 2), 1])
    assert hermite_monic(-1, 2).is_zero() and laguerre_monic(-1, 0, 2).is_zero()


@pytest.mark.parametrize("a", [Fraction(1, 2), 2, -3])
def test_2x2_closed_forms_other_parameters(a):
    W, _ = dg2004_2x2(a)
    H = monic_op(W, 6)
    assert all(H[n] == dg2004_H_printed(n, a) for n in range(7))
    L, Fs = monic_op(pushforward(W, "even"), 3), monic_op(pushforward(W, "odd"), 3)
    assert all(L[n] == dg2004_L_printed(n, a) for n in range(4))
    assert all(Fs[n] == dg2004_F_printed(n, a) for n in range(4))


def test_exp_nilpotent():
    B = exact.matrix([[0, 1], [0, 0]])
    assert exp_nilpotent(B) == MatPoly.identity(2) + MatPoly.monomial(2, B)
    with pytest.raises(DomainError):
        exp_nilpotent(exact.identity(2))


def test_blocknil_b_signs():
    B = blocknil_B([1, 1, 1, 1], [[[1]], [[2]], [[3]]])
    assert [B[0, 1], B[0, 2], B[0, 3], B[1, 2], B[1, 3], B[2, 3]] == [1, -2, 6, 2, -6, 3]
    assert exact.equal(blocknil_A0([1, 1, 1, 1], B),
                       B * 2 - exact.matrix([[12, 0, 0, 0], [0, 8, 0, 0], [0, 0, 4, 0], [0, 0, 0, 0]]))


def test_blocknil_validation():
    with pytest.raises(DimensionError):
        blocknil_B([2, 1], [[[1]]])
    with pytest.raises(DimensionError):
        blocknil_B([1, 1], [])
    with pytest.raises(DomainError):
        blocknil_B([1, 1], [[[0]]])


def test_n2_blocknil_is_the_2x2_weight():
    assert blocknil([1, 1], [[[3]]])[0].Z == dg2004_2x2(3)[0].Z


def test_3x3_corrected_and_literal_operators():
    W, (D,) = dg2005_3x3(1, 1)
    V, U = pushforward(W, "even"), pushforward(W, "odd")
    assert transform_even(D) == dg2005_Dtilde_printed(1, 1)
    assert transform_odd(D) == dg2005_Etilde_printed(1, 1)
    assert not eigen_check(V, dg2005_Dtilde_printed(1, 1, literal=True), 3).overall
    assert not eigen_check(U, dg2005_Etilde_printed(1, 1, literal=True), 3).overall


def test_3x3_needs_nonzero_parameters():
    with pytest.raises(DomainError):
        dg2005_3x3(0, 0)


def test_catalog_build():
    assert set(CATALOG) == {"dg2004-2x2", "dg2005-3x3", "bp-3x3-ex2", "blocknil"}
    W, ops = catalog_build("blocknil", {"sizes": [2, 1], "V1": [[1], [1]]}, N=3)
    assert W.Z == dg2005_3x3(1, 1)[0].Z and len(ops) == 1
    with pytest.raises(KeyError):
        catalog_build("nope")
    with pytest.raises(DimensionError):
        catalog_build("dg2004-2x2", N=3)
    with pytest.raises(DimensionError):
        catalog_build("blocknil", {})
