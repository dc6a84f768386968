import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mvopq import exact
from mvopq.catalog import blocknil, dg2004_2x2, dg2005_3x3
from mvopq.diffop import (DiffOp, compose, degree_preserving_check, eigen_check, falling, hermite_delta,
                          lambda_eigenvalue, multiplication, op_from_delta_poly, symmetry_check)
from mvopq.exact import DimensionError, DomainError
from mvopq.matpoly import MatPoly
from mvopq.weights import hermite

from conftest import matpolys


@st.composite
def diffops(draw, size=2, max_order=2, max_degree=2, proper=False):
    terms = {}
    for j in range(draw(st.integers(0, max_order)) + 1):
        terms[j] = draw(matpolys(size, min(j, max_degree) if proper else max_degree))
    return DiffOp(terms, size)


@given(matpolys(max_degree=3), diffops(), diffops())
def test_composition_is_the_action(P, D1, D2):
    assert compose(D1, D2).apply(P) == D2.apply(D1.apply(P))
    assert P @ (D1 * D2) == (P @ D1) @ D2


@given(diffops(max_order=1), diffops(max_order=1), diffops(max_order=1))
def test_composition_associates(A, B, C):
    assert compose(compose(A, B), C) == compose(A, compose(B, C))


@given(matpolys(max_degree=3), matpolys(max_degree=3), diffops())
def test_action_is_left_linear(P, Q, D):
    M = exact.matrix([[1, 2], [Fraction(1, 3), 0]])
    assert D.apply(P + M * Q) == D.apply(P) + M * D.apply(Q)


@given(diffops(proper=True), st.integers(0, 8))
def test_leading_coefficient_is_lambda(D, n):
    P = MatPoly.monomial(n, 1, 2) + MatPoly.from_scalar([1, 1], 2)
    if n <= 1:
        P = MatPoly.monomial(n, 1, 2)
    assert exact.equal(D.apply(P).coeff(n), lambda_eigenvalue(D, n))


def test_delta_on_scalar_hermite():
    W = hermite(MatPoly.identity(1))
    d = hermite_delta()
    assert all(lambda_eigenvalue(d, n)[0, 0] == -2 * n for n in range(9))
    assert eigen_check(W, d, 8).overall
    assert symmetry_check(W, d, 8).overall


def test_delta_degree_preservation_fails_only_at_zero():
    rep = degree_preserving_check(hermite_delta(), 8)
    assert [r.n for r in rep.failures()] == [0]
    assert degree_preserving_check(DiffOp.identity(2), 8).overall


def test_non_proper_operator():
    D = DiffOp({0: MatPoly.monomial(1, 1, 1)})
    assert not D.is_proper()
    with pytest.raises(DomainError):
        lambda_eigenvalue(D, 2)
    assert not eigen_check(hermite(MatPoly.identity(1)), D, 2).overall
    with pytest.raises(DomainError):
        degree_preserving_check(D, 2)


CATALOG_OPS = [dg2004_2x2(1), dg2005_3x3(1, 1), dg2005_3x3(Fraction(1, 2), 2),
               blocknil([1, 1, 1], [[[1]], [[1]]])]


@pytest.mark.parametrize("W,ops", CATALOG_OPS, ids=["dg2004", "dg2005", "dg2005-half-2", "blocknil-1-1-1"])
def test_symmetry_implies_eigen(W, ops):
    D = ops[0]
    assert symmetry_check(W, D, 8).overall
    assert eigen_check(W, D, 8).overall


def test_lambda_is_a_homomorphism_on_the_algebra():
    W, (D,) = dg2005_3x3(1, 1)
    E = compose(D, D) + D * 3
    assert eigen_check(W, E, 6).overall
    for n in range(7):
        l = lambda_eigenvalue(D, n)
        assert exact.equal(lambda_eigenvalue(compose(D, D), n), exact.matmul(l, l))
        assert exact.equal(lambda_eigenvalue(E, n), exact.matmul(l, l) + l * 3)


def test_op_from_delta_poly_basics():
    assert op_from_delta_poly([[[1]]]) == DiffOp.identity(1)
    assert op_from_delta_poly([[[0, 1]]]) == hermite_delta()
    d = hermite_delta()
    assert op_from_delta_poly([[{2: 1}]]) == compose(d, d)
    grid = op_from_delta_poly([[[0, 1], []], [[], [2]]])
    assert grid.coeff(0) == MatPoly.constant([[0, 0], [0, 2]])


def test_operator_json_roundtrip():
    _, (D,) = dg2005_3x3(Fraction(2, 3), -1)
    text = json.dumps(D.to_json())
    assert DiffOp.from_json(text) == D
    assert json.loads(text)["terms"][0]["order"] == 0


def test_size_checks():
    with pytest.raises(DimensionError):
        DiffOp.identity(2) + DiffOp.identity(3)
    with pytest.raises(DimensionError):
        DiffOp.identity(2).apply(MatPoly.identity(3))
    with pytest.raises(DimensionError):
        DiffOp({})


def test_multiplication_and_falling():
    p = MatPoly.from_scalar([1, 2], 2)
    assert multiplication(p).apply(MatPoly.identity(2) * 3) == p * 3
    assert [falling(5, i) for i in range(7)] == [1, 5, 20, 60, 120, 120, 0]
    assert DiffOp.derivative(1, 2) ** 2 == DiffOp.derivative(1, 4)
