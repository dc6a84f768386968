import json
from fractions import Fraction

import pytest

from mvopq import exact
from mvopq.catalog import dg2004_case, ex2_case, ex2_Et_printed, ex2_weight, scalar_case
from mvopq.darboux import (DarbouxCase, NotDegreeBoundedError, advisory_normalizers, darboux_quadratic_check,
                           degree_preserving_check, factorization_check, intertwine_check,
                           lambda_consistency, laguerre_cases, normalizers)
from mvopq.diffop import DiffOp
from mvopq.exact import DimensionError
from mvopq.matpoly import MatPoly
from mvopq.weights import hermite


@pytest.fixture(scope="module")
def ex2():
    return ex2_case(1, 1)


def test_trivial_case():
    case = scalar_case(2)
    rep = intertwine_check(case, 6)
    assert rep.overall and all(r.verdict for r in rep.records)
    assert all(exact.equal(A, exact.identity(2)) for A in normalizers(case, 6))
    assert darboux_quadratic_check(case.target, case, 4).overall


def test_ex2_normalizers(ex2):
    A = normalizers(ex2, 1)
    assert exact.equal(A[1], exact.matrix([[2, 4, -2], [-2, 4, 2], [-2, 6, -2]]))
    assert exact.det(A[1]) == -64
    assert exact.equal(A[0], exact.matrix([[0, 4, 0], [0, 4, 0], [-2, 2, -2]]))
    assert exact.rank(A[0]) == 2


def test_ex2_intertwines_with_singular_a0_as_advisory(ex2):
    rep = intertwine_check(ex2, 8)
    assert rep.overall
    bad = [r for r in rep.records if not r.verdict]
    assert [(r.name, r.n) for r in bad] == [("A_n-invertible", 0)]
    assert exact.equal(advisory_normalizers(rep)[0], normalizers(ex2, 0)[0])


def test_ex2_degree_preservation(ex2):
    rep = degree_preserving_check(ex2.V, 10)
    assert [r.n for r in rep.failures()] == [0]


def test_ex2_lambda_consistency(ex2):
    assert lambda_consistency(ex2, 8).overall


@pytest.mark.parametrize("ab", [(1, 0), (0, 1), (Fraction(1, 2), 3)])
def test_ex2_other_parameters(ab):
    case = ex2_case(*ab)
    assert intertwine_check(case, 5).overall
    assert factorization_check(case, 4).overall


def test_ex2_factorization_and_laguerre_sides(ex2):
    assert factorization_check(ex2, 6, deg_max=6).overall
    even, odd = laguerre_cases(ex2.target, ex2)
    assert factorization_check(even, 6).overall
    assert factorization_check(odd, 5).overall


def test_ex2_quadratic_compatibility(ex2):
    rep = darboux_quadratic_check(ex2.target, ex2, 5)
    assert rep.overall
    assert len(rep.find("even:A-match")) == len(rep.find("odd:A-match")) == 6


def test_printed_odd_intertwiner_fails(ex2):
    _, odd = laguerre_cases(ex2.target, ex2)
    printed = DarbouxCase("printed", odd.source, odd.target, ex2_Et_printed(1, 1))
    assert not intertwine_check(printed, 4).overall


def test_2x2_example_both_sides():
    case = dg2004_case(1)
    assert intertwine_check(case, 8).overall
    assert darboux_quadratic_check(case.target, case, 6).overall


def test_not_degree_bounded():
    w = hermite(MatPoly.identity(1))
    case = DarbouxCase("grow", w, w, DiffOp({0: MatPoly.monomial(1, 1, 1)}))
    with pytest.raises(NotDegreeBoundedError):
        intertwine_check(case, 2)


def test_case_validation_and_json(ex2):
    with pytest.raises(DimensionError):
        DarbouxCase("bad", hermite(MatPoly.identity(2)), ex2_weight(), DiffOp.identity(3))
    with pytest.raises(ValueError):
        factorization_check(scalar_case(), 2)
    back = DarbouxCase.from_json(json.dumps(ex2.to_json()))
    assert back.V == ex2.V and back.N == ex2.N and back.target.Z == ex2.target.Z


@pytest.mark.parametrize("ab", [(1, 1), (1, 0), (1, 2), (Fraction(2, 3), -1)])
def test_vn_delta_expansion_entries(ab):
    # every printed entry holds except (3,3), whose overall factor is s^3/16 rather than s
    from mvopq.catalog import ex2_D_delta_grid, ex2_N_printed, ex2_V_printed
    from mvopq.diffop import compose, op_from_delta_poly

    a, b = map(Fraction, ab)
    s = a * a + b * b
    VN = compose(ex2_V_printed(a, b), ex2_N_printed(a, b))
    grid = ex2_D_delta_grid(a, b)
    corrected = [row[:] for row in grid]
    corrected[2][2] = [c * s * s / 16 for c in grid[2][2]]
    assert VN == op_from_delta_poly(corrected)
    if s * s != 16:
        assert VN != op_from_delta_poly(grid)
