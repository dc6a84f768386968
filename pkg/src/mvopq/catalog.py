"""Weight families with known operators, and their published closed forms.

Families:

``dg2004-2x2``   ``e^{-x^2} (I + B x^2)(I + B^T x^2)`` with ``B = [[0, a], [0, 0]]``.
``dg2005-3x3``   the 3x3 member with ``A = [[0,0,a],[0,0,b],[0,0,0]]`` and its
                 second-order operator.
``bp-3x3-ex2``   the 3x3 weight with ``A = [[0,a,0],[0,0,0],[0,b,0]]`` that is a
                 Darboux transformation of ``e^{-x^2} I``.
``blocknil``     ``e^{-x^2} e^{B x^2} e^{B^T x^2}`` for block-nilpotent ``B``.

Functions whose name ends in ``_printed`` return formulas exactly as
published (with noted exceptions) so they can be compared against computed
ones.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

import numpy as np

from . import exact
from .darboux import DarbouxCase
from .diffop import DiffOp, compose
from .exact import DimensionError, DomainError
from .matpoly import MatPoly
from .weights import WeightSpec, hermite, laguerre

F = Fraction


# classical monic families -----------------------------------------------

@lru_cache(maxsize=None)
def _hermite_coeffs(n: int) -> tuple[Fraction, ...]:
    # h_{n+1} = x h_n - (n/2) h_{n-1}
    if n < 0:
        return ()
    if n == 0:
        return (F(1),)
    a = list(_hermite_coeffs(n - 1))
    b = list(_hermite_coeffs(n - 2))
    out = [F(0)] + a
    for k, c in enumerate(b):
        out[k] -= F(n - 1, 2) * c
    return tuple(out)


@lru_cache(maxsize=None)
def _laguerre_coeffs(n: int, alpha: Fraction) -> tuple[Fraction, ...]:
    # l_{n+1} = (y - (2n + alpha + 1)) l_n - n (n + alpha) l_{n-1}
    if n < 0:
        return ()
    if n == 0:
        return (F(1),)
    m = n - 1
    a = list(_laguerre_coeffs(m, alpha))
    b = list(_laguerre_coeffs(m - 1, alpha))
    out = [F(0)] + a
    for k, c in enumerate(a):
        out[k] -= (2 * m + alpha + 1) * c
    for k, c in enumerate(b):
        out[k] -= m * (m + alpha) * c
    return tuple(out)


def hermite_monic(n: int, size: int = 1) -> MatPoly:
    """Monic Hermite polynomial ``h_n`` times the identity (zero for n < 0)."""
    if n < 0:
        return MatPoly.zero(size)
    return MatPoly.from_scalar(_hermite_coeffs(n), size)


def laguerre_monic(n: int, alpha, size: int = 1) -> MatPoly:
    """Monic Laguerre polynomial ``l_n^{(alpha)}`` times the identity (zero for n < 0)."""
    if n < 0:
        return MatPoly.zero(size)
    return MatPoly.from_scalar(_laguerre_coeffs(n, exact.to_fraction(alpha)), size)


# block-nilpotent family ---------------------------------------------------

def exp_nilpotent(B: np.ndarray, step: int = 2) -> MatPoly:
    """``e^{B x^step} = sum_m B^m x^{step m} / m!`` for nilpotent ``B``."""
    B = exact.as_matrix(B)
    n = B.shape[0]
    terms = {0: exact.identity(n)}
    power = exact.identity(n)
    for m in range(1, n + 1):
        power = exact.matmul(power, B)
        if exact.is_zero(power):
            return MatPoly.from_dict(terms, n)
        terms[step * m] = power * F(1, factorial(m))
    raise DomainError("B is not nilpotent: e^{Bx^2} is not a polynomial")


def _parse_blocks(sizes: Sequence[int], Vs: Sequence) -> tuple[list[int], list[np.ndarray]]:
    sizes = [int(s) for s in sizes]
    if not sizes or any(s < 1 for s in sizes):
        raise DimensionError("block sizes must be positive")
    if len(Vs) != len(sizes) - 1:
        raise DimensionError(f"{len(sizes)} blocks need {len(sizes) - 1} V matrices, got {len(Vs)}")
    mats = []
    for i, V in enumerate(Vs):
        rows = [[exact.to_fraction(v) for v in row] for row in V]
        if len(rows) != sizes[i] or any(len(r) != sizes[i + 1] for r in rows):
            raise DimensionError(f"V_{i + 1} must be {sizes[i]}x{sizes[i + 1]}")
        if all(v == 0 for r in rows for v in r):
            raise DomainError(f"V_{i + 1} must be nonzero")
        a = np.empty((sizes[i], sizes[i + 1]), dtype=object)
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                a[r, c] = v
        mats.append(a)
    return sizes, mats


def blocknil_B(sizes: Sequence[int], Vs: Sequence) -> np.ndarray:
    """Block upper-triangular ``B``: block ``(i, j)`` is ``(-1)^{j-i-1} V_i ... V_{j-1}``."""
    sizes, mats = _parse_blocks(sizes, Vs)
    k = len(sizes)
    offs = [sum(sizes[:i]) for i in range(k + 1)]
    B = exact.zeros(offs[-1])
    for i in range(k):
        prod = None
        for j in range(i + 1, k):
            prod = mats[j - 1] if prod is None else prod @ mats[j - 1]
            sign = -1 if (j - i - 1) % 2 else 1
            B[offs[i]:offs[i + 1], offs[j]:offs[j + 1]] = prod * sign
    B.flags.writeable = False
    return B


def blocknil_A0(sizes: Sequence[int], B: np.ndarray) -> np.ndarray:
    """``2B - 4 diag((k-1) I_{n_1}, (k-2) I_{n_2}, ..., 0 I_{n_k})``."""
    k = len(sizes)
    diag = []
    for i, s in enumerate(sizes):
        diag += [k - 1 - i] * s
    out = B * 2 - exact.matrix(np.diag(diag).tolist()) * 4
    out.flags.writeable = False
    return out


def second_order_operator(B: np.ndarray, A0: np.ndarray) -> DiffOp:
    """``d^2 I + d 2x(2B - I) + A_0``."""
    n = B.shape[0]
    C1 = MatPoly.monomial(1, (B * 2 - exact.identity(n)) * 2)
    return DiffOp({2: MatPoly.identity(n), 1: C1, 0: MatPoly.constant(A0)}, n)


def blocknil(sizes: Sequence[int], Vs: Sequence = ()) -> tuple[WeightSpec, list[DiffOp]]:
    B = blocknil_B(sizes, Vs)
    E = exp_nilpotent(B)
    Z = E * E.transpose()
    A0 = blocknil_A0(sizes, B)
    name = "blocknil(" + ",".join(str(int(s)) for s in sizes) + ")"
    return hermite(Z, name), [second_order_operator(B, A0)]


def blocknil_Dtilde_printed(B: np.ndarray, A0: np.ndarray) -> DiffOp:
    """Even-side operator as printed for the family: ``4 d^2 y I + 2 d (4B - I) + A_0``."""
    n = B.shape[0]
    return DiffOp({
        2: MatPoly.monomial(1, 4, n),
        1: MatPoly.constant((B * 4 - exact.identity(n)) * 2),
        0: MatPoly.constant(A0),
    }, n)


def blocknil_Etilde_printed(B: np.ndarray, A0: np.ndarray) -> DiffOp:
    """Odd-side operator as printed for the family: ``4 d^2 y I + 2 d (2y(2B - I) + I) + A_0``."""
    n = B.shape[0]
    I = exact.identity(n)
    return DiffOp({
        2: MatPoly.monomial(1, 4, n),
        1: MatPoly([I * 2, (B * 2 - I) * 4]),
        0: MatPoly.constant(A0),
    }, n)


# dg2004-2x2 -------------------------------------------------------------

def dg2004_2x2(a=1) -> tuple[WeightSpec, list[DiffOp]]:
    a = exact.to_fraction(a)
    if a == 0:
        raise DomainError("the 2x2 weight needs a != 0")
    W, ops = blocknil([1, 1], [[[a]]])
    return WeightSpec(W.base, W.Z, "dg2004-2x2"), ops


def dg2004_H_printed(n: int, a=1) -> MatPoly:
    a = exact.to_fraction(a)
    d = a * a * n * (n - 1) + 4
    M1 = MatPoly.constant([[1, -a ** 3 * n * (n - 1) * (2 * n + 1) / (2 * d)], [0, F(4) / d]])
    M2 = MatPoly.from_entries([
        [[-2 * a * (2 * n + 1) / d], [-1, 0, 2 * a * a * (2 * n + 1) / d]],
        [[F(-4) / d], [0, 0, 4 * a / d]],
    ])
    return M1 * hermite_monic(n, 2) + M2 * hermite_monic(n - 2, 2) * (a * n * (n - 1) / 4)


def dg2004_L_printed(n: int, a=1) -> MatPoly:
    a = exact.to_fraction(a)
    e = a * a * n * (2 * n - 1) + 2
    M1 = MatPoly.constant([[1, -a ** 3 * n * (2 * n - 1) * (4 * n + 1) / (2 * e)], [0, F(2) / e]])
    M2 = MatPoly.from_entries([
        [[-a * (4 * n + 1) / e], [-1, a * a * (4 * n + 1) / e]],
        [[F(-2) / e], [0, 2 * a / e]],
    ])
    half = F(-1, 2)
    return M1 * laguerre_monic(n, half, 2) + M2 * laguerre_monic(n - 1, half, 2) * (a * n * (2 * n - 1) / 2)


def dg2004_F_printed(n: int, a=1) -> MatPoly:
    a = exact.to_fraction(a)
    f = a * a * n * (2 * n + 1) + 2
    M1 = MatPoly.constant([[1, -a ** 3 * n * (2 * n + 1) * (4 * n + 3) / (2 * f)], [0, F(2) / f]])
    M2 = MatPoly.from_entries([
        [[-a * (4 * n + 3) / f], [-1, a * a * (4 * n + 3) / f]],
        [[F(-2) / f], [0, 2 * a / f]],
    ])
    half = F(1, 2)
    return M1 * laguerre_monic(n, half, 2) + M2 * laguerre_monic(n - 1, half, 2) * (a * n * (2 * n + 1) / 2)


# dg2005-3x3 -------------------------------------------------------------

def _ab(a, b) -> tuple[Fraction, Fraction]:
    a, b = exact.to_fraction(a), exact.to_fraction(b)
    if a * a + b * b == 0:
        raise DomainError("need a^2 + b^2 > 0")
    return a, b


def dg2005_3x3(a=1, b=1) -> tuple[WeightSpec, list[DiffOp]]:
    a, b = _ab(a, b)
    Z = MatPoly.from_entries([
        [[1, 0, 0, 0, a * a], [0, 0, 0, 0, a * b], [0, 0, a]],
        [[0, 0, 0, 0, a * b], [1, 0, 0, 0, b * b], [0, 0, b]],
        [[0, 0, a], [0, 0, b], [1]],
    ])
    D = DiffOp({
        2: MatPoly.identity(3),
        1: MatPoly.monomial(1, [[-2, 0, 4 * a], [0, -2, 4 * b], [0, 0, -2]]),
        0: MatPoly.constant([[-4, 0, 2 * a], [0, -4, 2 * b], [0, 0, 0]]),
    }, 3)
    return hermite(Z, "dg2005-3x3"), [D]


def dg2005_Dtilde_printed(a=1, b=1, literal: bool = False) -> DiffOp:
    """The even-side operator of the 3x3 example.

    The published second-order coefficient reads ``4 I``; the change of
    variables forces ``4 y I`` (as in the general second-order formula).
    ``literal=True`` returns the text verbatim.
    """
    a, b = _ab(a, b)
    C2 = MatPoly.constant(4, 3) if literal else MatPoly.monomial(1, 4, 3)
    return DiffOp({
        2: C2,
        1: MatPoly.from_entries([[[2, -4], [], [0, 8 * a]], [[], [2, -4], [0, 8 * b]], [[], [], [2, -4]]]),
        0: MatPoly.constant([[-4, 0, 2 * a], [0, -4, 2 * b], [0, 0, 0]]),
    }, 3)


def dg2005_Etilde_printed(a=1, b=1, literal: bool = False) -> DiffOp:
    """The odd-side operator of the 3x3 example (same ``4 I`` caveat)."""
    a, b = _ab(a, b)
    C2 = MatPoly.constant(4, 3) if literal else MatPoly.monomial(1, 4, 3)
    return DiffOp({
        2: C2,
        1: MatPoly.from_entries([[[6, -4], [], [0, 8 * a]], [[], [6, -4], [0, 8 * b]], [[], [], [6, -4]]]),
        0: MatPoly.constant([[-6, 0, 6 * a], [0, -6, 6 * b], [0, 0, -2]]),
    }, 3)


# bp-3x3-ex2: Darboux example ---------------------------------------------

def ex2_weight(a=1, b=1) -> WeightSpec:
    a, b = _ab(a, b)
    Z = MatPoly.from_entries([
        [[1, 0, 0, 0, a * a], [0, 0, a], [0, 0, 0, 0, a * b]],
        [[0, 0, a], [1], [0, 0, b]],
        [[0, 0, 0, 0, a * b], [0, 0, b], [1, 0, 0, 0, b * b]],
    ])
    return hermite(Z, "bp-3x3-ex2")


def ex2_V_printed(a=1, b=1) -> DiffOp:
    a, b = _ab(a, b)
    s = a * a + b * b
    return DiffOp({
        2: MatPoly.from_entries([[[-s], [0, 0, a * s], []], [[], [0, 0, b * s], [-s]], [[], [-s * s / 4], []]]),
        1: MatPoly.from_entries([[[0, 2 * b * b], [], [0, -2 * a * b]],
                                 [[0, -2 * a * b], [], [0, 2 * a * a]],
                                 [[], [0, s * s], []]]),
        0: MatPoly.constant([[0, 4 * a, 0], [0, 4 * b, 0], [-a * s, s * s / 2, -b * s]]),
    }, 3)


def ex2_N_printed(a=1, b=1) -> DiffOp:
    a, b = _ab(a, b)
    s = a * a + b * b
    return DiffOp({
        2: MatPoly.from_entries([[[-s], [], [0, 0, -a * s * s / 4]],
                                 [[], [], [-s * s / 4]],
                                 [[], [-s], [0, 0, -b * s * s / 4]]]),
        1: MatPoly.from_entries([[[0, 2 * (2 * a * a + b * b)], [0, 2 * a * b], [0, -a * s * s]],
                                 [[], [], []],
                                 [[0, 2 * a * b], [0, 2 * (a * a + 2 * b * b)], [0, -b * s * s]]]),
        0: MatPoly.constant([[2 * a * a, 2 * a * b, -a * s * (2 + s) / 2],
                             [4 * a, 4 * b, 0],
                             [2 * a * b, 2 * b * b, -b * s * (2 + s) / 2]]),
    }, 3)


def ex2_D_delta_grid(a=1, b=1) -> list[list[list[Fraction]]]:
    """Entries of ``V N`` as ascending polynomials in the Hermite operator."""
    a, b = _ab(a, b)
    s = a * a + b * b
    off = [16 * a * b, 2 * a * b * s]
    return [
        [[16 * a * a, 2 * a * a * s, s * s], off, []],
        [off, [16 * b * b, 2 * b * b * s, s * s], []],
        [[], [], [s * (8 * s + 16), -6 * s * s, s * s]],
    ]


def ex2_Q_printed(n: int, a=1, b=1) -> MatPoly:
    """``h_n I . V`` as published."""
    a, b = _ab(a, b)
    s = a * a + b * b
    M1 = MatPoly.constant([[2 * b * b * n, 4 * a, -2 * a * b * n],
                           [-2 * a * b * n, 4 * b, 2 * a * a * n],
                           [-a * s, s * s * (2 * n + 1) / 2, -b * s]])
    M2 = MatPoly.from_entries([[[-a * a], [0, 0, a * s], [-a * b]],
                               [[-a * b], [0, 0, b * s], [-b * b]],
                               [[], [s * s / 4], []]])
    return M1 * hermite_monic(n, 3) + M2 * hermite_monic(n - 2, 3) * (n * (n - 1))


def ex2_L_printed(n: int, a=1, b=1) -> MatPoly:
    a, b = _ab(a, b)
    s = a * a + b * b
    m = n * (2 * n - 1)
    den, den2 = 4 + 2 * s * m, 2 + s * m
    M1 = MatPoly.constant([[1, -a * s * m * (4 * n + 1) / den, 0],
                           [0, F(2) / den2, 0],
                           [0, -b * s * m * (4 * n + 1) / den, 1]])
    M2 = MatPoly.from_entries([
        [[a * a * (1 + 4 * n) / 2], [a + a * s * m / 2, -a * s * (4 * n + 1) / 2], [a * b * (1 + 4 * n) / 2]],
        [[a], [0, -s], [b]],
        [[a * b * (1 + 4 * n) / 2], [b + b * s * m / 2, -b * s * (4 * n + 1) / 2], [b * b * (1 + 4 * n) / 2]],
    ])
    half = F(-1, 2)
    return M1 * laguerre_monic(n, half, 3) + M2 * laguerre_monic(n - 1, half, 3) * (F(n * (1 - 2 * n)) / den2)


def ex2_P_printed(n: int, a=1, b=1) -> MatPoly:
    """The non-monic odd-side sequence ``y^{-1/2} Q_{2n+1}(sqrt y)`` as published."""
    a, b = _ab(a, b)
    s = a * a + b * b
    M1 = MatPoly.constant([[2 * b * b * (1 + 2 * n), 4 * a, -2 * a * b * (1 + 2 * n)],
                           [-2 * a * b * (1 + 2 * n), 4 * b, 2 * a * a * (1 + 2 * n)],
                           [-a * s, s * s * (3 + 4 * n) / 2, -b * s]])
    M2 = MatPoly.from_entries([[[-2 * a * a], [0, 2 * a * s], [-2 * a * b]],
                               [[-2 * a * b], [0, 2 * b * s], [-2 * b * b]],
                               [[], [s * s / 2], []]])
    half = F(1, 2)
    return M1 * laguerre_monic(n, half, 3) + M2 * laguerre_monic(n - 1, half, 3) * (n * (2 * n + 1))


def ex2_Vt_printed(a=1, b=1) -> DiffOp:
    a, b = _ab(a, b)
    s = a * a + b * b
    return DiffOp({
        2: MatPoly.from_entries([[[0, -4 * s], [0, 0, 4 * a * s], []],
                                 [[], [0, 0, 4 * b * s], [0, -4 * s]],
                                 [[], [0, -s * s], []]]),
        1: MatPoly.from_entries([[[-2 * s, 4 * b * b], [0, 2 * a * s], [0, -4 * a * b]],
                                 [[0, -4 * a * b], [0, 2 * b * s], [-2 * s, 4 * a * a]],
                                 [[], [-s * s / 2, 2 * s * s], []]]),
        0: MatPoly.constant([[0, 4 * a, 0], [0, 4 * b, 0], [-a * s, s * s / 2, -b * s]]),
    }, 3)


def ex2_Nt_printed(a=1, b=1) -> DiffOp:
    a, b = _ab(a, b)
    s = a * a + b * b
    return DiffOp({
        2: MatPoly.from_entries([[[0, -4 * s], [], [0, 0, -a * s * s]],
                                 [[], [], [0, -s * s]],
                                 [[], [0, -4 * s], [0, 0, -b * s * s]]]),
        1: MatPoly.from_entries([
            [[-2 * b * b - 2 * a * a, 4 * b * b + 8 * a * a], [0, 4 * a * b], [0, -5 * a * s * s / 2]],
            [[], [], [-s * s / 2]],
            [[0, 4 * a * b], [-2 * a * a - 2 * b * b, 4 * a * a + 8 * b * b], [0, -5 * b * s * s / 2]],
        ]),
        0: MatPoly.constant([[2 * a * a, 2 * a * b, -a * s * (2 + s) / 2],
                             [4 * a, 4 * b, 0],
                             [2 * a * b, 2 * b * b, -b * s * (2 + s) / 2]]),
    }, 3)


def ex2_Et_printed(a=1, b=1) -> DiffOp:
    a, b = _ab(a, b)
    s = a * a + b * b
    return DiffOp({
        2: MatPoly.from_entries([[[0, -4 * s], [0, 0, 4 * a * s], []],
                                 [[], [0, 0, 4 * b * s], [0, -4 * s]],
                                 [[], [0, -s * s], []]]),
        1: MatPoly.from_entries([[[-6 * s, 4 * b * b], [0, 6 * a * s], [0, -4 * a * b]],
                                 [[0, -4 * a * b], [0, 6 * b * s], [-6 * s, 4 * a * a]],
                                 [[], [-3 * s * s, 4 * s * s], []]]),
        0: MatPoly.constant([[2 * b * b, 4 * a, -2 * a * b],
                             [-2 * a * b, 4 * b, 2 * a * a],
                             [-a * s, 3 * s * s / 2, -b * s]]),
    }, 3)


def ex2_Ft_printed(a=1, b=1) -> DiffOp:
    a, b = _ab(a, b)
    s = a * a + b * b
    return DiffOp({
        2: MatPoly.from_entries([[[0, -4 * s], [], [0, 0, -a * s * s]],
                                 [[], [], [0, -s * s]],
                                 [[], [0, -4 * s], [0, 0, -b * s * s]]]),
        1: MatPoly.from_entries([
            [[-6 * b * b - 6 * a * a, 4 * b * b + 8 * a * a], [0, 4 * a * b], [0, -7 * a * s * s / 2]],
            [[], [], [-3 * s * s / 2]],
            [[0, 4 * a * b], [-6 * a * a - 6 * b * b, 4 * a * a + 8 * b * b], [0, -7 * b * s * s / 2]],
        ]),
        0: MatPoly.constant([[2 * (3 * a * a + b * b), 4 * a * b, -a * s * (2 + 3 * s) / 2],
                             [4 * a, 4 * b, 0],
                             [4 * a * b, 2 * (a * a + 3 * b * b), -b * s * (2 + 3 * s) / 2]]),
    }, 3)


def bp_3x3_ex2(a=1, b=1) -> tuple[WeightSpec, list[DiffOp]]:
    """The weight and the fourth-order operator ``N V`` of its algebra."""
    return ex2_weight(a, b), [compose(ex2_N_printed(a, b), ex2_V_printed(a, b))]


def ex2_case(a=1, b=1) -> DarbouxCase:
    a, b = _ab(a, b)
    return DarbouxCase(
        "bp-3x3-ex2",
        hermite(MatPoly.identity(3), "w"),
        ex2_weight(a, b),
        ex2_V_printed(a, b),
        ex2_N_printed(a, b),
        expected=lambda n: ex2_Q_printed(n, a, b),
    )


def scalar_case(size: int = 1) -> DarbouxCase:
    """The trivial case: identity intertwiner from ``e^{-x^2} I`` to itself."""
    w = hermite(MatPoly.identity(size), "w")
    return DarbouxCase("identity", w, w, DiffOp.identity(size))


def _n_polynomial_operator(on_h: dict, on_h2: dict, size: int) -> DiffOp:
    """Operator sending ``h_n I`` to ``sum_k n^k (P_k h_n + R_k(x) h_n'')``.

    ``h_n . delta = -2n h_n`` and ``h_n'' . delta = -2(n-2) h_n''``, so ``n``
    becomes ``-delta/2`` on the first part and ``2 - delta/2`` on the second.
    """
    from .diffop import hermite_delta, multiplication

    delta = hermite_delta(size)
    on_first = delta * F(-1, 2)
    on_second = DiffOp.identity(size) * 2 + on_first
    d2 = DiffOp.derivative(size, 2)
    out = DiffOp.zero(size)
    for k, P in on_h.items():
        out = out + (on_first ** k) * exact.as_matrix(P, size)
    for k, R in on_h2.items():
        R = R if isinstance(R, MatPoly) else MatPoly.from_entries(R)
        out = out + compose(compose(d2, on_second ** k), multiplication(R))
    return out


def dg2004_V_closed_form(a=1) -> DiffOp:
    """An intertwiner ``h_n I . V = d_n H_n`` read off the closed form of ``H_n``.

    Here ``d_n = a^2 n(n-1) + 4``; clearing this denominator makes every
    entry polynomial in ``n``, and powers of ``n`` become powers of the
    Hermite operator.
    """
    a = exact.to_fraction(a)
    if a == 0:
        raise DomainError("the 2x2 example needs a != 0")
    a2, a3 = a * a, a ** 3
    on_h = {
        0: [[4, 0], [0, 4]],
        1: [[-a2, a3 / 2], [0, 0]],
        2: [[a2, a3 / 2], [0, 0]],
        3: [[0, -a3], [0, 0]],
    }
    on_h2 = {
        0: [[[-a2 / 2], [-a, 0, a3 / 2]], [[-a], [0, 0, a2]]],
        1: [[[-a2], [a3 / 4, 0, a3]], [[], []]],
        2: [[[], [-a3 / 4]], [[], []]],
    }
    return _n_polynomial_operator(on_h, on_h2, 2)


def dg2004_case(a=1) -> DarbouxCase:
    a = exact.to_fraction(a)
    W, _ = dg2004_2x2(a)
    return DarbouxCase(
        "dg2004-2x2",
        hermite(MatPoly.identity(2), "w"),
        W,
        dg2004_V_closed_form(a),
        expected=lambda n: dg2004_H_printed(n, a) * (a * a * n * (n - 1) + 4),
    )


# registry -----------------------------------------------------------------

CATALOG = {
    "dg2004-2x2": "2x2 weight e^{-x^2}(I + Bx^2)(I + B^T x^2), B = [[0,a],[0,0]]; params a",
    "dg2005-3x3": "3x3 weight e^{-x^2} e^{Ax^2} e^{A^T x^2}, A = [[0,0,a],[0,0,b],[0,0,0]]; params a, b",
    "bp-3x3-ex2": "3x3 Darboux example, A = [[0,a,0],[0,0,0],[0,b,0]]; params a, b",
    "blocknil": "e^{-x^2} e^{Bx^2} e^{B^T x^2}, B block nilpotent; params sizes, V1, V2, ...",
}


def catalog_build(family: str, params: dict | None = None, N: int | None = None
                  ) -> tuple[WeightSpec, list[DiffOp]]:
    """Build a catalog weight and its known operators.

    ``blocknil`` reads ``sizes`` (block sizes) and ``V`` (list of block
    matrices) or ``V1, V2, ...`` from ``params``.
    """
    params = dict(params or {})
    if family == "dg2004-2x2":
        W, ops = dg2004_2x2(params.get("a", 1))
    elif family == "dg2005-3x3":
        W, ops = dg2005_3x3(params.get("a", 1), params.get("b", 1))
    elif family == "bp-3x3-ex2":
        W, ops = bp_3x3_ex2(params.get("a", 1), params.get("b", 1))
    elif family == "blocknil":
        if "sizes" not in params:
            raise DimensionError("blocknil needs block sizes")
        sizes = list(params["sizes"])
        Vs = params.get("V")
        if Vs is None:
            Vs = [params[f"V{i}"] for i in range(1, len(sizes)) if f"V{i}" in params]
        W, ops = blocknil(sizes, Vs)
    else:
        raise KeyError(f"unknown catalog family {family!r}; known: {', '.join(CATALOG)}")
    if N is not None and W.size != N:
        raise DimensionError(f"{family} has size {W.size}, requested {N}")
    return W, ops
