"""Monic matrix-valued orthogonal polynomials from exact moment data."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import exact
from .exact import SingularMatrixError
from .matpoly import MatPoly
from .weights import WeightSpec


class WeightNotPositiveError(ArithmeticError):
    """The Gram system of a weight is singular at some degree."""

    def __init__(self, n: int, msg: str = ""):
        super().__init__(msg or f"Gram system singular at degree {n}")
        self.n = n


class RecurrenceError(ArithmeticError):
    """Three-term recurrence residual is not identically zero."""


@dataclass(frozen=True)
class MonicSequence:
    weight: WeightSpec
    polys: tuple[MatPoly, ...]
    norms: tuple[np.ndarray, ...]

    def __getitem__(self, n: int) -> MatPoly:
        return self.polys[n]

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)


@dataclass(frozen=True)
class Recurrence:
    """``x P_n = P_{n+1} + B_n P_n + A_n P_{n-1}`` with ``P_{-1} = 0``."""

    B: tuple[np.ndarray, ...]
    A: tuple[np.ndarray, ...]


def _monic_degree(W: WeightSpec, n: int) -> MatPoly:
    N = W.size
    if n == 0:
        return MatPoly.identity(N)
    # unknowns C_0..C_{n-1} satisfy  sum_k C_k G_{k,j} = -G_{n,j},  j < n
    G = np.empty((N * n, N * n), dtype=object)
    R = np.empty((N, N * n), dtype=object)
    for k in range(n):
        for j in range(n):
            G[k * N:(k + 1) * N, j * N:(j + 1) * N] = W.gram_block(k, j)
    for j in range(n):
        R[:, j * N:(j + 1) * N] = -W.gram_block(n, j)
    try:
        Xt = exact.solve(G.T, R.T)
    except SingularMatrixError as err:
        raise WeightNotPositiveError(n) from err
    X = Xt.T
    coeffs = [X[:, k * N:(k + 1) * N] for k in range(n)] + [exact.identity(N)]
    return MatPoly(coeffs, size=N)


def _norms(W: WeightSpec, polys) -> tuple[np.ndarray, ...]:
    return tuple(W.inner(p, p) for p in polys)


def monic_op(W: WeightSpec, n_max: int) -> MonicSequence:
    """Monic orthogonal polynomials ``P_0..P_{n_max}`` from the Gram system.

    Each ``P_n`` is found independently by solving its block Hankel system
    exactly; raises :class:`WeightNotPositiveError` naming the first
    singular degree.
    """
    polys = tuple(_monic_degree(W, n) for n in range(n_max + 1))
    return MonicSequence(W, polys, _norms(W, polys))


def gs_oracle(W: WeightSpec, n_max: int) -> MonicSequence:
    """Monic sequence by sequential block Gram-Schmidt projection."""
    N = W.size
    polys: list[MatPoly] = []
    norms: list[np.ndarray] = []
    inv_norms: list[np.ndarray] = []
    for n in range(n_max + 1):
        p = MatPoly.monomial(n, 1, N)
        xn = p
        for Pk, Hk_inv in zip(polys, inv_norms):
            p = p - (W.inner(xn, Pk) @ Hk_inv) * Pk
        h = W.inner(p, p)
        try:
            inv_norms.append(exact.inverse(h))
        except SingularMatrixError as err:
            raise WeightNotPositiveError(n, f"norm matrix singular at degree {n}") from err
        polys.append(p)
        norms.append(h)
    return MonicSequence(W, tuple(polys), tuple(norms))


def recurrence_coeffs(seq: MonicSequence) -> Recurrence:
    """Extract ``B_n, A_n`` for ``n < len(seq) - 1`` by coefficient matching."""
    if len(seq) < 2:
        raise ValueError("need at least two polynomials")
    N = seq.weight.size
    x = MatPoly.monomial(1, 1, N)
    Bs, As = [], []
    for n in range(len(seq) - 1):
        rem = x * seq[n] - seq[n + 1]
        Bn = rem.coeff(n)
        rem = rem - Bn * seq[n]
        if n == 0:
            An = exact.zeros(N)
        else:
            An = rem.coeff(n - 1)
            rem = rem - An * seq[n - 1]
        if not rem.is_zero():
            raise RecurrenceError(f"nonzero recurrence residual at n={n}: {rem!r}")
        Bs.append(Bn)
        As.append(An)
    return Recurrence(tuple(Bs), tuple(As))


def orthogonality_defects(seq: MonicSequence):
    """Yield ``(n, j, <P_n, x^j I>)`` for every nonzero pairing with ``j < n``."""
    W = seq.weight
    N = W.size
    for n, p in enumerate(seq):
        for j in range(n):
            v = W.inner(p, MatPoly.monomial(j, 1, N))
            if not exact.is_zero(v):
                yield n, j, v


def normalize(Q: MatPoly) -> tuple[np.ndarray, MatPoly]:
    """Split ``Q = M P`` with ``P`` monic; ``M`` is the leading coefficient."""
    M = Q.leading_coeff()
    try:
        Minv = exact.inverse(M)
    except SingularMatrixError as err:
        raise SingularMatrixError("leading coefficient is not invertible") from err
    return M, Minv * Q


def parity_check(W: WeightSpec, n_max: int, seq: MonicSequence | None = None):
    """``P_{2n}`` even and ``P_{2n+1}`` odd, for a weight with even ``Z``."""
    from .report import VerifyReport

    report = VerifyReport(f"parity:{W.name or 'W'}", {"n_max": n_max})
    if not W.is_symmetric_hermite():
        report.add("symmetric-weight", False, note="needs a Hermite base with even Z")
        return report
    if seq is None or len(seq) <= n_max:
        seq = monic_op(W, n_max)
    for n in range(n_max + 1):
        even, odd = seq[n].parity_split()
        wrong = odd if n % 2 == 0 else even
        report.add("even" if n % 2 == 0 else "odd", wrong.is_zero(), n, witness=wrong)
    return report
