"""Exact rational scalars and square matrices.

Scalars are :class:`fractions.Fraction` (always gcd-reduced with a positive
denominator).  Matrices are read-only ``numpy`` object arrays of Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

import numpy as np


class DimensionError(ValueError):
    """Operands have incompatible sizes."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class ParityError(ValueError):
    """A polynomial or operator has the wrong parity for the requested map."""


class SingularMatrixError(ArithmeticError):
    """An exact linear system has no unique solution."""


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: they would silently import rounding error.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}; pass a Fraction or 'p/q' string")
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def fraction_str(q: Fraction) -> str:
    """Canonical text form: ``"p/q"`` or ``"p"`` when q = 1."""
    q = to_fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def matrix(rows: Iterable[Iterable]) -> np.ndarray:
    """Build a read-only exact matrix from nested rows."""
    data = [[to_fraction(v) for v in row] for row in rows]
    a = np.empty((len(data), len(data[0]) if data else 0), dtype=object)
    for i, row in enumerate(data):
        if len(row) != a.shape[1]:
            raise DimensionError("ragged matrix rows")
        for j, v in enumerate(row):
            a[i, j] = v
    return _freeze(a)


def zeros(n: int, m: int | None = None) -> np.ndarray:
    m = n if m is None else m
    a = np.empty((n, m), dtype=object)
    a.fill(Fraction(0))
    return a


def identity(n: int) -> np.ndarray:
    a = zeros(n)
    for i in range(n):
        a[i, i] = Fraction(1)
    return _freeze(a)


def scalar_matrix(c, n: int) -> np.ndarray:
    c = to_fraction(c)
    a = zeros(n)
    for i in range(n):
        a[i, i] = c
    return _freeze(a)


def as_matrix(value, n: int | None = None) -> np.ndarray:
    """Accept an exact matrix, nested rows, or a scalar (times the identity)."""
    if isinstance(value, np.ndarray):
        if value.ndim != 2:
            raise DimensionError("expected a 2-D matrix")
        if value.dtype == object and all(isinstance(v, Fraction) for v in value.flat):
            return value
        return matrix(value.tolist())
    if isinstance(value, (list, tuple)):
        return matrix(value)
    if n is None:
        raise DimensionError("scalar needs an explicit size to become a matrix")
    return scalar_matrix(value, n)


def is_zero(a: np.ndarray) -> bool:
    return all(v == 0 for v in a.flat)


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return _freeze(a @ b)


def is_symmetric(a: np.ndarray) -> bool:
    return a.shape[0] == a.shape[1] and equal(a, a.T)


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    # row scaling by the lcm of denominators leaves the solution set unchanged
    out = []
    for row in rows:
        d = lcm(*(v.denominator for v in row)) if row else 1
        out.append([int(v * d) for v in row])
    return out


def _bareiss(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], int, int]:
    """Fraction-free forward elimination on the first ``ncols`` columns.

    Returns the reduced rows, the rank reached on the pivot columns, and the
    number of row swaps.  Stops at the first column with no pivot.
    """
    a = [row[:] for row in rows]
    n = len(a)
    prev = 1
    swaps = 0
    for k in range(min(n, ncols)):
        p = next((i for i in range(k, n) if a[i][k] != 0), None)
        if p is None:
            return a, k, swaps
        if p != k:
            a[k], a[p] = a[p], a[k]
            swaps += 1
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, len(rowi)):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return a, min(n, ncols), swaps


def solve(m: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Solve ``m @ X = rhs`` exactly for square nonsingular ``m``.

    Uses Bareiss fraction-free elimination on an integer-scaled augmented
    matrix, then exact back substitution.
    """
    n = m.shape[0]
    if m.shape != (n, n) or rhs.shape[0] != n:
        raise DimensionError(f"incompatible system {m.shape} / {rhs.shape}")
    k = rhs.shape[1]
    aug = [list(m[i]) + list(rhs[i]) for i in range(n)]
    red, rank, _ = _bareiss(_integer_rows(aug), n)
    if rank < n:
        raise SingularMatrixError(f"singular system (rank {rank} < {n})")
    x = [[Fraction(0)] * k for _ in range(n)]
    for i in range(n - 1, -1, -1):
        row = red[i]
        for c in range(k):
            s = Fraction(row[n + c])
            for j in range(i + 1, n):
                if row[j]:
                    s -= row[j] * x[j][c]
            x[i][c] = s / row[i]
    return matrix(x)


def inverse(m: np.ndarray) -> np.ndarray:
    return solve(m, identity(m.shape[0]))


def det(m: np.ndarray) -> Fraction:
    n = m.shape[0]
    if m.shape != (n, n):
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    rows = [list(m[i]) for i in range(n)]
    scale = Fraction(1)
    for row in rows:
        scale *= lcm(*(v.denominator for v in row))
    red, rank, swaps = _bareiss(_integer_rows(rows), n)
    if rank < n:
        return Fraction(0)
    d = Fraction(red[n - 1][n - 1]) / scale
    return -d if swaps % 2 else d


def rank(m: np.ndarray) -> int:
    rows = [list(map(Fraction, r)) for r in m]
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / piv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == nrows:
            break
    return r


def is_invertible(m: np.ndarray) -> bool:
    return m.shape[0] == m.shape[1] and rank(m) == m.shape[0]


def leading_minors(m: np.ndarray) -> list[Fraction]:
    return [det(m[:k, :k]) for k in range(1, m.shape[0] + 1)]


def is_positive_definite(m: np.ndarray) -> bool:
    """Sylvester's criterion on a symmetric matrix."""
    return is_symmetric(m) and all(d > 0 for d in leading_minors(m))


def matrix_to_json(m: np.ndarray) -> list[list[str]]:
    return [[fraction_str(v) for v in row] for row in m]


def matrix_from_json(data) -> np.ndarray:
    return matrix(data)
