"""Matrix polynomials (and Laurent polynomials) with exact rational entries."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from . import exact
from .exact import DimensionError, DomainError, ParityError


class MatPoly:
    """An ``N x N`` matrix (Laurent) polynomial ``sum_k C_k x^k``.

    Coefficients are stored from ``low_degree`` upward and trimmed so that
    the first and last stored coefficient are nonzero.  The zero polynomial
    has no stored coefficients and ``low_degree == 0``.  Instances are
    immutable.
    """

    __slots__ = ("size", "low_degree", "_coeffs")
    # make ``ndarray * MatPoly`` dispatch to __rmul__ instead of broadcasting
    __array_ufunc__ = None

    def __init__(self, coeffs: Iterable, low_degree: int = 0, size: int | None = None):
        mats = [exact.as_matrix(c, size) for c in coeffs]
        if size is None:
            if not mats:
                raise DimensionError("size is required for an empty coefficient list")
            size = mats[0].shape[0]
        for m in mats:
            if m.shape != (size, size):
                raise DimensionError(f"coefficient of shape {m.shape} in a {size}x{size} polynomial")
        lo, hi = 0, len(mats)
        while lo < hi and exact.is_zero(mats[lo]):
            lo += 1
        while hi > lo and exact.is_zero(mats[hi - 1]):
            hi -= 1
        self.size = size
        self.low_degree = int(low_degree) + lo if hi > lo else 0
        self._coeffs = tuple(mats[lo:hi])

    # construction helpers ------------------------------------------------

    @classmethod
    def zero(cls, size: int) -> "MatPoly":
        return cls([], size=size)

    @classmethod
    def constant(cls, c, size: int | None = None) -> "MatPoly":
        return cls([c], size=size)

    @classmethod
    def identity(cls, size: int) -> "MatPoly":
        return cls([exact.identity(size)])

    @classmethod
    def monomial(cls, k: int, c=1, size: int | None = None) -> "MatPoly":
        """``c x^k`` where ``c`` is a matrix, or a scalar times the identity."""
        return cls([c], low_degree=k, size=size)

    @classmethod
    def from_dict(cls, terms: Mapping[int, object], size: int) -> "MatPoly":
        if not terms:
            return cls.zero(size)
        lo, hi = min(terms), max(terms)
        zero = exact.zeros(size)
        return cls([terms.get(k, zero) for k in range(lo, hi + 1)], low_degree=lo, size=size)

    @classmethod
    def from_scalar(cls, coeffs: Iterable, size: int = 1, low_degree: int = 0) -> "MatPoly":
        """Scalar polynomial ``sum c_k x^k`` times the ``size x size`` identity."""
        return cls([exact.scalar_matrix(c, size) for c in coeffs], low_degree=low_degree, size=size)

    @classmethod
    def from_entries(cls, entries) -> "MatPoly":
        """Assemble from an ``N x N`` grid of scalar polynomials.

        Each entry is a mapping ``{power: value}`` or a sequence of ascending
        coefficients starting at degree 0.
        """
        n = len(entries)
        terms: dict[int, np.ndarray] = {}
        for i, row in enumerate(entries):
            if len(row) != n:
                raise DimensionError("entry grid must be square")
            for j, e in enumerate(row):
                items = e.items() if isinstance(e, Mapping) else enumerate(e)
                for k, v in items:
                    v = exact.to_fraction(v)
                    if v:
                        terms.setdefault(k, exact.zeros(n))[i, j] += v
        return cls.from_dict(terms, n)

    # structure -----------------------------------------------------------

    @property
    def coeffs(self) -> tuple[np.ndarray, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        """Highest power present; ``-1`` for the zero polynomial."""
        return self.low_degree + len(self._coeffs) - 1 if self._coeffs else -1

    def is_polynomial(self) -> bool:
        return self.low_degree >= 0

    def coeff(self, k: int) -> np.ndarray:
        i = k - self.low_degree
        if self._coeffs and 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return exact.zeros(self.size)

    def leading_coeff(self) -> np.ndarray:
        return self._coeffs[-1] if self._coeffs else exact.zeros(self.size)

    def terms(self):
        """Yield ``(power, coefficient)`` over the stored range."""
        for i, c in enumerate(self._coeffs):
            yield self.low_degree + i, c

    def entry(self, i: int, j: int) -> dict[int, Fraction]:
        return {k: c[i, j] for k, c in self.terms() if c[i, j] != 0}

    # arithmetic ----------------------------------------------------------

    def _check(self, other: "MatPoly") -> None:
        if self.size != other.size:
            raise DimensionError(f"size mismatch: {self.size} vs {other.size}")

    def _coerce(self, other) -> "MatPoly | None":
        if isinstance(other, MatPoly):
            return other
        if isinstance(other, np.ndarray) or isinstance(other, (int, Fraction, str)):
            return MatPoly.constant(other, self.size)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        self._check(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.low_degree, other.low_degree)
        hi = max(self.degree, other.degree)
        return MatPoly([self.coeff(k) + other.coeff(k) for k in range(lo, hi + 1)], lo, self.size)

    __radd__ = __add__

    def __neg__(self):
        return MatPoly([-c for c in self._coeffs], self.low_degree, self.size)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        """Polynomial product, or right multiplication by a constant."""
        if isinstance(other, (int, Fraction, str)):
            c = exact.to_fraction(other)
            return MatPoly([m * c for m in self._coeffs], self.low_degree, self.size)
        if isinstance(other, np.ndarray):
            m = exact.as_matrix(other)
            if m.shape != (self.size, self.size):
                raise DimensionError(f"cannot right-multiply by {m.shape}")
            return MatPoly([c @ m for c in self._coeffs], self.low_degree, self.size)
        if not isinstance(other, MatPoly):
            return NotImplemented
        self._check(other)
        if self.is_zero() or other.is_zero():
            return MatPoly.zero(self.size)
        out = [exact.zeros(self.size) for _ in range(len(self._coeffs) + len(other._coeffs) - 1)]
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(other._coeffs):
                out[i + j] = out[i + j] + a @ b
        return MatPoly(out, self.low_degree + other.low_degree, self.size)

    def __rmul__(self, other):
        """Left multiplication by a scalar or constant matrix."""
        if isinstance(other, (int, Fraction, str)):
            return self * other
        if isinstance(other, np.ndarray):
            m = exact.as_matrix(other)
            if m.shape != (self.size, self.size):
                raise DimensionError(f"cannot left-multiply by {m.shape}")
            return MatPoly([m @ c for c in self._coeffs], self.low_degree, self.size)
        return NotImplemented

    def __pow__(self, k: int):
        out = MatPoly.identity(self.size)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, MatPoly):
            return NotImplemented
        return (
            self.size == other.size
            and self.low_degree == other.low_degree
            and len(self._coeffs) == len(other._coeffs)
            and all(exact.equal(a, b) for a, b in zip(self._coeffs, other._coeffs))
        )

    def __hash__(self):
        return hash((self.size, self.low_degree, tuple(tuple(c.flat) for c in self._coeffs)))

    def transpose(self) -> "MatPoly":
        return MatPoly([c.T.copy() for c in self._coeffs], self.low_degree, self.size)

    @property
    def T(self) -> "MatPoly":
        return self.transpose()

    def shift(self, k: int) -> "MatPoly":
        """Multiply by ``x^k`` (``k`` may be negative)."""
        if self.is_zero():
            return self
        return MatPoly(self._coeffs, self.low_degree + k, self.size)

    def derivative(self, order: int = 1) -> "MatPoly":
        p = self
        for _ in range(order):
            d = {k - 1: c * k for k, c in p.terms() if k != 0}
            p = MatPoly.from_dict(d, p.size)
        return p

    def __call__(self, x0) -> np.ndarray:
        return self.eval(x0)

    def eval(self, x0) -> np.ndarray:
        """Horner evaluation at a rational point."""
        x0 = exact.to_fraction(x0)
        if self.low_degree < 0 and x0 == 0:
            raise DomainError("cannot evaluate a Laurent polynomial at 0")
        acc = exact.zeros(self.size)
        for c in reversed(self._coeffs):
            acc = acc * x0 + c
        if self.low_degree:
            acc = acc * x0 ** self.low_degree
        acc.flags.writeable = False
        return acc

    # parity & quadratic substitution ------------------------------------

    def parity_split(self) -> tuple["MatPoly", "MatPoly"]:
        if self.low_degree < 0:
            raise DomainError("parity split is defined for polynomials only")
        even = {k: c for k, c in self.terms() if k % 2 == 0}
        odd = {k: c for k, c in self.terms() if k % 2 == 1}
        return MatPoly.from_dict(even, self.size), MatPoly.from_dict(odd, self.size)

    def is_even(self) -> bool:
        return all(k % 2 == 0 for k, c in self.terms() if not exact.is_zero(c))

    def is_odd(self) -> bool:
        return all(k % 2 == 1 for k, c in self.terms() if not exact.is_zero(c))

    def sqrt_substitute(self) -> "MatPoly":
        """Return ``q`` with ``q(y) = p(sqrt(y))`` for an even polynomial ``p``."""
        if self.low_degree < 0:
            raise DomainError("sqrt substitution needs a polynomial (no negative powers)")
        if not self.is_even():
            raise ParityError("sqrt substitution needs an even polynomial")
        return MatPoly.from_dict({k // 2: c for k, c in self.terms() if k % 2 == 0}, self.size)

    def compose_square(self) -> "MatPoly":
        """Return ``p(x^2)``."""
        return MatPoly.from_dict({2 * k: c for k, c in self.terms()}, self.size)

    # serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "low_degree": self.low_degree,
            "coeffs": [exact.matrix_to_json(c) for c in self._coeffs],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MatPoly":
        return cls(
            [exact.matrix_from_json(c) for c in data["coeffs"]],
            low_degree=int(data.get("low_degree", 0)),
            size=int(data["size"]),
        )

    def __repr__(self):
        if self.is_zero():
            return f"MatPoly.zero({self.size})"
        parts = []
        for k, c in self.terms():
            rows = "; ".join(" ".join(exact.fraction_str(v) for v in row) for row in c)
            parts.append(f"[{rows}]x^{k}")
        return "MatPoly(" + " + ".join(parts) + ")"


def matpoly_arith(p: MatPoly, q: MatPoly | None, kind: str) -> MatPoly:
    """Dispatch ``add``, ``mul``, ``transpose`` or ``scale`` (``q`` a scalar)."""
    if kind == "add":
        return p + q
    if kind == "mul":
        return p * q
    if kind == "transpose":
        return p.transpose()
    if kind == "scale":
        return p * exact.to_fraction(q)
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def x_poly(size: int) -> MatPoly:
    """The polynomial ``x I``."""
    return MatPoly.monomial(1, 1, size)
