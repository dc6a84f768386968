"""Matrix differential operators acting on the right.

``D = sum_j d^j/dx^j C_j(x)`` acts on a matrix polynomial ``P`` by
``(P . D)(x) = sum_j P^{(j)}(x) C_j(x)``.  Products follow the same
convention: ``P . (D1 D2) = (P . D1) . D2``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

import numpy as np

from . import exact
from .exact import DimensionError, DomainError
from .matpoly import MatPoly
from .report import VerifyReport
from .weights import WeightSpec


class DiffOp:
    """Finite sum of ``d^j C_j`` with (Laurent) matrix polynomial coefficients."""

    __slots__ = ("size", "_terms")
    __array_ufunc__ = None

    def __init__(self, terms: Mapping[int, MatPoly], size: int | None = None):
        if size is None:
            if not terms:
                raise DimensionError("size is required for an empty operator")
            size = next(iter(terms.values())).size
        clean = {}
        for j, c in terms.items():
            if j < 0:
                raise DomainError("derivative order must be nonnegative")
            if not isinstance(c, MatPoly):
                c = MatPoly.constant(c, size)
            if c.size != size:
                raise DimensionError(f"coefficient of order {j} has size {c.size}, expected {size}")
            if not c.is_zero():
                clean[int(j)] = c
        self.size = size
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def identity(cls, size: int) -> "DiffOp":
        return cls({0: MatPoly.identity(size)}, size)

    @classmethod
    def zero(cls, size: int) -> "DiffOp":
        return cls({}, size)

    @classmethod
    def derivative(cls, size: int, order: int = 1) -> "DiffOp":
        return cls({order: MatPoly.identity(size)}, size)

    @property
    def terms(self) -> dict[int, MatPoly]:
        return dict(self._terms)

    def coeff(self, j: int) -> MatPoly:
        return self._terms.get(j, MatPoly.zero(self.size))

    @property
    def order(self) -> int:
        return max(self._terms) if self._terms else -1

    def is_zero(self) -> bool:
        return not self._terms

    def is_proper(self) -> bool:
        """Polynomial coefficients with ``deg C_j <= j`` for every ``j``."""
        return all(c.is_polynomial() and c.degree <= j for j, c in self._terms.items())

    def apply(self, P: MatPoly) -> MatPoly:
        if P.size != self.size:
            raise DimensionError(f"operator of size {self.size} applied to size {P.size}")
        out = MatPoly.zero(self.size)
        for j, c in self._terms.items():
            d = P.derivative(j)
            if not d.is_zero():
                out = out + d * c
        return out

    def __rmatmul__(self, P):
        # P @ D  is the right action  P . D
        if isinstance(P, MatPoly):
            return self.apply(P)
        return NotImplemented

    def __add__(self, other: "DiffOp") -> "DiffOp":
        if not isinstance(other, DiffOp):
            return NotImplemented
        if other.size != self.size:
            raise DimensionError("operator size mismatch")
        keys = set(self._terms) | set(other._terms)
        return DiffOp({j: self.coeff(j) + other.coeff(j) for j in keys}, self.size)

    def __neg__(self):
        return DiffOp({j: -c for j, c in self._terms.items()}, self.size)

    def __sub__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        """Composition with another operator, or right scaling of coefficients."""
        if isinstance(other, DiffOp):
            return compose(self, other)
        if isinstance(other, (int, Fraction, str, np.ndarray)):
            return DiffOp({j: c * other for j, c in self._terms.items()}, self.size)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, str)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "DiffOp":
        out = DiffOp.identity(self.size)
        for _ in range(k):
            out = compose(out, self)
        return out

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.size == other.size and self._terms == other._terms

    def __hash__(self):
        return hash((self.size, tuple(self._terms.items())))

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "terms": [{"order": j, "coeff": c.to_json()} for j, c in self._terms.items()],
        }

    @classmethod
    def from_json(cls, data) -> "DiffOp":
        if isinstance(data, str):
            data = json.loads(data)
        size = int(data["size"])
        terms: dict[int, MatPoly] = {}
        for t in data["terms"]:
            j = int(t["order"])
            terms[j] = terms.get(j, MatPoly.zero(size)) + MatPoly.from_json(t["coeff"])
        return cls(terms, size)

    def __repr__(self):
        body = " + ".join(f"d^{j}*{c!r}" for j, c in self._terms.items()) or "0"
        return f"DiffOp({body})"


def apply(P: MatPoly, D: DiffOp) -> MatPoly:
    return D.apply(P)


def compose(D1: DiffOp, D2: DiffOp) -> DiffOp:
    """The operator ``D1 D2`` with ``P . (D1 D2) = (P . D1) . D2``.

    With ``D1 = sum_i d^i F_i`` and ``D2 = sum_j d^j G_j`` the Leibniz rule
    gives order ``i + l`` coefficients ``binom(j, l) F_i^{(j-l)} G_j``.
    """
    if D1.size != D2.size:
        raise DimensionError("operator size mismatch")
    out: dict[int, MatPoly] = {}
    for i, F in D1._terms.items():
        for j, G in D2._terms.items():
            for l in range(j + 1):
                dF = F.derivative(j - l)
                if dF.is_zero():
                    continue
                term = dF * G * comb(j, l)
                out[i + l] = out.get(i + l, MatPoly.zero(D1.size)) + term
    return DiffOp(out, D1.size)


def multiplication(p: MatPoly) -> DiffOp:
    """The order-zero operator ``P -> P p``."""
    return DiffOp({0: p}, p.size)


def falling(n: int, i: int) -> int:
    out = 1
    for t in range(i):
        out *= n - t
    return out


def lambda_eigenvalue(D: DiffOp, n: int) -> np.ndarray:
    """``Lambda_n = sum_i [n]_i F_i^i`` with ``F_i^i`` the ``x^i`` coefficient of ``C_i``."""
    if not D.is_proper():
        raise DomainError("eigenvalue formula needs deg C_j <= j")
    acc = exact.zeros(D.size)
    for i, c in D._terms.items():
        f = falling(n, i)
        if f:
            acc = acc + c.coeff(i) * f
    acc.flags.writeable = False
    return acc


def eigen_check(W: WeightSpec, D: DiffOp, n_max: int, seq=None, case_id: str = "") -> VerifyReport:
    """Check ``P_n . D = Lambda_n(D) P_n`` for the monic sequence of ``W``."""
    from .orthopoly import monic_op

    report = VerifyReport(case_id or f"eigen:{W.name or 'W'}", {"n_max": n_max})
    if not D.is_proper():
        report.add("proper", False, note="operator is not in the class deg C_j <= j")
        return report
    if seq is None or len(seq) <= n_max:
        seq = monic_op(W, n_max)
    for n in range(n_max + 1):
        P = seq[n]
        lam = lambda_eigenvalue(D, n)
        resid = D.apply(P) - lam * P
        report.add("eigen", resid.is_zero(), n, witness=resid)
    return report


def symmetry_check(W: WeightSpec, D: DiffOp, deg_max: int, case_id: str = "") -> VerifyReport:
    """Check ``<x^i I . D, x^j I> = <x^i I, x^j I . D>`` for ``i, j <= deg_max``.

    Left-linearity of the right action reduces W-symmetry on all matrix
    polynomials of degree ``<= deg_max`` to these monomial pairs.
    """
    report = VerifyReport(case_id or f"symmetry:{W.name or 'W'}", {"deg_max": deg_max})
    if not D.is_proper():
        report.add("proper", False, note="operator is not in the class deg C_j <= j")
        return report
    N = W.size
    mons = [MatPoly.monomial(i, 1, N) for i in range(deg_max + 1)]
    images = [D.apply(m) for m in mons]
    for i in range(deg_max + 1):
        for j in range(i, deg_max + 1):
            lhs = W.inner(images[i], mons[j])
            rhs = W.inner(mons[i], images[j])
            ok = exact.equal(lhs, rhs)
            report.add("symmetry", ok, max(i, j), witness={"i": i, "j": j, "diff": lhs - rhs},
                       note=f"i={i} j={j}" if not ok else "")
    return report


def hermite_delta(size: int = 1) -> DiffOp:
    """``d^2 - 2 d x``, the scalar Hermite operator times the identity."""
    return DiffOp({2: MatPoly.identity(size), 1: MatPoly.monomial(1, -2, size)}, size)


def op_from_delta_poly(entries, delta: DiffOp | None = None) -> DiffOp:
    """Operator whose ``(r, c)`` entry is the scalar polynomial ``entries[r][c]`` in ``delta``.

    Entries are ascending coefficient lists ``[c_0, c_1, ...]`` (or
    ``{power: c}`` mappings).  ``delta`` defaults to the Hermite operator.
    """
    n = len(entries)
    delta = hermite_delta(1) if delta is None else delta
    if delta.size != 1:
        raise DimensionError("delta must be a scalar operator")
    powers: list[DiffOp] = [DiffOp.identity(1)]
    out: dict[int, dict[int, np.ndarray]] = {}
    for r, row in enumerate(entries):
        if len(row) != n:
            raise DimensionError("entry grid must be square")
        for c, poly in enumerate(row):
            items = poly.items() if isinstance(poly, Mapping) else enumerate(poly)
            for k, v in items:
                v = exact.to_fraction(v)
                if not v:
                    continue
                while len(powers) <= k:
                    powers.append(compose(powers[-1], delta))
                for order, coef in powers[k]._terms.items():
                    slot = out.setdefault(order, {})
                    for deg, m in coef.terms():
                        mat = slot.setdefault(deg, exact.zeros(n))
                        mat[r, c] += m[0, 0] * v
    return DiffOp({order: MatPoly.from_dict(slot, n) for order, slot in out.items()}, n)


def degree_preserving_check(D: DiffOp, n_max: int, case_id: str = "") -> VerifyReport:
    """Report invertibility of ``Lambda_n(D)`` for ``n <= n_max``.

    For ``D`` with ``deg C_j <= j`` the degree-``n`` coefficient of
    ``P . D`` is ``P_n Lambda_n(D)``, so degree preservation on inputs of
    degree ``n`` is equivalent to invertibility of ``Lambda_n``.
    """
    if not D.is_proper():
        raise DomainError("degree preservation test needs deg C_j <= j")
    report = VerifyReport(case_id or "degree-preserving", {"n_max": n_max})
    for n in range(n_max + 1):
        lam = lambda_eigenvalue(D, n)
        report.add("lambda-invertible", exact.is_invertible(lam), n, witness=lam)
    return report
