"""Hermite- and Laguerre-type matrix weights and their exact moment functionals.

A weight is a scalar base density times a matrix polynomial ``Z``:

* Hermite:  ``e^{-x^2} Z(x)`` on the real line,
* Laguerre: ``y^alpha e^{-y} Z(y)`` on ``(0, inf)``.

All moments of a base share one transcendental factor (``sqrt(pi)`` for the
Hermite and half-integer Laguerre bases), which is divided out.  Monic
orthogonalization and every identity checked here are insensitive to a
global positive scale, so the arithmetic stays in the rationals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable

import numpy as np

from . import exact
from .exact import DomainError, ParityError
from .matpoly import MatPoly
from .report import VerifyReport


@dataclass(frozen=True)
class HermiteBase:
    kind = "hermite"

    def __str__(self):
        return "hermite"


@dataclass(frozen=True)
class LaguerreBase:
    alpha: Fraction

    kind = "laguerre"

    def __post_init__(self):
        a = exact.to_fraction(self.alpha)
        object.__setattr__(self, "alpha", a)
        if a <= -1:
            raise DomainError(f"Laguerre parameter must exceed -1, got {a}")
        if a.denominator not in (1, 2):
            raise DomainError(f"only integer or half-integer alpha keeps moments rational, got {a}")

    def __str__(self):
        return f"laguerre(alpha={exact.fraction_str(self.alpha)})"


Base = HermiteBase | LaguerreBase


def _double_factorial_over_power(m: int) -> Fraction:
    # Gamma(m + 1/2) / sqrt(pi) = (2m-1)!! / 2^m
    num = 1
    for j in range(1, 2 * m, 2):
        num *= j
    return Fraction(num, 2 ** m)


@lru_cache(maxsize=None)
def normalized_moment(base: Base, k: int) -> Fraction:
    """The ``k``-th moment of the scalar base density, common unit removed.

    Hermite: ``int x^k e^{-x^2} dx / sqrt(pi)``.
    Laguerre, half-integer alpha: ``Gamma(k + alpha + 1) / sqrt(pi)``.
    Laguerre, integer alpha: ``(k + alpha)! / alpha!``.
    """
    if k < 0:
        raise DomainError("moment index must be nonnegative")
    if isinstance(base, HermiteBase):
        return Fraction(0) if k % 2 else _double_factorial_over_power(k // 2)
    if isinstance(base, LaguerreBase):
        a = base.alpha
        if a.denominator == 1:
            return Fraction(factorial(k + int(a)), factorial(int(a)))
        return _double_factorial_over_power(int(k + a + Fraction(1, 2)))
    raise DomainError(f"unsupported base {base!r}")


@dataclass(frozen=True)
class MomentTable:
    base: Base
    values: tuple[Fraction, ...]

    @property
    def unit(self) -> str:
        if isinstance(self.base, LaguerreBase) and self.base.alpha.denominator == 1:
            return "one"
        return "sqrt_pi"

    @classmethod
    def build(cls, base: Base, k_max: int) -> "MomentTable":
        return cls(base, tuple(normalized_moment(base, k) for k in range(k_max + 1)))

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]


@dataclass(frozen=True, eq=False)
class WeightSpec:
    """``base(x) * Z(x)`` with ``Z`` a matrix polynomial."""

    base: Base
    Z: MatPoly
    name: str = ""
    _hankel: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if not self.Z.is_polynomial():
            raise DomainError("Z must be a polynomial")

    @property
    def size(self) -> int:
        return self.Z.size

    def hankel(self, s: int) -> np.ndarray:
        """``int x^s W(x) dx`` in normalized units (depends only on s = i + j)."""
        if s not in self._hankel:
            acc = exact.zeros(self.size)
            for m, c in self.Z.terms():
                mom = normalized_moment(self.base, s + m)
                if mom:
                    acc = acc + c * mom
            acc.flags.writeable = False
            self._hankel[s] = acc
        return self._hankel[s]

    def gram_block(self, i: int, j: int) -> np.ndarray:
        return self.hankel(i + j)

    def inner(self, P: MatPoly, Q: MatPoly) -> np.ndarray:
        """``<P, Q> = int P(x) W(x) Q(x)^T dx`` (real entries, so ``*`` is transpose)."""
        if not (P.is_polynomial() and Q.is_polynomial()):
            raise DomainError("inner product needs polynomial arguments")
        acc = exact.zeros(self.size)
        for i, a in P.terms():
            if exact.is_zero(a):
                continue
            for j, b in Q.terms():
                if exact.is_zero(b):
                    continue
                h = self.hankel(i + j)
                if not exact.is_zero(h):
                    acc = acc + a @ h @ b.T
        acc.flags.writeable = False
        return acc

    def is_symmetric_hermite(self) -> bool:
        """``W(x) = W(-x)``: Hermite base with an even ``Z``."""
        return isinstance(self.base, HermiteBase) and self.Z.is_even()

    def to_json(self) -> dict:
        if isinstance(self.base, HermiteBase):
            base = "hermite"
        else:
            base = {"laguerre": {"alpha": exact.fraction_str(self.base.alpha)}}
        return {"base": base, "Z": self.Z.to_json()}

    @classmethod
    def from_json(cls, data) -> "WeightSpec":
        if isinstance(data, str):
            data = json.loads(data)
        base = data["base"]
        if base == "hermite":
            b: Base = HermiteBase()
        elif isinstance(base, dict) and "laguerre" in base:
            b = LaguerreBase(exact.to_fraction(base["laguerre"]["alpha"]))
        else:
            raise DomainError(f"unknown base {base!r}")
        return cls(b, MatPoly.from_json(data["Z"]), data.get("name", ""))

    def __repr__(self):
        return f"WeightSpec({self.base}, Z={self.Z!r})"


def hermite(Z: MatPoly, name: str = "") -> WeightSpec:
    return WeightSpec(HermiteBase(), Z, name)


def laguerre(alpha, Z: MatPoly, name: str = "") -> WeightSpec:
    return WeightSpec(LaguerreBase(exact.to_fraction(alpha)), Z, name)


def gram_block(W: WeightSpec, i: int, j: int) -> np.ndarray:
    return W.gram_block(i, j)


def pushforward(W: WeightSpec, side: str = "even") -> WeightSpec:
    """Image of a symmetric Hermite-type weight under ``y = x^2``.

    ``even`` gives ``y^{-1/2} e^{-y} Z(sqrt y)``; ``odd`` gives the same with
    ``y^{1/2}``.
    """
    if not isinstance(W.base, HermiteBase):
        raise DomainError("pushforward starts from a Hermite-type weight")
    if not W.Z.is_even():
        raise ParityError("pushforward needs W(x) = W(-x), i.e. an even Z")
    alpha = {"even": Fraction(-1, 2), "odd": Fraction(1, 2)}.get(side)
    if alpha is None:
        raise ValueError(f"side must be 'even' or 'odd', got {side!r}")
    suffix = "V" if side == "even" else "U"
    return WeightSpec(LaguerreBase(alpha), W.Z.sqrt_substitute(),
                      f"{W.name}:{suffix}" if W.name else suffix)


def positivity_probe(W: WeightSpec, points: Iterable) -> VerifyReport:
    """Check ``Z(x0)`` is symmetric positive definite at each probe point."""
    pts = [exact.to_fraction(p) for p in points]
    report = VerifyReport(W.name or "weight", {"points": [exact.fraction_str(p) for p in pts]})
    for p in pts:
        if isinstance(W.base, LaguerreBase) and p <= 0:
            report.add("positivity", False, witness=p, note="probe point outside (0, inf)")
            continue
        z = W.Z.eval(p)
        ok = exact.is_positive_definite(z)
        report.add("positivity", ok, witness={"x0": p, "Z(x0)": z, "minors": exact.leading_minors(z)},
                   note=f"x0={exact.fraction_str(p)}")
    return report
