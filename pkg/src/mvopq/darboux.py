"""Verification of Darboux intertwiners between matrix weights.

A case bundles a source weight with monic sequence ``p_n``, a target weight
with monic sequence ``P_n``, and an operator ``V`` such that
``p_n . V = A_n P_n``.  Intertwiners are checked, never searched for.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import exact
from .diffop import DiffOp, compose, eigen_check, lambda_eigenvalue, symmetry_check
from .exact import DimensionError
from .matpoly import MatPoly
from .orthopoly import monic_op
from .quadmap import transform_even, transform_odd
from .report import VerifyReport, from_witness
from .weights import WeightSpec, laguerre, pushforward


class NotDegreeBoundedError(ArithmeticError):
    """``p_n . V`` has degree above ``n``."""


@dataclass(frozen=True, eq=False)
class DarbouxCase:
    name: str
    source: WeightSpec
    target: WeightSpec
    V: DiffOp
    N: DiffOp | None = None
    expected: Callable[[int], MatPoly] | None = None

    def __post_init__(self):
        sizes = {self.source.size, self.target.size, self.V.size}
        if self.N is not None:
            sizes.add(self.N.size)
        if len(sizes) != 1:
            raise DimensionError(f"inconsistent sizes in Darboux case {self.name}: {sorted(sizes)}")

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "V": self.V.to_json(),
        }
        if self.N is not None:
            out["N"] = self.N.to_json()
        return out

    @classmethod
    def from_json(cls, data) -> "DarbouxCase":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            data.get("name", "case"),
            WeightSpec.from_json(data["source"]),
            WeightSpec.from_json(data["target"]),
            DiffOp.from_json(data["V"]),
            DiffOp.from_json(data["N"]) if data.get("N") else None,
        )


def _images(case: DarbouxCase, n_max: int):
    src = monic_op(case.source, n_max)
    for n in range(n_max + 1):
        Q = case.V.apply(src[n])
        if Q.degree > n:
            raise NotDegreeBoundedError(f"deg(p_{n} . V) = {Q.degree} > {n}")
        yield n, Q


def normalizers(case: DarbouxCase, n_max: int) -> list[np.ndarray]:
    """``A_n``: the degree-``n`` coefficient of ``p_n . V``."""
    return [Q.coeff(n) for n, Q in _images(case, n_max)]


def intertwine_check(case: DarbouxCase, n_max: int) -> VerifyReport:
    """Check ``p_n . V = A_n P_n`` exactly; invertibility of ``A_n`` is advisory."""
    report = VerifyReport(f"intertwine:{case.name}", {"n_max": n_max})
    tgt = monic_op(case.target, n_max)
    for n, Q in _images(case, n_max):
        A = Q.coeff(n)
        resid = Q - A * tgt[n]
        report.add("intertwine", resid.is_zero(), n, witness=resid)
        inv = exact.is_invertible(A)
        report.add("A_n-invertible", inv, n, witness=A, advisory=True,
                   note="" if inv else f"A_{n} is singular (rank {exact.rank(A)})")
        if case.expected is not None:
            diff = Q - case.expected(n)
            report.add("closed-form", diff.is_zero(), n, witness=diff)
    return report


def factorization_check(case: DarbouxCase, n_max: int, deg_max: int | None = None) -> VerifyReport:
    """``V N`` in the source algebra and ``N V`` in the target algebra.

    With ``deg_max`` the two products are also tested for symmetry (advisory).
    """
    if case.N is None:
        raise ValueError(f"case {case.name} has no cofactor N")
    report = VerifyReport(f"factorization:{case.name}", {"n_max": n_max, "deg_max": deg_max})
    VN, NV = compose(case.V, case.N), compose(case.N, case.V)
    report.extend(eigen_check(case.source, VN, n_max), "VN:")
    report.extend(eigen_check(case.target, NV, n_max), "NV:")
    if deg_max is not None:
        for label, W, op in (("VN", case.source, VN), ("NV", case.target, NV)):
            sc = symmetry_check(W, op, deg_max)
            report.add(f"{label}:symmetric", sc.overall, advisory=True,
                       witness=[r.witness for r in sc.failures()[:1]] or None)
    return report


def degree_preserving_check(D: DiffOp, n_max: int) -> VerifyReport:
    from .diffop import degree_preserving_check as _dp

    return _dp(D, n_max)


def laguerre_cases(W: WeightSpec, case: DarbouxCase) -> tuple[DarbouxCase, DarbouxCase]:
    """The even-side ``(v -> V, V~)`` and odd-side ``(u -> U, E~)`` cases."""
    size = W.size
    ident = MatPoly.identity(size)
    Vt, Et = transform_even(case.V), transform_odd(case.V)
    Nt = Ft = None
    if case.N is not None:
        Nt, Ft = transform_even(case.N), transform_odd(case.N)
    even = DarbouxCase(f"{case.name}:even", laguerre(Fraction(-1, 2), ident, "v"),
                       pushforward(W, "even"), Vt, Nt)
    odd = DarbouxCase(f"{case.name}:odd", laguerre(Fraction(1, 2), ident, "u"),
                      pushforward(W, "odd"), Et, Ft)
    return even, odd


def darboux_quadratic_check(W: WeightSpec, case: DarbouxCase, n_max: int) -> VerifyReport:
    """Carry a Hermite-side intertwiner to both Laguerre sides and verify it.

    Besides the two intertwining checks, the Laguerre normalizers must equal
    the Hermite ``A_{2n}`` (even side) and ``A_{2n+1}`` (odd side).
    """
    report = VerifyReport(f"darboux-quadratic:{case.name}", {"n_max": n_max})
    even, odd = laguerre_cases(W, case)
    herm_A = normalizers(case, 2 * n_max + 1)
    for label, sub, shift in (("even", even, 0), ("odd", odd, 1)):
        ic = intertwine_check(sub, n_max)
        report.extend(ic, f"{label}:")
        for n, A in enumerate(normalizers(sub, n_max)):
            ref = herm_A[2 * n + shift]
            report.add(f"{label}:A-match", exact.equal(A, ref), n, witness={"laguerre": A, "hermite": ref})
    return report


def lambda_consistency(case: DarbouxCase, n_max: int) -> VerifyReport:
    """``A_n = Lambda_n(V)`` when ``V`` has ``deg C_j <= j``."""
    report = VerifyReport(f"lambda-consistency:{case.name}", {"n_max": n_max})
    for n, A in enumerate(normalizers(case, n_max)):
        lam = lambda_eigenvalue(case.V, n)
        report.add("A_n=Lambda_n", exact.equal(A, lam), n, witness=A - lam)
    return report


def advisory_normalizers(report: VerifyReport) -> dict[int, np.ndarray]:
    """Recover the ``A_n`` matrices stored in a report's advisory records."""
    return {r.n: from_witness(r.witness) for r in report.records if r.name.endswith("A_n-invertible")}
