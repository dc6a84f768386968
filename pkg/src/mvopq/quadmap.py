"""The change of variables ``y = x^2`` on weights, polynomials and operators.

For ``F(x) = G(x^2)`` the chain rule gives

    d^j/dx^j F(x) = sum_k T_{j,k}(x) G^{(k)}(x^2),
    T_{0,0} = 1,   T_{j+1,k} = T_{j,k}' + 2x T_{j,k-1},

so ``F . D = sum_k G^{(k)}(x^2) K_k(x)`` with ``K_k = sum_j T_{j,k} C_j``.  When
every ``K_k`` is even, ``D~ = sum_k d^k/dy^k K_k(sqrt y)`` satisfies
``(G . D~)(x^2) = (G(x^2) . D)(x)``.
"""

from __future__ import annotations

from functools import lru_cache

from . import exact
from .diffop import DiffOp, eigen_check, lambda_eigenvalue
from .exact import DomainError, ParityError
from .matpoly import MatPoly
from .orthopoly import monic_op
from .report import VerifyReport
from .weights import WeightSpec, pushforward


@lru_cache(maxsize=None)
def _chain_row(j: int) -> tuple[tuple[int, MatPoly], ...]:
    if j == 0:
        return ((0, MatPoly.identity(1)),)
    prev = dict(_chain_row(j - 1))
    two_x = MatPoly.monomial(1, 2, 1)
    row: dict[int, MatPoly] = {}
    for k in range(j + 1):
        t = prev.get(k, MatPoly.zero(1)).derivative()
        if k - 1 in prev:
            t = t + two_x * prev[k - 1]
        if not t.is_zero():
            row[k] = t
    return tuple(sorted(row.items()))


def chain_table(j: int) -> dict[int, MatPoly]:
    """``{k: T_{j,k}}`` as scalar (1x1) polynomials."""
    return dict(_chain_row(j))


def _scalar_times(t: MatPoly, c: MatPoly) -> MatPoly:
    lifted = MatPoly.from_dict({k: exact.scalar_matrix(v[0, 0], c.size) for k, v in t.terms()}, c.size)
    return lifted * c


def _check_parity(D: DiffOp) -> None:
    for j, c in D.terms.items():
        ok = c.is_even() if j % 2 == 0 else c.is_odd()
        if not ok:
            raise ParityError(f"coefficient of order {j} must be {'even' if j % 2 == 0 else 'odd'}")


def _collect(D: DiffOp) -> dict[int, MatPoly]:
    out: dict[int, MatPoly] = {}
    for j, c in D.terms.items():
        for k, t in chain_table(j).items():
            out[k] = out.get(k, MatPoly.zero(D.size)) + _scalar_times(t, c)
    return out


def _substitute(collected: dict[int, MatPoly], size: int) -> DiffOp:
    terms = {}
    for k, c in collected.items():
        if c.is_zero():
            continue
        if not c.is_polynomial():
            raise ParityError(f"order-{k} coefficient keeps negative powers after the change of variables")
        if not c.is_even():
            raise ParityError(f"order-{k} coefficient is not even after the change of variables")
        terms[k] = c.sqrt_substitute()
    return DiffOp(terms, size)


def transform_even(D: DiffOp) -> DiffOp:
    """The operator ``D~`` on functions of ``y = x^2``."""
    if any(not c.is_polynomial() for c in D.terms.values()):
        raise DomainError("transform_even needs polynomial coefficients")
    _check_parity(D)
    return _substitute(_collect(D), D.size)


def conjugate_by_x(D: DiffOp) -> DiffOp:
    """The operator ``E`` with ``E x = x D``, i.e. ``x (F . E) = (x F) . D``.

    Its coefficients ``B_k = C_k + (k+1) x^{-1} C_{k+1}`` may be Laurent.
    """
    terms = {}
    for k in range(D.order + 1):
        terms[k] = D.coeff(k) + D.coeff(k + 1).shift(-1) * (k + 1)
    return DiffOp(terms, D.size)


def transform_odd(D: DiffOp) -> DiffOp:
    """``E~``: the change of variables applied to ``conjugate_by_x(D)``.

    For ``H(x) = x F(x^2)`` this gives ``(H . D)(x) = x (F . E~)(x^2)``.
    """
    if any(not c.is_polynomial() for c in D.terms.values()):
        raise DomainError("transform_odd needs polynomial coefficients")
    _check_parity(D)
    E = conjugate_by_x(D)
    return _substitute(_collect(E), D.size)


def correspondence_check(W: WeightSpec, n_max: int, case_id: str = "") -> VerifyReport:
    """``H_{2n}(x) = L_n(x^2)`` and ``H_{2n+1}(x) = x F_n(x^2)`` for ``2n + 1 <= n_max``."""
    report = VerifyReport(case_id or f"correspondence:{W.name or 'W'}", {"n_max": n_max})
    if not W.is_symmetric_hermite():
        report.add("symmetric-weight", False, note="needs a Hermite base with even Z")
        return report
    H = monic_op(W, n_max)
    V, U = pushforward(W, "even"), pushforward(W, "odd")
    L = monic_op(V, n_max // 2)
    F = monic_op(U, max((n_max - 1) // 2, 0))
    for n in range(n_max // 2 + 1):
        lifted = L[n].compose_square()
        report.add("even", H[2 * n] == lifted, n, witness=H[2 * n] - lifted)
    for n in range((n_max - 1) // 2 + 1):
        if 2 * n + 1 > n_max:
            break
        lifted = F[n].compose_square().shift(1)
        report.add("odd", H[2 * n + 1] == lifted, n, witness=H[2 * n + 1] - lifted)
    return report


def spectral_match_check(W: WeightSpec, D: DiffOp, n_max: int, case_id: str = "") -> VerifyReport:
    """Eigenvalue transfer to both Laguerre sides.

    Even side: ``Lambda_n(D~) = Lambda_{2n}(D)`` and ``L_n . D~ = Lambda_{2n}(D) L_n``.
    Odd side: ``Lambda_n(E~) = Lambda_{2n+1}(D)`` and ``F_n . E~ = Lambda_{2n+1}(D) F_n``.
    """
    report = VerifyReport(case_id or f"spectral:{W.name or 'W'}", {"n_max": n_max})
    Dt, Et = transform_even(D), transform_odd(D)
    V, U = pushforward(W, "even"), pushforward(W, "odd")
    L, F = monic_op(V, n_max), monic_op(U, n_max)
    for n in range(n_max + 1):
        lam_even, lam_odd = lambda_eigenvalue(D, 2 * n), lambda_eigenvalue(D, 2 * n + 1)
        lt = lambda_eigenvalue(Dt, n)
        report.add("lambda-even", exact.equal(lt, lam_even), n, witness=lt - lam_even)
        resid = Dt.apply(L[n]) - lam_even * L[n]
        report.add("eigen-even", resid.is_zero(), n, witness=resid)
        le = lambda_eigenvalue(Et, n)
        report.add("lambda-odd", exact.equal(le, lam_odd), n, witness=le - lam_odd)
        resid = Et.apply(F[n]) - lam_odd * F[n]
        report.add("eigen-odd", resid.is_zero(), n, witness=resid)
    return report


def compare_operators(computed: DiffOp, printed: DiffOp, weight: WeightSpec | None = None,
                      n_max: int = 6, case_id: str = "compare") -> VerifyReport:
    """Coefficient-by-coefficient audit of a printed operator against a computed one.

    Every record is advisory: the report documents agreement, and when a
    weight is given, which of the two operators has the monic sequence as
    eigenfunctions.
    """
    report = VerifyReport(case_id, {"n_max": n_max})
    for j in sorted(set(computed.terms) | set(printed.terms)):
        diff = computed.coeff(j) - printed.coeff(j)
        report.add("coefficient", diff.is_zero(), j, witness=diff, advisory=True,
                   note=f"order {j}: computed minus printed")
    if weight is not None:
        seq = monic_op(weight, n_max)
        for label, op in (("computed", computed), ("printed", printed)):
            ec = eigen_check(weight, op, n_max, seq=seq)
            bad = [r.n for r in ec.failures()]
            report.add(f"eigen-{label}", ec.overall, witness={"failing_n": bad} if bad else None,
                       advisory=True, note=f"failing n: {bad}" if bad else "all n pass")
    return report
