"""Acceptance suite: ten exact checks over the catalog weights and examples.

Each test assembles named sub-checks, prints a single ``ACCEPTANCE k PASS|FAIL``
line and then asserts.  Run directly (``python tests/test_acceptance.py``)
to get just the ten lines.
"""

from __future__ import annotations

import random
from fractions import Fraction


from mvopq import exact
from mvopq.catalog import (blocknil, blocknil_A0, blocknil_B, blocknil_Etilde_printed, dg2004_2x2,
                           dg2004_F_printed, dg2004_H_printed, dg2004_L_printed, dg2005_3x3,
                           dg2005_Dtilde_printed, dg2005_Etilde_printed, ex2_case, ex2_D_delta_grid,
                           ex2_weight)
from mvopq.darboux import darboux_quadratic_check, intertwine_check, laguerre_cases
from mvopq.diffop import compose, eigen_check, lambda_eigenvalue, op_from_delta_poly, symmetry_check
from mvopq.matpoly import MatPoly
from mvopq.orthopoly import gs_oracle, monic_op, parity_check, recurrence_coeffs
from mvopq.quadmap import compare_operators, correspondence_check, transform_even, transform_odd
from mvopq.weights import pushforward

BLOCKNIL_N4 = ([3, 1], [[[1], [1], [1]]])


def catalog_weights():
    return {
        "dg2004-2x2(a=1)": dg2004_2x2(1)[0],
        "dg2005-3x3(a=1,b=1)": dg2005_3x3(1, 1)[0],
        "bp-3x3-ex2(a=1,b=1)": ex2_weight(1, 1),
        "blocknil(3,1)": blocknil(*BLOCKNIL_N4)[0],
    }


def verdict(k: int, title: str, checks: dict[str, bool], capsys=None) -> None:
    failed = [name for name, ok in checks.items() if not ok]
    line = f"ACCEPTANCE {k:2d} {'PASS' if not failed else 'FAIL'}: {title} ({len(checks)} sub-checks"
    line += f"; failing: {', '.join(failed)})" if failed else ")"
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    assert not failed, line


def test_01_closed_forms_2x2(capsys):
    W, _ = dg2004_2x2(1)
    H = monic_op(W, 8)
    L, Fs = monic_op(pushforward(W, "even"), 4), monic_op(pushforward(W, "odd"), 4)
    checks = {f"H_{n}": H[n] == dg2004_H_printed(n, 1) for n in range(9)}
    checks.update({f"L_{n}": L[n] == dg2004_L_printed(n, 1) for n in range(5)})
    checks.update({f"F_{n}": Fs[n] == dg2004_F_printed(n, 1) for n in range(5)})
    verdict(1, "2x2 closed forms H_n (n<=8), L_n, F_n (n<=4) at a=1", checks, capsys)


def test_02_correspondence(capsys):
    checks = {}
    for name, W in catalog_weights().items():
        rep = correspondence_check(W, 9)
        checks[name] = rep.overall and len(rep.find("even")) == 5 and len(rep.find("odd")) == 5
    verdict(2, "H_2n = L_n(x^2), H_2n+1 = x F_n(x^2), n<=4 on each side", checks, capsys)


def test_03_parity(capsys):
    checks = {name: parity_check(W, 9).overall for name, W in catalog_weights().items()}
    verdict(3, "even/odd split of H_n, n<=9", checks, capsys)


def _random_even(rng: random.Random, size: int, max_degree: int = 6) -> MatPoly:
    terms = {}
    for k in range(0, rng.randint(0, max_degree // 2) * 2 + 1, 2):
        terms[k] = [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(size)] for _ in range(size)]
    return MatPoly.from_dict(terms, size)


def test_04_inner_product_preservation(capsys):
    rng = random.Random(20240611)
    weights = list(catalog_weights().items())
    checks = {}
    for i in range(20):
        name, W = weights[i % len(weights)]
        V, U = pushforward(W, "even"), pushforward(W, "odd")
        F, G = _random_even(rng, W.size), _random_even(rng, W.size)
        Ft, Gt = F.sqrt_substitute(), G.sqrt_substitute()
        checks[f"pair{i}:{name}:even"] = exact.equal(W.inner(F, G), V.inner(Ft, Gt))
        checks[f"pair{i}:{name}:odd"] = exact.equal(W.inner(F.shift(1), G.shift(1)), U.inner(Ft, Gt))
    verdict(4, "<F,G>_W = <F~,G~>_V (and U side) for 20 random even pairs, deg<=6", checks, capsys)


def test_05_operator_transforms(capsys):
    W, (D,) = dg2005_3x3(1, 1)
    V, U = pushforward(W, "even"), pushforward(W, "odd")
    Dt, Et = transform_even(D), transform_odd(D)
    checks = {
        "D~ = printed": Dt == dg2005_Dtilde_printed(1, 1),
        "E~ = printed": Et == dg2005_Etilde_printed(1, 1),
        "eigen (W,D)": eigen_check(W, D, 8).overall,
        "eigen (V,D~)": eigen_check(V, Dt, 8).overall,
        "eigen (U,E~)": eigen_check(U, Et, 8).overall,
    }
    for n in range(9):
        checks[f"Lambda_{n}(D~)=Lambda_{2 * n}(D)"] = exact.equal(lambda_eigenvalue(Dt, n), lambda_eigenvalue(D, 2 * n))
        checks[f"Lambda_{n}(E~)=Lambda_{2 * n + 1}(D)"] = exact.equal(lambda_eigenvalue(Et, n),
                                                                      lambda_eigenvalue(D, 2 * n + 1))
    verdict(5, "3x3 operator transforms, eigen checks and eigenvalue transfer, n<=8", checks, capsys)


def test_06_symmetry_preservation(capsys):
    W, (D,) = dg2005_3x3(1, 1)
    checks = {
        "(W,D)": symmetry_check(W, D, 10).overall,
        "(V,D~)": symmetry_check(pushforward(W, "even"), transform_even(D), 10).overall,
    }
    verdict(6, "W-symmetry of D and V-symmetry of D~, deg_max 10", checks, capsys)


def test_07_darboux_example(capsys):
    case = ex2_case(1, 1)
    W = case.target
    VN, NV = compose(case.V, case.N), compose(case.N, case.V)
    ic = intertwine_check(case, 8)
    checks = {f"h_{n} I . V = Q_{n}": all(r.verdict for r in ic.find("closed-form", n)) for n in range(9)}
    checks["V N = printed delta-expansion"] = VN == op_from_delta_poly(ex2_D_delta_grid(1, 1))
    checks["V N in D(e^{-x^2} I)"] = eigen_check(case.source, VN, 6).overall
    checks["N V in D(W)"] = eigen_check(W, NV, 6).overall
    quad = darboux_quadratic_check(W, case, 6)
    for side in ("even", "odd"):
        checks[f"{side}: intertwine"] = all(r.verdict for r in quad.find(f"{side}:intertwine"))
        checks[f"{side}: A = Hermite A"] = all(r.verdict for r in quad.find(f"{side}:A-match"))
    even, odd = laguerre_cases(W, case)
    checks["N~ V~ in D(V)"] = eigen_check(even.target, compose(even.N, even.V), 6).overall
    checks["E~ F~ in D(u)"] = eigen_check(odd.source, compose(odd.V, odd.N), 5).overall
    checks["F~ E~ in D(U)"] = eigen_check(odd.target, compose(odd.N, odd.V), 5).overall
    verdict(7, "Darboux example: intertwiner, factorization and Laguerre sides", checks, capsys)


def test_08_advisory_findings(capsys):
    # informational: the findings must be reproduced with witnesses, whatever they say
    ic = intertwine_check(ex2_case(1, 1), 2)
    a0 = ic.find("A_n-invertible", 0)[0]
    A0 = exact.matrix_from_json(a0.witness["matrix"])
    sizes, Vs = [2, 1], [[[1], [1]]]
    W, (D,) = blocknil(sizes, Vs)
    B = blocknil_B(sizes, Vs)
    U = pushforward(W, "odd")
    cmp = compare_operators(transform_odd(D), blocknil_Etilde_printed(B, blocknil_A0(sizes, B)), U, 6,
                            "E~ computed vs printed (N=3)")
    eig = {r.name: r for r in cmp.records if r.name.startswith("eigen-")}
    diffs = [r for r in cmp.records if r.name == "coefficient" and not r.verdict]
    checks = {
        "A_0 singular recorded": a0.advisory and not a0.verdict and exact.rank(A0) == 2,
        "A_0 advisory keeps overall pass": ic.overall,
        "computed E~ eigen on U": eig["eigen-computed"].verdict,
        "printed E~ tested on U": "eigen-printed" in eig and eig["eigen-printed"].advisory,
        "discrepancy witnesses logged": bool(diffs) and all(r.witness is not None for r in diffs),
    }
    verdict(8, f"advisory findings recorded (printed E~ eigen: {eig['eigen-printed'].note})", checks, capsys)


def test_09_oracle_equivalence(capsys):
    checks = {}
    weights = catalog_weights()
    for name, W in list(weights.items()):
        for side in ("even", "odd"):
            weights[f"{name}:{side}"] = pushforward(W, side)
    for name, W in weights.items():
        a, b = monic_op(W, 6), gs_oracle(W, 6)
        checks[f"{name}: monic_op = gs_oracle"] = a.polys == b.polys
        recurrence_coeffs(a)  # raises on a nonzero residual
        checks[f"{name}: norms positive definite"] = all(exact.is_positive_definite(h) for h in a.norms)
    verdict(9, "monic_op = gs_oracle, zero recurrence residuals, positive norms, n<=6", checks, capsys)


BLOCKNIL_CASES = {
    "N=2 (1,1)": ([1, 1], [[[1]]]),
    "N=3 (2,1)": ([2, 1], [[[1], [1]]]),
    "N=3 (1,1,1)": ([1, 1, 1], [[[1]], [[1]]]),
    "N=4 (3,1)": BLOCKNIL_N4,
    "N=4 (2,2)": ([2, 2], [[[1, 0], [1, 1]]]),
    "N=4 (1,2,1)": ([1, 2, 1], [[[1, 1]], [[1], [2]]]),
    "N=4 (1,1,1,1)": ([1, 1, 1, 1], [[[1]], [[2]], [[1]]]),
}


def test_10_blocknil_family(capsys):
    checks = {}
    for name, (sizes, Vs) in BLOCKNIL_CASES.items():
        W, (D,) = blocknil(sizes, Vs)
        checks[f"{name}: symmetry"] = symmetry_check(W, D, 8).overall
        checks[f"{name}: eigen"] = eigen_check(W, D, 6).overall
        checks[f"{name}: D~ eigen on V"] = eigen_check(pushforward(W, "even"), transform_even(D), 6).overall
    verdict(10, "block-nilpotent family N in {2,3,4}: symmetry, eigen, transformed eigen", checks, capsys)


if __name__ == "__main__":
    import sys

    status = 0
    for test in [test_01_closed_forms_2x2, test_02_correspondence, test_03_parity,
                              test_04_inner_product_preservation, test_05_operator_transforms,
                              test_06_symmetry_preservation, test_07_darboux_example,
                              test_08_advisory_findings, test_09_oracle_equivalence,
                              test_10_blocknil_family]:
        try:
            test(None)
        except AssertionError:
            status = 1
    sys.exit(status)
