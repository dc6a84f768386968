"""Command-line interface: catalog browsing, sequence export and exact checks.

Every verifying subcommand prints a report and exits 0 when it passes,
1 when a mandatory record fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import catalog, exact
from .darboux import (DarbouxCase, darboux_quadratic_check, factorization_check,
                      intertwine_check, laguerre_cases)
from .diffop import DiffOp, eigen_check, symmetry_check
from .exact import DimensionError, DomainError, ParityError
from .matpoly import MatPoly
from .orthopoly import WeightNotPositiveError, monic_op, parity_check, recurrence_coeffs
from .quadmap import correspondence_check, spectral_match_check, transform_even, transform_odd
from .report import VerifyReport
from .weights import WeightSpec, pushforward

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CHECKS = ("parity", "symmetry", "eigen", "correspondence", "spectral", "darboux")


class UsageError(Exception):
    pass


# -- argument parsing ---------------------------------------------------------

def _parse_value(key: str, text: str):
    text = text.strip()
    if key == "sizes":
        return [int(t) for t in text.split(",") if t.strip()]
    if key.startswith("V") and (";" in text or "," in text or key[1:].isdigit()):
        return [[exact.to_fraction(e.strip()) for e in row.split(",")] for row in text.split(";")]
    return exact.to_fraction(text)


def parse_params(items) -> dict:
    params = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"bad --param {item!r}; expected key=value")
        try:
            params[key.strip()] = _parse_value(key.strip(), value)
        except (ValueError, ZeroDivisionError) as err:
            raise UsageError(f"bad value for parameter {key!r}: {err}") from err
    return params


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as err:
        raise UsageError(f"cannot read {path}: {err.strerror}") from err
    except json.JSONDecodeError as err:
        raise UsageError(f"{path} is not valid JSON: {err}") from err


def _split_source(text: str) -> tuple[str, str]:
    kind, sep, rest = text.partition(":")
    if not sep or kind not in ("catalog", "file"):
        raise UsageError(f"expected catalog:<id> or file:<path>, got {text!r}")
    return kind, rest


def load_weight(args) -> tuple[WeightSpec, list[DiffOp], str]:
    """The weight named by ``--weight`` with its known operators and an id."""
    if not args.weight:
        raise UsageError("--weight is required")
    kind, ref = _split_source(args.weight)
    if kind == "catalog":
        params = parse_params(args.param)
        try:
            W, ops = catalog.catalog_build(ref, params)
        except KeyError as err:
            raise UsageError(str(err.args[0])) from err
        return W, ops, ref
    data = _read_json(ref)
    ops = []
    if isinstance(data, dict) and "weight" in data:
        ops = [DiffOp.from_json(o) for o in data.get("operators", [])]
        data = data["weight"]
    return WeightSpec.from_json(data), ops, Path(ref).stem


def load_operator(args, default_ops) -> DiffOp:
    if getattr(args, "op", None):
        kind, ref = _split_source(args.op) if ":" in args.op else ("file", args.op)
        if kind != "file":
            raise UsageError("--op takes file:<path>")
        data = sys.stdin.read() if ref == "-" else _read_json(ref)
        if isinstance(data, str):
            data = json.loads(data)
        if isinstance(data, dict) and "operators" in data:
            data = data["operators"][0]
        return DiffOp.from_json(data)
    if not default_ops:
        raise UsageError("no operator known for this weight; pass --op file:<path>")
    return default_ops[0]


def load_case(args) -> tuple[DarbouxCase, WeightSpec | None]:
    """The Darboux case and, for catalog cases, the Hermite weight it targets."""
    ref = args.case or args.weight
    if not ref:
        raise UsageError("check darboux needs --case catalog:<id> or --case file:<path>")
    kind, name = _split_source(ref)
    if kind == "file":
        case = DarbouxCase.from_json(_read_json(name))
        W = case.target if case.target.is_symmetric_hermite() and case.source.is_symmetric_hermite() else None
        return case, W
    params = parse_params(args.param)
    if name == "bp-3x3-ex2":
        case = catalog.ex2_case(params.get("a", 1), params.get("b", 1))
        return case, case.target
    if name == "dg2004-2x2":
        case = catalog.dg2004_case(params.get("a", 1))
        return case, case.target
    if name == "scalar":
        case = catalog.scalar_case(int(params.get("size", 1)))
        return case, case.target
    raise UsageError(f"no catalog Darboux case {name!r}; known: bp-3x3-ex2, dg2004-2x2, scalar")


def horizon(value: int, what: str = "--n") -> int:
    if value < 0:
        raise UsageError(f"{what} must be nonnegative")
    cap = os.environ.get("MVOPQ_MAX_DEGREE")
    if cap:
        try:
            return min(value, int(cap))
        except ValueError as err:
            raise UsageError(f"MVOPQ_MAX_DEGREE must be an integer, got {cap!r}") from err
    return value


# -- output -------------------------------------------------------------------

def _flat(p: MatPoly) -> list[str]:
    return [exact.fraction_str(v) for c in p.coeffs for v in c.flat]


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def emit(obj, out) -> None:
    out.write(obj if isinstance(obj, str) else json.dumps(obj, indent=2))
    if not (isinstance(obj, str) and obj.endswith("\n")):
        out.write("\n")


def emit_report(report: VerifyReport, fmt: str, out) -> int:
    if fmt == "csv":
        rows = [["case", "name", "n", "verdict", "advisory", "note"]]
        for r in sorted(report.records, key=lambda r: (r.name, -1 if r.n is None else r.n)):
            rows.append([report.case_id, r.name, "" if r.n is None else r.n,
                         "pass" if r.verdict else "fail", int(r.advisory), r.note])
        emit(_csv(rows), out)
    else:
        emit(report.to_json(), out)
    return EXIT_OK if report.overall else EXIT_FAIL


def _sequence_rows(label, seq):
    return [[label, n, p.size, p.low_degree, p.degree] + _flat(p) for n, p in enumerate(seq)]


# -- subcommands --------------------------------------------------------------

def cmd_catalog(args, out) -> int:
    if args.format == "csv":
        emit(_csv([["id", "description"]] + [[k, v] for k, v in catalog.CATALOG.items()]), out)
    else:
        emit([{"id": k, "description": v} for k, v in catalog.CATALOG.items()], out)
    return EXIT_OK


def cmd_ops(args, out) -> int:
    W, _, name = load_weight(args)
    seq = monic_op(W, horizon(args.n))
    if args.format == "csv":
        emit(_csv([["n", "size", "low_degree", "degree", "coeffs"]]
                  + [r[1:] for r in _sequence_rows("P", seq)]), out)
    else:
        emit({"weight": name, "polys": [p.to_json() for p in seq],
              "norms": [exact.matrix_to_json(h) for h in seq.norms]}, out)
    return EXIT_OK


def cmd_recurrence(args, out) -> int:
    W, _, name = load_weight(args)
    n = horizon(args.n)
    rec = recurrence_coeffs(monic_op(W, n + 1))
    if args.format == "csv":
        rows = [["n", "B", "A"]]
        for k, (B, A) in enumerate(zip(rec.B, rec.A)):
            rows.append([k, json.dumps(exact.matrix_to_json(B)), json.dumps(exact.matrix_to_json(A))])
        emit(_csv(rows), out)
    else:
        emit({"weight": name, "B": [exact.matrix_to_json(B) for B in rec.B],
              "A": [exact.matrix_to_json(A) for A in rec.A]}, out)
    return EXIT_OK


def cmd_split(args, out) -> int:
    W, _, name = load_weight(args)
    n = horizon(args.n)
    V, U = pushforward(W, "even"), pushforward(W, "odd")
    L, F = monic_op(V, n), monic_op(U, n)
    if args.format == "csv":
        emit(_csv([["side", "n", "size", "low_degree", "degree", "coeffs"]]
                  + _sequence_rows("L", L) + _sequence_rows("F", F)), out)
    else:
        emit({"weight": name, "V": V.to_json(), "U": U.to_json(),
              "L": [p.to_json() for p in L], "F": [p.to_json() for p in F]}, out)
    return EXIT_OK


def cmd_transform(args, out) -> int:
    if args.op:
        D = load_operator(args, [])
    else:
        _, ops, _ = load_weight(args)
        D = load_operator(args, ops)
    T = transform_even(D) if args.mode == "even" else transform_odd(D)
    emit(T.to_json(), out)
    return EXIT_OK


def cmd_check(args, out) -> int:
    n, deg = horizon(args.n), horizon(args.deg, "--deg")
    kind = args.kind
    if kind == "darboux":
        case, W = load_case(args)
        report = VerifyReport(f"darboux:{case.name}", {"n_max": n, "deg_max": deg})
        report.extend(intertwine_check(case, n))
        if case.N is not None:
            report.extend(factorization_check(case, n))
        if W is not None and case.source.is_symmetric_hermite():
            report.extend(darboux_quadratic_check(W, case, n))
            if case.N is not None:
                for sub in laguerre_cases(W, case):
                    report.extend(factorization_check(sub, n), f"{sub.name.rsplit(':', 1)[-1]}:")
        return emit_report(report, args.format, out)
    W, ops, name = load_weight(args)
    if kind == "parity":
        report = parity_check(W, n)
    elif kind == "correspondence":
        report = correspondence_check(W, n, f"correspondence:{name}")
    else:
        D = load_operator(args, ops)
        if kind == "eigen":
            report = eigen_check(W, D, n, case_id=f"eigen:{name}")
        elif kind == "symmetry":
            report = symmetry_check(W, D, deg, case_id=f"symmetry:{name}")
        else:
            report = spectral_match_check(W, D, n, case_id=f"spectral:{name}")
    return emit_report(report, args.format, out)


def cmd_export(args, out) -> int:
    if args.part == "case":
        case, _ = load_case(args)
        emit(case.to_json(), out)
        return EXIT_OK
    W, ops, _ = load_weight(args)
    if args.part == "weight":
        emit(W.to_json(), out)
    elif args.part == "operator":
        emit(load_operator(args, ops).to_json(), out)
    else:
        emit({"weight": W.to_json(), "operators": [D.to_json() for D in ops]}, out)
    return EXIT_OK


# -- entry points -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--weight", help="catalog:<id> or file:<path> (WeightSpec JSON)")
    common.add_argument("--param", action="append", metavar="KEY=VALUE",
                        help="catalog parameter, e.g. a=1/2, sizes=2,1, V1=1;1")
    common.add_argument("--n", type=int, default=8, help="degree horizon n_max (default 8)")
    common.add_argument("--deg", type=int, default=10, help="symmetry horizon deg_max (default 10)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--op", help="operator as file:<path> (DiffOp JSON, '-' for stdin)")

    parser = argparse.ArgumentParser(prog="mvopq", description="Exact matrix-valued orthogonal polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("catalog", parents=[common], help="list catalog weights").set_defaults(func=cmd_catalog)
    sub.add_parser("ops", parents=[common], help="monic orthogonal polynomials").set_defaults(func=cmd_ops)
    sub.add_parser("recurrence", parents=[common], help="three-term recurrence").set_defaults(func=cmd_recurrence)
    sub.add_parser("split", parents=[common], help="Laguerre weights V, U with L_n, F_n").set_defaults(func=cmd_split)
    t = sub.add_parser("transform-op", parents=[common], help="change of variables y = x^2 on an operator")
    t.add_argument("--mode", choices=("even", "odd"), required=True)
    t.set_defaults(func=cmd_transform)
    c = sub.add_parser("check", parents=[common], help="run an exact verification")
    c.add_argument("kind", choices=CHECKS)
    c.add_argument("--case", help="Darboux case: catalog:<id> or file:<path>")
    c.set_defaults(func=cmd_check)
    e = sub.add_parser("export", parents=[common], help="write weight, operator or case JSON")
    e.add_argument("--part", choices=("bundle", "weight", "operator", "case"), default="bundle")
    e.add_argument("--case", help="Darboux case for --part case")
    e.set_defaults(func=cmd_export)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code or 0)
    try:
        return args.func(args, out)
    except UsageError as err:
        print(f"mvopq: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except WeightNotPositiveError as err:
        print(f"mvopq: {err}", file=sys.stderr)
        return EXIT_FAIL
    except (DomainError, DimensionError, ParityError, ValueError) as err:
        print(f"mvopq: error: {err}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
