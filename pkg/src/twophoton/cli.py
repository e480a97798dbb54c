"""Command-line front end.

Exit codes: 0 all checks passed, 1 a verification failed, 2 bad input
(malformed JSON, unknown names, violated family constraints), 3 arithmetic
domain error (non-rational input in exact mode, division by zero, singular
expansion point).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from . import bialgebra as bi
from . import eigenstates as eig
from . import quantum as qu
from .algebra import BASIS
from .errors import ConstraintError, DomainError, SingularPointError, VerificationError
from .fockrep import make_rep, to_number_basis
from .scalars import PARAM_NAMES, format_scalar, to_scalar

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DOMAIN = 0, 1, 2, 3


class InputError(Exception):
    pass


def _reject_constant(name):
    raise DomainError(f"{name} is not a rational number")


def load_json(source: str):
    """Parse a path, ``-`` (stdin) or an inline JSON object.

    Non-integer numbers are read as exact decimals, so ``0.25`` becomes 1/4.
    """
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        text = source
    else:
        path = Path(source)
        if not path.exists():
            raise InputError(f"no such file: {source}")
        text = path.read_text()
    try:
        return json.loads(text, parse_float=Fraction, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None


def _rational(value, what: str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InputError(f"{what}: expected a rational number, got {value!r}")
    try:
        return to_scalar(value)
    except DomainError:
        raise DomainError(f"{what}: {value!r} is not a rational number") from None


def params_from_json(data) -> bi.BialgebraParams:
    if isinstance(data, dict) and "params" in data:
        data = data["params"]
    if not isinstance(data, dict):
        raise InputError("expected a JSON object of parameters a1..a6, b1..b6, c1..c3")
    unknown = sorted(set(data) - set(PARAM_NAMES))
    if unknown:
        raise InputError(f"unknown parameter(s): {', '.join(unknown)}")
    return bi.BialgebraParams(tuple(_rational(data.get(k, 0), k) for k in PARAM_NAMES))


def _parse_value(text: str, exact: bool):
    if exact:
        return _rational(text, "value")
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a number: {text!r}") from None


def _key_values(items: List[str]):
    out = {}
    for item in items or []:
        if "=" not in item:
            raise InputError(f"expected name=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


# commands return (payload, rows for CSV, exit code)

def cmd_classify(args):
    p = params_from_json(load_json(args.input))
    report = bi.classification_residuals(p)
    payload = {"params": p.to_json(), **report.to_json()}
    rows = [("equation", "residual")]
    names = ([f"A{i + 1}" for i in range(8)] + [f"B{i + 1}" for i in range(8)]
             + [f"C{i + 1}" for i in range(3)])
    rows += [(n, format_scalar(v)) for n, v in zip(names, report.residuals)]
    rows.append(("discriminant", format_scalar(report.discriminant)))
    rows.append(("verdict", report.verdict))
    return payload, rows, EXIT_OK


def cmd_family(args):
    free = {k: _rational(v, k) for k, v in _key_values(args.set).items()}
    try:
        p = bi.family(args.kind, **free)
    except ConstraintError as exc:
        raise InputError(f"{args.kind}: constraint {exc.relation} violated") from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report = bi.classification_residuals(p)
    payload = {"family": args.kind, "params": p.to_json(), "verdict": report.verdict,
               "primitive": report.primitive}
    rows = [("name", "value")] + list(p.to_json().items())
    return payload, rows, EXIT_OK


def cmd_cocommutator(args):
    p = params_from_json(load_json(args.input))
    gens = [args.generator] if args.generator else list(BASIS)
    for g in gens:
        if g not in BASIS:
            raise InputError(f"unknown generator {g!r}")
    payload = {"params": p.to_json(),
               "cocommutator": {g: bi.cocommutator(p, g).to_json() for g in gens}}
    rows = [("generator", "component", "coefficient")]
    for g in gens:
        rows += [(g, k, v) for k, v in payload["cocommutator"][g].items()]
    return payload, rows, EXIT_OK


def _deformation(args):
    if args.kind not in ("ua1", "ua2"):
        raise InputError(f"unknown deformation {args.kind!r}; expected ua1 or ua2")
    return _rational(args.param or "0", "parameter")


def _report_rows(reports):
    rows = [("check", "kind", "D", "guard", "parameter", "status", "first_failure")]
    for r in reports:
        j = r.to_json()
        ff = j["first_failure"]["what"] if j["first_failure"] else ""
        rows.append((j["check"], j["kind"], j["D"], "" if j["guard"] is None else j["guard"],
                     j["parameter"], j["status"], ff))
    return rows


def _reports_payload(reports):
    status = "pass" if all(r.ok for r in reports) else "fail"
    payload = {"status": status, "reports": [r.to_json() for r in reports]}
    return payload, _report_rows(reports), EXIT_OK if status == "pass" else EXIT_FAIL


def cmd_verify(args):
    a = _deformation(args)
    dim = args.dim or 8
    if dim < 4:
        raise InputError("--dim must be at least 4")
    reports = qu.verify_all(args.kind, dim, a, args.guard, coassoc_dim=min(dim, 5),
                            qybe_dim=4)
    return _reports_payload(reports)


def cmd_rmatrix(args):
    a = _deformation(args)
    dim = args.dim or 4
    if dim < 4:
        raise InputError("--dim must be at least 4")
    rep = make_rep(args.kind, dim, a)
    spec = qu.RMatrixSpec(args.kind)
    table = qu.CoproductTable.for_kind(args.kind)
    reports = [qu.qybe_check(spec, rep, raise_on_failure=False)]
    if dim > args.guard:
        reports.append(qu.intertwine_check(spec, table, rep, args.guard, raise_on_failure=False))
    return _reports_payload(reports)


def cmd_eigenstate(args):
    exact = not args.float
    if args.kind not in eig.KINDS:
        raise InputError(f"unknown kind {args.kind!r}")
    betas = _key_values(args.beta)
    unknown = set(betas) - {f"b{i}" for i in range(1, 6)}
    if unknown:
        raise InputError(f"unknown coefficient(s): {sorted(unknown)}")
    b = [_parse_value(betas.get(f"b{i}", "0"), exact) for i in range(1, 6)]
    lam = _parse_value(args.lam, exact)
    param = _parse_value(args.param or "0", exact)
    order = args.order or 20
    problem = eig.EigenProblem(args.kind, tuple(b), lam, order, param)
    spec = eig.ode_from_problem(problem)
    sol = eig.solve_series(spec, _parse_value(args.c0, exact), _parse_value(args.c1, exact), order)
    ok = eig.check_residual(sol)
    payload = {"kind": args.kind, "betas": [format_scalar(x) for x in b],
               "lambda": format_scalar(lam), "parameter": format_scalar(param),
               "order": order, "ode": spec.to_json(), "solution": sol.to_json(),
               "status": "pass" if ok else "fail"}
    if args.dim:
        mr = eig.matrix_residual(problem, sol, args.dim, raise_on_failure=False)
        payload["matrix_residual"] = mr.to_json()
        ok = ok and mr.ok
        payload["status"] = "pass" if ok else "fail"
    if exact:
        rows = [("index", "numerator", "denominator")]
        rows += [(k, Fraction(c).numerator, Fraction(c).denominator) for k, c in enumerate(sol.coeffs)]
    else:
        rows = [("index", "value")] + [(k, repr(float(c))) for k, c in enumerate(sol.coeffs)]
    return payload, rows, EXIT_OK if ok else EXIT_FAIL


def cmd_rep(args):
    exact = not args.float and args.basis == "monomial"
    a = _rational(args.param or "0", "parameter")
    if args.kind not in ("classical", "ua1", "ua2"):
        raise InputError(f"unknown kind {args.kind!r}")
    rep = make_rep(args.kind, args.dim or 6, a)
    if args.basis == "number":
        mats = {g: m.tolist() for g, m in to_number_basis(rep).items()}
    elif exact:
        mats = {g: [[format_scalar(v) for v in row] for row in m.rows()] for g, m in rep.matrices.items()}
    else:
        mats = {g: m.to_float().tolist() for g, m in rep.matrices.items()}
    payload = {"kind": args.kind, "parameter": format_scalar(a), "D": rep.dim,
               "basis": args.basis, "matrices": mats}
    rows = [("generator", "row", "column", "value")]
    for g, m in mats.items():
        rows += [(g, i, j, v) for i, row in enumerate(m) for j, v in enumerate(row)
                 if v not in (0, "0", 0.0)]
    return payload, rows, EXIT_OK


COMMANDS = {
    "classify": cmd_classify, "family": cmd_family, "cocommutator": cmd_cocommutator,
    "verify": cmd_verify, "rmatrix": cmd_rmatrix, "eigenstate": cmd_eigenstate,
    "rep": cmd_rep,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="rational arithmetic (default)")
    mode.add_argument("--float", action="store_true", help="floating point (eigenstate only)")
    common.add_argument("--dim", type=int, help="truncation dimension D")
    common.add_argument("--guard", type=int, default=2, help="guard band G (default 2)")
    common.add_argument("--order", type=int, help="series order n (eigenstate, default 20)")
    common.add_argument("--param", help="deformation parameter as a rational, e.g. 1/2")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default="json")

    parser = argparse.ArgumentParser(prog="twophoton", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="bialgebra equations for r-matrix parameters")
    p.add_argument("input", help="JSON file, '-' for stdin, or an inline JSON object")

    p = sub.add_parser("family", parents=[common], help="parameters of a named subfamily")
    p.add_argument("kind", help=", ".join(bi.FAMILY_KINDS))
    p.add_argument("--set", nargs="*", metavar="NAME=VALUE", help="free parameters")

    p = sub.add_parser("cocommutator", parents=[common], help="cocommutators of the generators")
    p.add_argument("input")
    p.add_argument("--generator", help="one generator (default: all six)")

    p = sub.add_parser("verify", parents=[common], help="relation and Hopf checks on a truncated rep")
    p.add_argument("kind", help="ua1 or ua2")

    p = sub.add_parser("rmatrix", parents=[common], help="Yang-Baxter and intertwining checks")
    p.add_argument("kind", help="ua1 or ua2")

    p = sub.add_parser("rep", parents=[common], help="dump truncated representation matrices")
    p.add_argument("kind", help="classical, ua1 or ua2")
    p.add_argument("--basis", choices=("monomial", "number"), default="monomial")

    p = sub.add_parser("eigenstate", parents=[common], help="power-series eigenfunction")
    p.add_argument("kind", help="classical, ua1 or ua2")
    p.add_argument("--beta", nargs="*", metavar="bI=VALUE", help="coefficients b1..b5 (default 0)")
    p.add_argument("--lam", default="0", help="eigenvalue")
    p.add_argument("--c0", default="1")
    p.add_argument("--c1", default="0")
    return parser


def _render(payload, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.float and args.command not in ("eigenstate", "rep"):
        print("error: --float is only supported by eigenstate and rep", file=sys.stderr)
        return EXIT_INPUT
    try:
        payload, rows, code = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DomainError, SingularPointError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = _render(payload, rows, args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
