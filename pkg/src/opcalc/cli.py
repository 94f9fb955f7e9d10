"""Command-line front end.

Subcommands: ``family`` (build a family, emit rows or operator matrices),
``ops`` (the generic conjugate operators of a family matrix), ``decompose``
(differential-operator expansion of a matrix read from JSON), ``check``
(identity suites; the exit code doubles as a CI gate) and ``eval`` (exact
evaluation of one family polynomial).

Exit codes: 0 success / all identities pass, 1 an identity check failed,
2 usage or input errors.  All output is deterministic for fixed arguments;
randomized suites draw from --seed (default 0).  The environment variable
OPCALC_ORDER overrides the built-in default truncation order of 32.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import checks
from . import diffop as dop
from . import families as fam
from . import matrix as mat
from . import monomial as mono
from . import series as ser
from .coeff import (
    Poly,
    QQ,
    format_coeff,
    format_poly,
    param_ring,
    substitute_poly,
)
from .series import CFactorial, PowerSeries

DEFAULT_ORDER = 32

FAMILY_NAMES = (
    "appell",
    "appell-ortho",
    "binomial",
    "sheffer",
    "ortho7",
    "ward",
    "laguerre-gen",
)

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")
_FORM_WORDS = {"exp", "exp_poly", "k", "k2", "poly", "q"}


class UsageError(Exception):
    pass


def _default_order():
    raw = os.environ.get("OPCALC_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    try:
        order = int(raw)
    except ValueError as exc:
        raise UsageError(f"OPCALC_ORDER must be an integer, got {raw!r}") from exc
    return order


def _scan_symbols(values):
    """Bare identifiers appearing in parameter values, in first-seen order."""
    seen = []
    for value in values:
        if value is None:
            continue
        for token in re.split(r"[,:]", str(value)):
            token = token.strip()
            if token and _IDENT.match(token) and token not in _FORM_WORDS:
                if token not in seen:
                    seen.append(token)
    return seen


def _resolve_ring(args, scan_fields):
    if getattr(args, "ring", None):
        spec = args.ring
        if spec == "rational":
            return QQ
        if spec.startswith("params:"):
            names = [s.strip() for s in spec[len("params:"):].split(",") if s.strip()]
            if not names:
                raise UsageError("params ring needs at least one name")
            return param_ring(*names)
        raise UsageError(f"unknown ring {spec!r}; use rational or params:<names>")
    symbols = _scan_symbols(getattr(args, field, None) for field in scan_fields)
    return param_ring(*symbols) if symbols else QQ


def _scalar(text, ring):
    text = str(text).strip()
    try:
        return ring.coerce(Fraction(text))
    except ValueError:
        pass
    if _IDENT.match(text):
        try:
            return ring.coerce(text)
        except Exception as exc:
            raise UsageError(f"unknown parameter {text!r} for ring {ring!r}") from exc
    raise UsageError(f"cannot parse scalar {text!r}")


def _scalar_list(text, ring):
    return [_scalar(part, ring) for part in str(text).split(",") if part.strip()]


def _parse_series(text, order, ring, convention, cfact=None):
    """A series literal: a coefficient list in the flag's convention, or a
    named form ("exp", "exp_poly:c1,c2,...") giving the function directly."""
    text = str(text).strip()
    if text == "exp":
        return ser.ps_exp(PowerSeries.x(ring, order))
    if text.startswith("exp_poly:"):
        cs = _scalar_list(text[len("exp_poly:"):], ring)
        exponent = Poly(ring, [ring.zero] + cs)
        return ser.ps_exp(PowerSeries.from_poly(exponent, order))
    coeffs = _scalar_list(text, ring)
    if convention == "egf":
        return PowerSeries.from_egf(ring, coeffs, order)
    if convention == "cegf":
        return PowerSeries.from_cegf(ring, coeffs, cfact, order)
    return PowerSeries.from_coeffs(ring, coeffs, order)


def _parse_cfactorial(text, ring):
    text = str(text).strip()
    if text in ("k", "integers"):
        return CFactorial.integers(ring)
    if text == "k2":
        return CFactorial.squares(ring)
    if text.startswith("poly:"):
        return CFactorial.from_poly(_scalar_list(text[len("poly:"):], ring), ring)
    if text.startswith("q:"):
        return CFactorial.q_numbers(_scalar(text[len("q:"):], ring), ring)
    raise UsageError(f"unknown factorial sequence {text!r}; use k, k2, poly:..., q:<q>")


class FamilyBundle:
    """A built family plus everything the emitters need."""

    def __init__(self, name, A, M, P, L, up, down, relation):
        self.name = name
        self.A = A
        self.M = M
        self.P = P
        self.L = L
        self.up = up          # the raising source (X or Xc)
        self.down = down      # the lowering source (D or Dc)
        self.relation = relation  # label for the recurrence emitter


def _require(args, family, flags):
    for flag in flags:
        if getattr(args, flag.replace("-", "_"), None) is None:
            raise UsageError(f"family {family} needs --{flag}")


def build_family(args):
    name = args.family
    order = args.order
    if name == "appell":
        _require(args, name, ["f-egf"])
        ring = _resolve_ring(args, ["f_egf"])
        f = _parse_series(args.f_egf, order + 2, ring, "egf")
        spec = fam.AppellSpec(f, order)
        X = mat.basis_matrix("X", order, ring)
        D = mat.basis_matrix("D", order, ring)
        return FamilyBundle(name, fam.appell_matrix(spec), fam.appell_M(spec),
                            D, fam.appell_L(spec), X, D, "t")
    if name == "appell-ortho":
        _require(args, name, ["f0", "f1", "f2"])
        ring = _resolve_ring(args, ["f0", "f1", "f2"])
        f0, f1, f2 = (_scalar(args.f0, ring), _scalar(args.f1, ring), _scalar(args.f2, ring))
        A, L = fam.appell_orthogonal(f0, f1, f2, order, ring)
        X = mat.basis_matrix("X", order, ring)
        D = mat.basis_matrix("D", order, ring)
        M = mat.sub(mat.scale(2, X), L)
        return FamilyBundle(name, A, M, D, L, X, D, "t")
    if name == "binomial":
        _require(args, name, ["f-egf"])
        ring = _resolve_ring(args, ["f_egf"])
        f = _parse_series(args.f_egf, order + 2, ring, "egf")
        B, M, P = fam.binomial_type(fam.BinomialSpec(f, order))
        X = mat.basis_matrix("X", order, ring)
        D = mat.basis_matrix("D", order, ring)
        return FamilyBundle(name, B, M, P, None, X, D, "t")
    if name == "sheffer":
        _require(args, name, ["g-egf", "f-egf"])
        ring = _resolve_ring(args, ["g_egf", "f_egf"])
        g = _parse_series(args.g_egf, order + 2, ring, "egf")
        f = _parse_series(args.f_egf, order + 2, ring, "egf")
        S, M, P = fam.sheffer(fam.ShefferSpec(g, f, order))
        X = mat.basis_matrix("X", order, ring)
        D = mat.basis_matrix("D", order, ring)
        return FamilyBundle(name, S, M, P, None, X, D, "t")
    if name == "ortho7":
        _require(args, name, ["f0", "f1", "f2", "g0", "g1"])
        ring = _resolve_ring(args, ["f0", "f1", "f2", "g0", "g1"])
        spec = fam.OrthoSpec(
            _scalar(args.f0, ring), _scalar(args.f1, ring), _scalar(args.f2, ring),
            _scalar(args.g0, ring), _scalar(args.g1, ring), order, ring,
        )
        A, L, M, P = fam.ortho_solve(spec)
        X = mat.basis_matrix("X", order, ring)
        D = mat.basis_matrix("D", order, ring)
        return FamilyBundle(name, A, M, P, L, X, D, "t")
    if name == "ward":
        _require(args, name, ["c"])
        if args.g is None and args.g_cegf is None:
            raise UsageError("family ward needs --g or --g-cegf")
        ring = _resolve_ring(args, ["c", "g", "g_cegf"])
        c = _parse_cfactorial(args.c, ring)
        if args.g is not None:
            g = _parse_series(args.g, order + 1, ring, "ordinary")
        else:
            g = _parse_series(args.g_cegf, order + 1, ring, "cegf", cfact=c)
        A, M, P, L = fam.ward_family(fam.WardSpec(c, g, order))
        Dc, Xc = fam.ward_basis(c, order)
        return FamilyBundle(name, A, M, P, L, Xc, Dc, "Jc")
    if name == "laguerre-gen":
        _require(args, name, ["a", "y"])
        ring = _resolve_ring(args, ["a", "y"])
        A, L, M, P = fam.laguerre_general(_scalar(args.a, ring), _scalar(args.y, ring), order, ring)
        X = mat.basis_matrix("X", order, ring)
        D = mat.basis_matrix("D", order, ring)
        return FamilyBundle(name, A, L=L, M=M, P=P, up=X, down=D, relation="t")
    raise UsageError(f"unknown family {name!r}; choose from {FAMILY_NAMES}")


def _matrix_table(A):
    rendered = [[format_coeff(x) for x in row] for row in A.rows]
    widths = {}
    for row in rendered:
        for k, cell in enumerate(row):
            widths[k] = max(widths.get(k, 0), len(cell))
    lines = []
    for row in rendered:
        cells = [cell.rjust(widths[k]) for k, cell in enumerate(row)]
        lines.append("[" + ", ".join(cells) + "]")
    return "\n".join(lines)


def _emit_matrix(A, fmt, out):
    if fmt == "json":
        out.write(json.dumps(mat.matrix_to_json(A), indent=2, sort_keys=True) + "\n")
    else:
        out.write(_matrix_table(A) + "\n")


def _emit_rows(A, fmt, out):
    if fmt == "json":
        _emit_matrix(A, fmt, out)
        return
    for k in range(A.valid_rows):
        out.write(f"u_{k} = {format_poly(mat.row_poly(A, k))}\n")


def _emit_recurrence(bundle, out):
    L = bundle.L
    if L is None:
        Ainv = mat.invert(bundle.A)
        L = mat.mul(mat.mul(bundle.A, bundle.up), Ainv)
    lhs = "t*u_{k}" if bundle.relation == "t" else "Jc(u_{k})"
    for k in range(L.valid_rows):
        terms = []
        for j in range(len(L.rows[k]) - 1, -1, -1):
            c = L.entry(k, j)
            if not L.ring.is_zero(c):
                text = format_coeff(c)
                coef = f"u_{j}" if text == "1" else f"({text})*u_{j}"
                terms.append(coef)
        rhs = " + ".join(terms) if terms else "0"
        out.write(f"{lhs.format(k=k)} = {rhs}\n")


def cmd_family(args, out):
    bundle = build_family(args)
    emit = args.emit
    if emit == "rows":
        _emit_rows(bundle.A, args.format, out)
    elif emit in ("M", "P", "L"):
        M = getattr(bundle, emit)
        if M is None:
            Ainv = mat.invert(bundle.A)
            M = mat.mul(mat.mul(bundle.A, bundle.up), Ainv)
        _emit_matrix(M, args.format, out)
    elif emit == "recurrence":
        _emit_recurrence(bundle, out)
    else:
        raise UsageError(f"unknown emit {emit!r}; use rows, M, P, L or recurrence")
    return 0


def cmd_ops(args, out):
    bundle = build_family(args)
    pair = mono.monomiality_pair(bundle.A)
    if args.emit not in ("M", "P", "L", "Q"):
        raise UsageError("ops emits one of M, P, L, Q")
    _emit_matrix(getattr(pair, args.emit), args.format, out)
    return 0


def cmd_decompose(args, out):
    try:
        with open(args.input) as fh:
            obj = json.load(fh)
        A = mat.matrix_from_json(obj)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read matrix from {args.input}: {exc}") from exc
    try:
        rep = dop.decompose(A)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out.write(json.dumps(dop.rep_to_json(rep), indent=2, sort_keys=True) + "\n")
    return 0


def cmd_check(args, out):
    kwargs = {}
    if args.suite == "ortho7":
        ring = QQ
        for key in ("f0", "f1", "f2", "g0", "g1"):
            raw = getattr(args, key, None)
            if raw is not None:
                kwargs[key] = _scalar(raw, ring)
    try:
        reports = checks.check_suite(args.suite, order=args.order, seed=args.seed, **kwargs)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    failed = 0
    for report in reports:
        out.write(checks.format_report(report) + "\n")
        if not report.passed:
            failed += 1
    out.write(f"{len(reports) - failed}/{len(reports)} checks passed\n")
    return 1 if failed else 0


def cmd_eval(args, out):
    bundle = build_family(args)
    if not 0 <= args.k < bundle.A.valid_rows:
        raise UsageError(f"k must be in [0, {bundle.A.valid_rows})")
    p = mat.row_poly(bundle.A, args.k)
    if args.at:
        assignment = {}
        for piece in args.at.split(","):
            if "=" not in piece:
                raise UsageError(f"bad assignment {piece!r}; use name=value")
            key, _, value = piece.partition("=")
            assignment[key.strip()] = Fraction(value.strip())
        p = substitute_poly(p, assignment)
    elif bundle.A.ring != QQ:
        raise UsageError("family has parameters; supply --at name=value,...")
    t = Fraction(args.t)
    out.write(f"{p(t)}\n")
    return 0


def _add_family_flags(parser, with_emit=True):
    parser.add_argument("--f-egf", dest="f_egf", help="series literal, exponential-coefficient convention")
    parser.add_argument("--g-egf", dest="g_egf", help="series literal, exponential-coefficient convention")
    parser.add_argument("--g", help="series literal for the Ward family (ordinary function form)")
    parser.add_argument("--g-cegf", dest="g_cegf", help="series literal, factorial-sequence convention")
    parser.add_argument("--c", help="factorial sequence: k, k2, poly:a1,a2,..., q:<q>")
    parser.add_argument("--f0")
    parser.add_argument("--f1")
    parser.add_argument("--f2")
    parser.add_argument("--g0")
    parser.add_argument("--g1")
    parser.add_argument("--a")
    parser.add_argument("--y")
    parser.add_argument("--ring", help="rational or params:<names> (default: inferred)")
    parser.add_argument("--order", type=int, default=None)
    if with_emit:
        parser.add_argument("--format", choices=("json", "table"), default="table")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="opcalc",
        description="Exact operational calculus for polynomial sequences.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_family = subs.add_parser("family", help="build a family and emit rows or operators")
    p_family.add_argument("family", choices=FAMILY_NAMES)
    _add_family_flags(p_family)
    p_family.add_argument("--emit", default="rows",
                          choices=("rows", "M", "P", "L", "recurrence"))

    p_ops = subs.add_parser("ops", help="generic conjugate operators of a family matrix")
    p_ops.add_argument("--family", required=True, choices=FAMILY_NAMES)
    _add_family_flags(p_ops)
    p_ops.add_argument("--emit", required=True, choices=("M", "P", "L", "Q"))

    p_dec = subs.add_parser("decompose", help="differential-operator expansion of a JSON matrix")
    p_dec.add_argument("--input", required=True)

    p_check = subs.add_parser("check", help="run an identity suite")
    p_check.add_argument("suite", choices=sorted(checks.SUITES) + ["all"])
    p_check.add_argument("--order", type=int, default=None)
    p_check.add_argument("--seed", type=int, default=0)
    for key in ("f0", "f1", "f2", "g0", "g1"):
        p_check.add_argument(f"--{key}")

    p_eval = subs.add_parser("eval", help="exact evaluation of one family polynomial")
    p_eval.add_argument("family", choices=FAMILY_NAMES)
    _add_family_flags(p_eval, with_emit=False)
    p_eval.add_argument("--k", type=int, required=True)
    p_eval.add_argument("--t", required=True)
    p_eval.add_argument("--at", help="parameter assignment name=value,name=value")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "order", None) is None and hasattr(args, "order"):
        args.order = _default_order()
    if getattr(args, "order", None) is not None and args.order < 2:
        print("error: order must be at least 2", file=sys.stderr)
        return 2
    out = sys.stdout
    try:
        if args.command == "family":
            return cmd_family(args, out)
        if args.command == "ops":
            return cmd_ops(args, out)
        if args.command == "decompose":
            return cmd_decompose(args, out)
        if args.command == "check":
            return cmd_check(args, out)
        if args.command == "eval":
            return cmd_eval(args, out)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (fam.DegenerateSpectrumError, mat.NotInGroupError, mat.TruncationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
