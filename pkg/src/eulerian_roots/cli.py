"""Command-line interface: ``eulerian <command> ...``.

Exit codes: 0 computed or verified, 1 a checked property failed, 2 usage
or budget error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import replace
from fractions import Fraction
from typing import Sequence

from . import eulerian as eu
from . import groups as gr
from .geometry import SERIES_KINDS, ehrhart_data, series_identity_report
from .invseq import BudgetExceeded
from .polyx import (
    ExactPoly,
    certify_real_rooted,
    coeff_shape,
    factored_form,
    gamma_expansion,
    refine_to,
)
from .pqpoly import PQPoly
from .verify import CONJECTURES, SUITES, run_suite

SCHEMA = "eulerian/1"
EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
ROOT_WIDTH = Fraction(1, 10**6)  # reported root intervals are refined to this width


class UsageError(ValueError):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


# ---------------------------------------------------------------------------
# rendering


def _poly_text(f) -> str:
    if isinstance(f, PQPoly):
        return str(f)
    return factored_form(f) or str(f)


def _poly_json(f) -> dict:
    if isinstance(f, PQPoly):
        return {"terms": f.to_json()}
    return f.to_json()


def _table(rows: list[tuple[str, str]]) -> str:
    width = max((len(a) for a, _ in rows), default=0)
    return "\n".join(f"{a.ljust(width)}  {b}" for a, b in rows)


# ---------------------------------------------------------------------------
# commands; each returns (exit code, result payload, table rows)


def _default_stat(group: str) -> str:
    return {"S": "des", "B": "des_wreath", "D": "des_D", "wreath": "des_wreath"}[group]


def cmd_compute(a):
    if a.kind == "fmaj" or a.kind == "typeD":
        if a.n is None:
            raise UsageError(f"--kind {a.kind} needs --n")
    if a.multiset:
        poly = gr.multiset_poly(a.multiset, signed=a.signed)
        label = f"multiset {','.join(map(str, a.multiset))}" + (" signed" if a.signed else "")
        return EXIT_OK, {"poly": poly.to_json()}, [(label, _poly_text(poly))]
    if a.group:
        if a.n is None:
            raise UsageError("--group needs --n")
        stat = a.stat or _default_stat(a.group)
        poly = gr.group_poly(a.group, a.n, x=stat, q=a.q_stat, k=a.k or 1)
        out = poly if a.q_stat else poly.to_exact()
        return EXIT_OK, {"poly": _poly_json(out)}, [(f"{a.group}_{a.n} {stat}", _poly_text(out))]

    if a.kind == "typeD":
        fam = [eu.T1] if a.n == 1 else list(eu.t_refined(a.n).polys)
        name = "T"
    elif a.kind == "fmaj":
        if not a.k:
            raise UsageError("--kind fmaj needs --k")
        fam = list(eu.fmaj_refined(a.n, a.k).polys)
        name = "G"
    else:
        if not a.s:
            raise UsageError("--kind standard/pq needs --s")
        n = len(a.s) if a.n is None else a.n
        fam = list(eu.refined(a.s, n).polys if a.kind == "standard" else eu.refined_pq(a.s, n).polys)
        name = "P"
    if (a.p is not None or a.q is not None) and a.kind in ("pq", "fmaj"):
        fam = [f.specialize(a.p or 1, a.q or 1) for f in fam]
    n = a.n if a.n is not None else len(a.s)
    rows = []
    if a.refined:
        rows = [(f"{name}_{{{n},{i}}}", _poly_text(f)) for i, f in enumerate(fam)]
        result = {"family": [_poly_json(f) for f in fam]}
    else:
        total = sum(fam[1:], fam[0])
        if a.kind == "fmaj" and isinstance(total, PQPoly) and total.min_q_exponent() < 0:
            raise ArithmeticError("negative q exponent in assembled polynomial")
        rows = [(f"{name}_{n}", _poly_text(total))]
        result = {"poly": _poly_json(total)}
    return EXIT_OK, result, rows


def parse_poly_input(text: str) -> tuple[ExactPoly, tuple[int, ...] | None]:
    """Coefficient list or a named family such as ``E:1,3,5`` or ``T:3``.

    Returns the polynomial and, for s-Eulerian inputs, the sequence s.
    """
    text = text.strip()
    if ":" not in text:
        try:
            return ExactPoly.parse(text), None
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"cannot parse polynomial {text!r}: {exc}")
    head, _, body = text.partition(":")
    try:
        args = [int(v) for v in body.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"bad parameters in {text!r}")
    if not args:
        raise UsageError(f"missing parameters in {text!r}")
    if head == "E":
        return eu.e_poly(args), tuple(args)
    n = args[0]
    if head == "A":
        s = tuple(range(1, n + 1))
        return eu.e_poly(s), s
    if head == "B":
        s = eu.type_b_s(n)
        return eu.e_poly(s), s
    if head == "G":
        if len(args) != 2:
            raise UsageError("G needs n,k")
        s = eu.wreath_s(n, args[1])
        return eu.e_poly(s), s
    if head == "T":
        return eu.t_poly(n), None
    if head == "D":
        return eu.d_poly(n), None
    if head == "Btilde":
        return eu.affine_b_poly(n), None
    raise UsageError(f"unknown family {head!r}; use E, A, B, G, T, D or Btilde")


def cmd_certify(a):
    poly, s = parse_poly_input(a.input)
    rows = [("input", _poly_text(poly))]
    if a.check == "real-rooted":
        cert = certify_real_rooted(poly)
        cert = replace(cert, intervals=tuple(refine_to(poly, cert.intervals, ROOT_WIDTH)))
        rows.append(("real-rooted", str(cert.is_real_rooted)))
        rows += [(f"root {j}", f"[{iv.lo}, {iv.hi}] ~ {iv.approx():.6g} (mult {iv.multiplicity})")
                 for j, iv in enumerate(cert.intervals)]
        return (EXIT_OK if cert.is_real_rooted else EXIT_FAILED), cert.to_json(), rows
    if a.check == "interlace-chain":
        if s is None:
            raise UsageError("interlace-chain needs an s-Eulerian input (E:, A:, B: or G:)")
        ok = eu.interlace_chain(s, len(s))
        rows.append((f"E_n interlaces E_n+1, n < {len(s)}", str(ok)))
        return (EXIT_OK if ok else EXIT_FAILED), {"s": list(s), "interlaces": ok}, rows
    if a.check == "gamma":
        if not poly.is_palindromic():
            rows.append(("gamma", "not palindromic"))
            return EXIT_FAILED, {"palindromic": False, "gamma_nonnegative": False}, rows
        gv = gamma_expansion(poly)
        rows.append(("gamma", "[" + ", ".join(map(str, gv.gammas)) + "]"))
        payload = {"palindromic": True, **gv.to_json()}
        return (EXIT_OK if gv.gamma_nonnegative else EXIT_FAILED), payload, rows
    shape = coeff_shape(poly.coeffs)
    rows += [("unimodal", str(shape.unimodal)), ("log-concave", str(shape.log_concave))]
    ok = shape.unimodal and shape.log_concave
    return (EXIT_OK if ok else EXIT_FAILED), shape._asdict(), rows


def cmd_verify(a):
    results = run_suite(a.suite, a.max_n, a.max_k, a.t_max, workers=a.workers)
    failed = [r for r in results if not r.passed]
    rows = [(f"{r.name} {json.dumps(r.params, sort_keys=True)}", "pass" if r.passed else "FAIL")
            for r in results]
    rows.append(("total", f"{len(results) - len(failed)}/{len(results)} passed"))
    payload = {"cases": [r.to_json() for r in results], "passed": not failed,
               "failures": len(failed)}
    return (EXIT_FAILED if failed else EXIT_OK), payload, rows


def cmd_conjecture(a):
    report = CONJECTURES[a.name](a.n)
    if a.name == "signed-multiset":
        rows = [
            ("signed multiset descents", _poly_text(ExactPoly.from_json(report["descent_poly"]))),
            (f"ascents on I^{tuple(report['s'])}", _poly_text(ExactPoly.from_json(report["ascent_poly"]))),
            ("equal", str(report["equal"])),
        ]
    else:
        rows = [
            (f"affine D_{a.n}", _poly_text(ExactPoly.from_json(report["poly"]))),
            ("real-rooted", str(report["holds"])),
        ]
    rows.append(("note", "finite evidence only"))
    return (EXIT_OK if report["holds"] else EXIT_FAILED), report, rows


def cmd_ehrhart(a):
    data = ehrhart_data(a.s, a.t_max, a.n)
    payload = data.to_json()
    rows = [("h*", _poly_text(data.hstar))]
    rows += [(f"t={t}", f"{c}  {'ok' if c == int(e) else 'MISMATCH ' + e}")
             for t, (c, e) in enumerate(zip(data.counts, payload["series"]))]
    return (EXIT_OK if data.matches else EXIT_FAILED), payload, rows


def cmd_identity(a):
    report = series_identity_report(a.kind, a.n, a.k, a.t_max, a.parts)
    rows = [("numerator", _poly_text(ExactPoly.from_json(report["numerator"])))]
    rows += [(f"t={t}", f"{c} vs {e}") for t, (c, e) in
             enumerate(zip(report["closed_form"], report["series"]))]
    rows.append(("matches", str(report["matches"])))
    return (EXIT_OK if report["matches"] else EXIT_FAILED), report, rows


# ---------------------------------------------------------------------------
# parser


def _add_format(p):
    p.add_argument("--format", choices=("json", "table"), default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eulerian",
                                     description="s-Eulerian polynomials with exact real-root certificates")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute an Eulerian-type polynomial or refined family")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--s", type=_int_list)
    src.add_argument("--group", choices=("S", "B", "D", "wreath"))
    src.add_argument("--multiset", type=_int_list)
    p.add_argument("--signed", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--kind", choices=eu.KINDS, default="standard")
    p.add_argument("--refined", action="store_true")
    p.add_argument("--p", help="positive rational substituted for p")
    p.add_argument("--q", help="positive rational substituted for q")
    p.add_argument("--stat", choices=sorted(gr.STATISTICS), help="x statistic for --group")
    p.add_argument("--q-stat", choices=sorted(gr.STATISTICS), help="q statistic for --group")
    _add_format(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("certify", help="certify a property of a polynomial")
    p.add_argument("--input", required=True,
                   help="coefficients '1,10,4' or a family: E:1,3,5 A:4 B:3 G:3,2 T:3 D:4 Btilde:3")
    p.add_argument("--check", choices=("real-rooted", "interlace-chain", "gamma", "shape"),
                   default="real-rooted")
    _add_format(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="run a cross-check suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--t-max", type=int, default=8)
    p.add_argument("--workers", type=int)
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="gather finite evidence for a conjecture")
    p.add_argument("--name", choices=sorted(CONJECTURES), required=True)
    p.add_argument("--n", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("ehrhart", help="lattice-point counts against the h* series")
    p.add_argument("--s", type=_int_list, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--t-max", type=int, default=8)
    _add_format(p)
    p.add_argument("--json", dest="format", action="store_const", const="json")
    p.set_defaults(func=cmd_ehrhart)

    p = sub.add_parser("identity", help="closed-form point counts against a numerator series")
    p.add_argument("--kind", choices=SERIES_KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--parts", type=_int_list, help="multiplicities for macmahon")
    p.add_argument("--t-max", type=int, default=10)
    _add_format(p)
    p.set_defaults(func=cmd_identity)
    return parser


def _parameters(ns: argparse.Namespace) -> dict:
    return {k: v for k, v in sorted(vars(ns).items()) if k not in ("func", "format", "command")}


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    ns = parser.parse_args(argv)
    start = time.perf_counter()
    rows: list[tuple[str, str]] = []
    try:
        code, result, rows = ns.func(ns)
    except (UsageError, BudgetExceeded, ValueError, ArithmeticError) as exc:
        code, result = EXIT_USAGE, {"error": str(exc)}
        rows = [("error", str(exc))]
    report = {
        "schema": SCHEMA,
        "command": ns.command,
        "argv": argv,
        "parameters": _parameters(ns),
        "result": result,
        "exit_code": code,
        "wall_time": round(time.perf_counter() - start, 6),
    }
    if ns.format == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(_table(rows))
    return code


if __name__ == "__main__":
    sys.exit(main())
