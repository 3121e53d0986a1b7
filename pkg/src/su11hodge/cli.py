"""Command-line front end: tables and JSON/CSV emitters for every analysis.

Twisting parameters are accepted only as exact rational strings ("3",
"-1/2"); float syntax is refused so that no sign decision ever passes
through floating point.  Exit status: 0 all checks pass, 1 a verified
property fails, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from .analysis import classify, jantzen_crossing, verify_conjecture
from .exact import beta_value, parse_rational, quadrature_integral
from .filtrations import filtration_table, hodge_level
from .forms import (
    convergence_range,
    form_diagonal,
    gR_form_diagonal,
    invariance_check,
    reference_magnitude,
)
from .modules import (
    ModuleSpec,
    Orbit,
    Parity,
    PointModule,
    PrincipalSeries,
    basis_window,
    bracket_check,
    constituents,
    theta_check,
)

USAGE_ERROR = 2
CHECK_FAILED = 1

ORACLE_TOLERANCE = 1e-8

# fixed CSV schema for form tables
FORM_TABLE_FIELDS = [
    "index_twice",
    "hodge_level",
    "u_sign",
    "ratio_num",
    "ratio_den",
    "magnitude",
    "g_sign",
    "w1",
]


class UsageError(Exception):
    pass


def rational_to_json(q: Fraction) -> Dict[str, int]:
    return {"num": q.numerator, "den": q.denominator}


def rational_from_json(obj: Dict[str, int]) -> Fraction:
    return Fraction(obj["num"], obj["den"])


def spec_to_json(spec: ModuleSpec) -> Dict[str, Any]:
    if isinstance(spec, PrincipalSeries):
        return {
            "type": "principal-series",
            "lambda": rational_to_json(spec.lam),
            "parity": spec.parity.value,
        }
    if isinstance(spec, PointModule):
        return {"type": "point", "m": spec.m, "orbit": spec.orbit.value}
    return {
        "type": "w1",
        "lambda0": rational_to_json(spec.lam0),
        "parity": spec.parity.value,
        "dim": spec.dim,
    }


def render_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render_csv(rows: List[Dict[str, Any]], fields: List[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _table(headers: List[str], rows: List[List[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _fmt_float(x: Optional[float]) -> str:
    return "" if x is None else f"{x:.10g}"


def _build_spec(args) -> ModuleSpec:
    has_ps = args.lam is not None
    has_point = getattr(args, "point_m", None) is not None
    if has_ps == has_point:
        raise UsageError("give either --lambda/--parity or --point-m/--orbit")
    if has_ps:
        if args.parity is None:
            raise UsageError("--parity is required with --lambda")
        return PrincipalSeries(args.lam, Parity(args.parity))
    if args.orbit is None:
        raise UsageError("--orbit is required with --point-m")
    orbit = Orbit.AT_ZERO if args.orbit == "0" else Orbit.AT_INFINITY
    return PointModule(args.point_m, orbit)


def _emit(args, text: str, payload: Dict[str, Any], rows: List[Dict[str, Any]],
          fields: List[str]) -> None:
    if args.output == "json":
        out = render_json(payload)
    elif args.output == "csv":
        out = render_csv(rows, fields)
    else:
        out = text
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


# ---------------------------------------------------------------------------
# subcommands

def cmd_describe(args) -> int:
    spec = _build_spec(args)
    table = filtration_table(spec, args.bound)
    parts = constituents(spec) if isinstance(spec, PrincipalSeries) else [spec]
    reducible = isinstance(spec, PrincipalSeries) and spec.reducible
    conv = convergence_range(spec) if isinstance(spec, PrincipalSeries) else None

    rows = [
        {
            "index_twice": r.vector.index.twice,
            "hodge_level": r.hodge_level,
            "w1": str(r.w1_member).lower(),
        }
        for r in table
    ]
    payload = {
        "command": "describe",
        "spec": spec_to_json(spec),
        "bound": args.bound,
        "reducible": reducible,
        "constituents": [spec_to_json(p) for p in parts],
        "convergence_range": None if conv is None else [
            rational_to_json(n.as_fraction) for n in conv
        ],
        "filtration": [
            {
                "index": rational_to_json(r.vector.index.as_fraction),
                "hodge_level": r.hodge_level,
                "w1": r.w1_member,
            }
            for r in table
        ],
    }
    lines = [f"module: {spec}", f"reducible: {'yes' if reducible else 'no'}"]
    lines.append("constituents:")
    lines.extend(f"  {p}" for p in parts)
    if conv is not None:
        lines.append("convergence range: " + (", ".join(str(n) for n in conv) or "(empty)"))
    lines.append(f"filtration (window bound {args.bound}):")
    body = _table(
        ["index", "hodge_level", "w1"],
        [[str(r.vector.index), str(r.hodge_level), "yes" if r.w1_member else "no"] for r in table],
    )
    text = "\n".join(lines) + "\n" + body
    _emit(args, text, payload, rows, ["index_twice", "hodge_level", "w1"])
    return 0


def cmd_form_table(args) -> int:
    spec = _build_spec(args)
    if isinstance(spec, PrincipalSeries) and spec.reducible:
        raise UsageError(
            f"lambda={spec.lam} is a reduction point; use classify/describe, "
            "or evaluate the constituents"
        )
    table_rows = []
    json_rows = []
    csv_rows = []
    for v in basis_window(spec, args.bound):
        u = form_diagonal(v, spec)
        g = gR_form_diagonal(v, spec)
        p = hodge_level(v, spec)
        w1 = True  # irreducible: weight filtration collapses
        ratio = u.ratio_to_reference
        table_rows.append([
            str(v.index), str(p), u.sign.value, str(ratio), _fmt_float(u.magnitude),
            g.sign.value, "yes" if w1 else "no",
        ])
        json_rows.append({
            "index": rational_to_json(v.index.as_fraction),
            "hodge_level": p,
            "u_sign": u.sign.value,
            "ratio": rational_to_json(ratio),
            "magnitude": u.magnitude,
            "g_sign": g.sign.value,
            "w1": w1,
        })
        csv_rows.append({
            "index_twice": v.index.twice,
            "hodge_level": p,
            "u_sign": u.sign.value,
            "ratio_num": ratio.numerator,
            "ratio_den": ratio.denominator,
            "magnitude": _fmt_float(u.magnitude),
            "g_sign": g.sign.value,
            "w1": str(w1).lower(),
        })
    ref_mag = reference_magnitude(spec)
    payload = {
        "command": "form-table",
        "spec": spec_to_json(spec),
        "bound": args.bound,
        "reference_magnitude": ref_mag,
        "rows": json_rows,
    }
    text = f"module: {spec}\nreference magnitude: {_fmt_float(ref_mag)}\n" + _table(
        ["index", "p", "u_sign", "ratio", "magnitude", "g_sign", "w1"], table_rows
    )
    _emit(args, text, payload, csv_rows, FORM_TABLE_FIELDS)
    return 0


def cmd_verify(args) -> int:
    spec = _build_spec(args)
    if isinstance(spec, PrincipalSeries) and spec.reducible:
        raise UsageError(
            f"lambda={spec.lam} is a reduction point; verify the constituents instead"
        )
    report = verify_conjecture(spec, args.bound)
    brackets = bracket_check(spec, args.bound)
    thetas = theta_check(spec, args.bound)
    invariance = invariance_check(spec, args.bound)
    all_ok = report.verdict and brackets.ok and thetas.ok and invariance.ok

    csv_rows = [
        {
            "index_twice": r.vector.index.twice,
            "hodge_level": r.hodge_level,
            "codim": r.codim,
            "sign": r.sign.value,
            "expected": r.expected.value,
            "ok": str(r.ok).lower(),
        }
        for r in report.records
    ]
    payload = {
        "command": "verify",
        "spec": spec_to_json(spec),
        "bound": args.bound,
        "verdict": "pass" if report.verdict else "fail",
        "bracket_ok": brackets.ok,
        "theta_ok": thetas.ok,
        "invariance_ok": invariance.ok,
        "records": [
            {
                "index": rational_to_json(r.vector.index.as_fraction),
                "hodge_level": r.hodge_level,
                "codim": r.codim,
                "sign": r.sign.value,
                "expected": r.expected.value,
                "ok": r.ok,
            }
            for r in report.records
        ],
    }
    body = _table(
        ["index", "p", "codim", "sign", "expected", "ok"],
        [
            [str(r.vector.index), str(r.hodge_level), str(r.codim), r.sign.value,
             r.expected.value, "yes" if r.ok else "NO"]
            for r in report.records
        ],
    )
    text = (
        f"module: {spec}\n"
        f"sign conjecture: {'pass' if report.verdict else 'FAIL'}\n"
        f"bracket relations: {'pass' if brackets.ok else 'FAIL'}\n"
        f"theta intertwining: {'pass' if thetas.ok else 'FAIL'}\n"
        f"form invariance: {'pass' if invariance.ok else 'FAIL'}\n" + body
    )
    _emit(args, text, payload, csv_rows,
          ["index_twice", "hodge_level", "codim", "sign", "expected", "ok"])
    return 0 if all_ok else CHECK_FAILED


def cmd_jantzen(args) -> int:
    if args.lam is None or args.parity is None:
        raise UsageError("jantzen requires --lambda and --parity")
    report = jantzen_crossing(args.lam, Parity(args.parity), args.epsilon, args.bound)
    csv_rows = [
        {
            "index_twice": r.vector.index.twice,
            "sign_below": r.sign_below.value,
            "sign_above": r.sign_above.value,
            "preserved": str(r.preserved).lower(),
            "w1": str(r.w1).lower(),
        }
        for r in report.records
    ]
    payload = {
        "command": "jantzen",
        "lambda0": rational_to_json(report.lambda0),
        "parity": report.parity.value,
        "epsilon": rational_to_json(report.epsilon),
        "bound": report.bound,
        "verdict": "pass" if report.verdict else "fail",
        "records": [
            {
                "index": rational_to_json(r.vector.index.as_fraction),
                "sign_below": r.sign_below.value,
                "sign_above": r.sign_above.value,
                "preserved": r.preserved,
                "w1": r.w1,
            }
            for r in report.records
        ],
    }
    body = _table(
        ["index", "sign@-eps", "sign@+eps", "preserved", "w1"],
        [
            [str(r.vector.index), r.sign_below.value, r.sign_above.value,
             "yes" if r.preserved else "no", "yes" if r.w1 else "no"]
            for r in report.records
        ],
    )
    text = (
        f"reduction point: lambda0={report.lambda0} ({report.parity.value}), "
        f"epsilon={report.epsilon}\n"
        f"sign preserved exactly on W1: {'pass' if report.verdict else 'FAIL'}\n" + body
    )
    _emit(args, text, payload, csv_rows,
          ["index_twice", "sign_below", "sign_above", "preserved", "w1"])
    return 0 if report.verdict else CHECK_FAILED


def cmd_classify(args) -> int:
    if args.lam is None or args.parity is None:
        raise UsageError("classify requires --lambda and --parity")
    report = classify(args.lam, Parity(args.parity))
    csv_rows = [
        {
            "constituent": str(e.constituent),
            "hermitian": str(e.hermitian).lower(),
            "definiteness": e.definiteness.value,
            "unitary": str(e.unitary).lower(),
        }
        for e in report.entries
    ]
    payload = {
        "command": "classify",
        "lambda": rational_to_json(report.lam),
        "parity": report.parity.value,
        "entries": [
            {
                "constituent": spec_to_json(e.constituent),
                "hermitian": e.hermitian,
                "definiteness": e.definiteness.value,
                "unitary": e.unitary,
            }
            for e in report.entries
        ],
    }
    body = _table(
        ["constituent", "hermitian", "definiteness", "unitary"],
        [
            [str(e.constituent), "yes" if e.hermitian else "no",
             e.definiteness.value, "yes" if e.unitary else "no"]
            for e in report.entries
        ],
    )
    text = f"lambda={report.lam}, parity={report.parity.value}\n" + body
    _emit(args, text, payload, csv_rows,
          ["constituent", "hermitian", "definiteness", "unitary"])
    return 0


ORACLE_GRID: List[Tuple[Fraction, Fraction]] = [
    (s, s + d)
    for s in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(3, 2), Fraction(13, 4))
    for d in (Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(9, 4), Fraction(4))
]


def cmd_oracle(args) -> int:
    rows = []
    worst = 0.0
    worst_ibp = 0.0
    for s, t in ORACLE_GRID:
        q = quadrature_integral(s, t)
        b = beta_value(s, t - s)
        rel = abs(q - b) / b
        ibp = quadrature_integral(s + 1, t + 1)
        ibp_rel = abs(float(s) * q - float(t) * ibp) / (float(s) * q)
        worst = max(worst, rel)
        worst_ibp = max(worst_ibp, ibp_rel)
        rows.append((s, t, q, b, rel, ibp_rel))
    ok = worst <= ORACLE_TOLERANCE and worst_ibp <= ORACLE_TOLERANCE
    csv_rows = [
        {
            "s_num": s.numerator, "s_den": s.denominator,
            "t_num": t.numerator, "t_den": t.denominator,
            "quadrature": _fmt_float(q), "beta": _fmt_float(b),
            "rel_err": f"{rel:.3e}", "ibp_rel_err": f"{ibp:.3e}",
        }
        for s, t, q, b, rel, ibp in rows
    ]
    payload = {
        "command": "oracle",
        "tolerance": ORACLE_TOLERANCE,
        "max_rel_err": worst,
        "max_ibp_rel_err": worst_ibp,
        "pass": ok,
        "grid": [
            {
                "s": rational_to_json(s),
                "t": rational_to_json(t),
                "quadrature": q,
                "beta": b,
                "rel_err": rel,
                "ibp_rel_err": ibp,
            }
            for s, t, q, b, rel, ibp in rows
        ],
    }
    body = _table(
        ["s", "t", "quadrature", "beta", "rel_err", "ibp_rel_err"],
        [
            [str(s), str(t), _fmt_float(q), _fmt_float(b), f"{rel:.3e}", f"{ibp:.3e}"]
            for s, t, q, b, rel, ibp in rows
        ],
    )
    text = (
        f"quadrature vs exact Beta on {len(rows)} grid points\n"
        f"max relative error: {worst:.3e} (tolerance {ORACLE_TOLERANCE:.0e})\n"
        f"max integration-by-parts error: {worst_ibp:.3e}\n"
        f"verdict: {'pass' if ok else 'FAIL'}\n" + body
    )
    _emit(args, text, payload, csv_rows,
          ["s_num", "s_den", "t_num", "t_den", "quadrature", "beta",
           "rel_err", "ibp_rel_err"])
    return 0 if ok else CHECK_FAILED


# ---------------------------------------------------------------------------
# argument parsing

def _add_spec_flags(sub, point: bool = True):
    sub.add_argument("--lambda", dest="lam", type=parse_rational, default=None,
                     metavar="P/Q", help="twist parameter, exact rational (no floats)")
    sub.add_argument("--parity", choices=["even", "odd"], default=None)
    if point:
        sub.add_argument("--point-m", dest="point_m", type=int, default=None,
                         metavar="M", help="point-module twist (integer >= 0)")
        sub.add_argument("--orbit", choices=["0", "inf"], default=None)


def _add_common_flags(sub, default_bound: int = 8):
    sub.add_argument("--bound", type=int, default=default_bound,
                     help=f"window bound (default {default_bound})")
    sub.add_argument("--output", choices=["text", "json", "csv"], default="text")
    sub.add_argument("--out", default=None, metavar="PATH",
                     help="write output to a file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su11hodge",
        description="Exact invariant-form and Hodge-filtration computations "
                    "for SU(1,1) Harish-Chandra modules.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("describe", help="reducibility, constituents, filtrations")
    _add_spec_flags(p)
    _add_common_flags(p)
    p.set_defaults(fn=cmd_describe)

    p = subs.add_parser("form-table", help="diagonal form values per index")
    _add_spec_flags(p)
    _add_common_flags(p)
    p.set_defaults(fn=cmd_form_table)

    p = subs.add_parser("verify", help="sign conjecture plus algebraic suite")
    _add_spec_flags(p)
    _add_common_flags(p, default_bound=12)
    p.set_defaults(fn=cmd_verify)

    p = subs.add_parser("jantzen", help="sign crossing at a reduction point")
    _add_spec_flags(p, point=False)
    p.add_argument("--epsilon", type=parse_rational, default=Fraction(1, 4),
                   metavar="P/Q", help="offset from the reduction point (default 1/4)")
    _add_common_flags(p)
    p.set_defaults(fn=cmd_jantzen)

    p = subs.add_parser("classify", help="constituents with unitarity verdicts")
    _add_spec_flags(p, point=False)
    _add_common_flags(p)
    p.set_defaults(fn=cmd_classify)

    p = subs.add_parser("oracle", help="quadrature vs exact Beta comparison grid")
    _add_common_flags(p)
    p.set_defaults(fn=cmd_oracle)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; keep that contract
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
