"""Command-line front end.

Subcommands: summable, telescope, verify, factor, shift-equiv.  Exit codes:
0 for a computed decision (either way), 1 for input errors, 2 when a
construction bound was exceeded without affecting the decision.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from .ore import OrePoly
from .parsing import (ParseError, format_operator, format_poly, format_ratfunc,
                      parse_expr, parse_expr_prefactored, parse_operator, parse_poly)
from .polys import factor
from .shift_equiv import find_shift, stabilizer_lattice
from .summability import check_certificate, is_summable
from .telescoper import construct_telescoper, exists_telescoper, verify

SCHEMA = 1


@dataclass
class CliConfig:
    command: str
    construct: bool = False
    max_order: int = 6
    shift_bound: int = 3
    output: str = "text"
    pre_factored: bool = False
    axes: str = "xyz"

    def as_dict(self):
        return {"command": self.command, "construct": self.construct,
                "max_order": self.max_order, "shift_bound": self.shift_bound,
                "output": self.output, "pre_factored": self.pre_factored,
                "axes": self.axes}


def _read_arg(value: str) -> str:
    if value == "-":
        return sys.stdin.read().strip()
    return value


def _parse_input(text: str, pre_factored: bool):
    if pre_factored:
        value, hints = parse_expr_prefactored(text)
        return value, hints
    return parse_expr(text), None


def _emit(report: dict, config: CliConfig, text_lines: list) -> None:
    if config.output == "json":
        report = {"schema": SCHEMA, "config": config.as_dict(), **report}
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_summable(args) -> int:
    config = CliConfig("summable", output="json" if args.json else "text",
                       pre_factored=args.pre_factored)
    t0 = time.perf_counter()
    f, hints = _parse_input(_read_arg(args.expr), args.pre_factored)
    t1 = time.perf_counter()
    res = is_summable(f, den_hints=hints)
    t2 = time.perf_counter()
    report = {"input": format_ratfunc(f), "summable": res.summable,
              "timings": {"parse_s": t1 - t0, "decide_s": t2 - t1}}
    lines = [f"summable: {str(res.summable).lower()}"]
    if res.summable:
        g, h = res.certificate
        ok = check_certificate(f, g, h)
        report["certificate"] = {"g": format_ratfunc(g), "h": format_ratfunc(h)}
        report["verified"] = ok
        lines.append(f"g = {format_ratfunc(g)}")
        lines.append(f"h = {format_ratfunc(h)}")
        lines.append(f"verified: {str(ok).lower()}")
    if res.witness is not None:
        t, ell, p = res.witness
        report["witness"] = {"t": t, "l": ell, "p": format_ratfunc(p)}
    _emit(report, config, lines)
    return 0


def _cmd_telescope(args) -> int:
    config = CliConfig("telescope", construct=args.construct,
                       max_order=args.max_order,
                       output="json" if args.json else "text",
                       pre_factored=args.pre_factored)
    t0 = time.perf_counter()
    f, hints = _parse_input(_read_arg(args.expr), args.pre_factored)
    t1 = time.perf_counter()
    decision = exists_telescoper(f, den_hints=hints)
    t2 = time.perf_counter()
    report = {"input": format_ratfunc(f), "exists": decision.exists,
              "case": decision.case,
              "notes": [{"denominator": n.denominator, "x_offset": n.x_offset,
                         "power": n.power, "case": n.case, "exists": n.exists,
                         "detail": n.detail} for n in decision.notes],
              "timings": {"parse_s": t1 - t0, "decide_s": t2 - t1}}
    lines = [f"exists: {str(decision.exists).lower()}", f"case: {decision.case}"]
    for n in decision.notes:
        lines.append(f"  piece 1/({n.denominator})^{n.power} shifted by {n.x_offset}: "
                     f"{n.case} ({'exists' if n.exists else 'no telescoper'}; {n.detail})")
    exit_code = 0
    if args.construct and decision.exists:
        t3 = time.perf_counter()
        outcome = construct_telescoper(f, max_order=args.max_order, den_hints=hints)
        t4 = time.perf_counter()
        report["timings"]["construct_s"] = t4 - t3
        if outcome.witness is None:
            report["construction"] = outcome.reason
            lines.append(f"construction: {outcome.reason} (max order {args.max_order})")
            exit_code = 2
        else:
            L, g, h = outcome.witness
            ok = verify(L, f, g, h)
            report["witness"] = {"L": format_operator(L.coeffs),
                                 "g": format_ratfunc(g), "h": format_ratfunc(h)}
            report["verified"] = ok
            lines.append(f"L = {format_operator(L.coeffs)}")
            lines.append(f"g = {format_ratfunc(g)}")
            lines.append(f"h = {format_ratfunc(h)}")
            lines.append(f"verified: {str(ok).lower()}")
    _emit(report, config, lines)
    return exit_code


def _cmd_verify(args) -> int:
    config = CliConfig("verify", output="json" if args.json else "text")
    t0 = time.perf_counter()
    L = OrePoly(parse_operator(_read_arg(args.operator)))
    f = parse_expr(_read_arg(args.f))
    g = parse_expr(_read_arg(args.g))
    h = parse_expr(_read_arg(args.h))
    t1 = time.perf_counter()
    ok = verify(L, f, g, h)
    t2 = time.perf_counter()
    report = {"operator": format_operator(L.coeffs), "verified": ok,
              "timings": {"parse_s": t1 - t0, "verify_s": t2 - t1}}
    _emit(report, config, [f"verified: {str(ok).lower()}"])
    return 0


def _cmd_factor(args) -> int:
    config = CliConfig("factor", output="json" if args.json else "text")
    t0 = time.perf_counter()
    p = parse_poly(_read_arg(args.expr))
    fac = factor(p)
    t1 = time.perf_counter()
    report = {"input": format_poly(p),
              "content": str(fac.content),
              "factors": [{"factor": format_poly(q), "multiplicity": m}
                          for q, m in fac.factors],
              "timings": {"total_s": t1 - t0}}
    lines = [f"content: {fac.content}"]
    for q, m in fac.factors:
        lines.append(f"({format_poly(q)})^{m}" if m > 1 else f"({format_poly(q)})")
    _emit(report, config, lines)
    return 0


def _cmd_shift_equiv(args) -> int:
    config = CliConfig("shift-equiv", output="json" if args.json else "text",
                       axes=args.axes)
    axes = tuple(sorted(set(args.axes)))
    if not axes or any(a not in "xyz" for a in axes):
        raise ParseError("axes must name a subset of x, y, z", 0)
    t0 = time.perf_counter()
    p = parse_poly(_read_arg(args.p))
    if args.q is None:
        st = stabilizer_lattice(p)
        t1 = time.perf_counter()
        report = {"input": format_poly(p),
                  "stabilizer_basis": [list(v.as_tuple()) for v in st.basis],
                  "timings": {"total_s": t1 - t0}}
        lines = [f"stabilizer basis: {[v.as_tuple() for v in st.basis]}"]
        _emit(report, config, lines)
        return 0
    q = parse_poly(_read_arg(args.q))
    v = find_shift(p, q, axes=axes)
    t1 = time.perf_counter()
    report = {"p": format_poly(p), "q": format_poly(q), "axes": "".join(axes),
              "found": v is not None,
              "timings": {"total_s": t1 - t0}}
    if v is not None:
        report["shift"] = list(v.as_tuple())
        lines = [f"found: true", f"shift: {v.as_tuple()}"]
    else:
        lines = ["found: false"]
    _emit(report, config, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tritel",
        description="Exact summability and telescoper decisions for rational "
                    "functions of x, y, z (pass '-' to read an argument from stdin)")
    sub = ap.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("summable", help="decide summability in y and z")
    ps.add_argument("expr")
    ps.add_argument("--json", action="store_true")
    ps.add_argument("--pre-factored", action="store_true",
                    help="trust the explicit denominator product structure")
    ps.set_defaults(fn=_cmd_summable)

    pt = sub.add_parser("telescope", help="decide telescoper existence")
    pt.add_argument("expr")
    pt.add_argument("--construct", action="store_true",
                    help="also construct and verify a witness")
    pt.add_argument("--max-order", type=int, default=6)
    pt.add_argument("--json", action="store_true")
    pt.add_argument("--pre-factored", action="store_true")
    pt.set_defaults(fn=_cmd_telescope)

    pv = sub.add_parser("verify", help="check L(f) = delta_y(g) + delta_z(h)")
    pv.add_argument("operator")
    pv.add_argument("f")
    pv.add_argument("g")
    pv.add_argument("h")
    pv.add_argument("--json", action="store_true")
    pv.set_defaults(fn=_cmd_verify)

    pf = sub.add_parser("factor", help="factor a polynomial over Q")
    pf.add_argument("expr")
    pf.add_argument("--json", action="store_true")
    pf.set_defaults(fn=_cmd_factor)

    pe = sub.add_parser("shift-equiv",
                        help="find an integer shift mapping p to q, or the "
                             "stabilizer lattice of p alone")
    pe.add_argument("p")
    pe.add_argument("q", nargs="?", default=None)
    pe.add_argument("--axes", default="xyz",
                    help="axes the shift may use, e.g. yz")
    pe.add_argument("--json", action="store_true")
    pe.set_defaults(fn=_cmd_shift_equiv)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, ZeroDivisionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
