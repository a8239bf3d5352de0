"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import constants, cones, heights, picard, tables
from .constants import TangentType, format_value

COLUMNS = ("L", "E1", "E2", "E3", "E4", "E5", "E6")
TANGENT_FLAGS = {t.value: t for t in TangentType}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


# ---------------------------------------------------------------------------
# output

def _emit_rows(fmt: str, out, header: Sequence[str], rows: Sequence[Sequence], payload) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    elif fmt == "tsv":
        out.write("\t".join(header) + "\n")
        for r in rows:
            out.write("\t".join(str(x) for x in r) + "\n")
    else:
        cells = [list(map(str, header))] + [[str(x) for x in r] for r in rows]
        widths = [max(len(row[k]) for row in cells) for k in range(len(header))]
        for row in cells:
            out.write("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def _emit_classes(fmt: str, out, named: Sequence[tuple[str, picard.DivisorClass]]) -> None:
    rows = [(i, name, *c.coeffs) for i, (name, c) in enumerate(named, 1)]
    payload = [{"id": i, "name": name, "class": list(c.coeffs)}
               for i, (name, c) in enumerate(named, 1)]
    _emit_rows(fmt, out, ("#", "name") + COLUMNS, rows, payload)


def _emit_rays(fmt: str, out, rays: Sequence[picard.DivisorClass]) -> None:
    rows = [(i, *r.coeffs) for i, r in enumerate(rays, 1)]
    payload = {"count": len(rays), "rays": [list(r.coeffs) for r in rays]}
    _emit_rows(fmt, out, ("#",) + COLUMNS, rows, payload)


def _emit_constant(fmt: str, out, kind: str, d: picard.DivisorClass,
                   result: constants.ConstantResult, extra: dict | None = None) -> None:
    labels = [c.label for c in result.certificates]
    payload = {"quantity": kind, "class": list(d.coeffs), "value": format_value(result.value),
               "certificates": labels}
    payload.update(extra or {})
    rows = [(k, " ".join(map(str, v)) if isinstance(v, list) else v) for k, v in payload.items()]
    _emit_rows(fmt, out, ("field", "value"), rows, payload)


# ---------------------------------------------------------------------------
# commands

def _cmd_lines(args, out) -> int:
    _emit_classes(args.format, out, [(str(n), c) for n, c in picard.NAMED_LINES])
    return 0


def _cmd_pencils(args, out) -> int:
    _emit_classes(args.format, out, [(str(n), c) for n, c in picard.NAMED_PENCILS])
    return 0


def _cmd_nefcone(args, out) -> int:
    _emit_rays(args.format, out, cones.nef_cone().rays)
    return 0


def _cmd_subcone(args, out) -> int:
    if args.hyperplane:
        cone = cones.subcone("hyperplane")
    else:
        c = picard.standard_class(args.pencil)
        if c not in picard.pencils27():
            raise UsageError(f"{args.pencil} is not one of the 27 conic pencils")
        cone = cones.subcone(c)
    _emit_rays(args.format, out, cone.rays)
    return 0


def _read_class(tokens) -> picard.DivisorClass:
    d = picard.parse_class(tokens)
    if not picard.is_nef(d):
        raise UsageError(f"class {tuple(d.coeffs)} is not nef")
    return d


def _cmd_seshadri(args, out) -> int:
    d = _read_class(args.coeffs)
    res = constants.seshadri(d)
    extra = None
    if args.oracle:
        o = constants.seshadri_oracle(d)
        extra = {"oracle": format_value(o), "agrees": o == res.value}
    _emit_constant(args.format, out, "seshadri", d, res, extra)
    if extra is not None and not extra["agrees"]:
        return 2
    return 0


def _cmd_alpha(args, out) -> int:
    d = _read_class(args.coeffs)
    t = TANGENT_FLAGS[args.tangent]
    _emit_constant(args.format, out, "alpha", d, constants.alpha(d, t), {"tangent": t.value})
    return 0


def _parse_branch(text: str) -> constants.BranchDatum:
    try:
        m, r = (int(x) for x in text.split(","))
        return constants.BranchDatum(m, r)
    except ValueError as exc:
        raise UsageError(f"bad branch {text!r}: expected m,r with m >= 1 and r in 0,1,2") from exc


def _cmd_curve_alpha(args, out) -> int:
    branches = [_parse_branch(b) for b in args.branch]
    if args.degree < 1:
        raise UsageError("--degree must be positive")
    value = constants.alpha_rational_curve(args.degree, branches)
    payload = {"degree": args.degree, "branches": [[b.m, b.r] for b in branches],
               "alpha": format_value(value)}
    rows = [("degree", args.degree),
            ("branches", " ".join(f"{b.m},{b.r}" for b in branches)),
            ("alpha", format_value(value))]
    _emit_rows(args.format, out, ("field", "value"), rows, payload)
    return 0


def _report_payload(report: tables.VerificationReport) -> dict:
    return {
        "name": report.name,
        "pass": report.passed,
        "rows": len(report.verdicts),
        "failed_rows": [v.index for v in report.failures()],
        "missing": [list(r.coeffs) for r in report.missing],
        "extra": [list(r.coeffs) for r in report.extra],
    }


def _cmd_verify(args, out) -> int:
    reports = []
    if args.what in ("tables", "all"):
        reports += [tables.verify_table(t) for t in (1, 2, 3)]
    if args.what in ("reasons", "all"):
        reports.append(tables.verify_reasons())
    payload = [_report_payload(r) for r in reports]
    rows = [(p["name"], "PASS" if p["pass"] else "FAIL", p["rows"],
             len(p["failed_rows"]), len(p["missing"]), len(p["extra"])) for p in payload]
    _emit_rows(args.format, out, ("check", "result", "rows", "failed", "missing", "extra"),
               rows, payload)
    return 0 if all(r.passed for r in reports) else 2


def _cmd_estimate(args, out) -> int:
    try:
        spec = heights.SequenceSpec.parse(args.kind, args.length, args.schedule)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if spec.kind == "quadric" and args.kind.count(",") == 1:
        best, per = heights.estimate_split_quadric(spec.a, spec.b, spec.length, spec.schedule)
        payload = {"kind": args.kind, "length": spec.length, "schedule": spec.schedule,
                   "estimate": round(best, 6),
                   "sequences": {k: _estimate_payload(e) for k, e in per.items()}}
        rows = [("estimate", round(best, 6))] + [
            (f"{k}.estimate", round(e.estimate, 6)) for k, e in per.items()]
        if args.csv:
            seq = heights.generate(spec)
            heights.write_csv(args.csv, seq, per[spec.ruling])
    else:
        seq = heights.generate(spec)
        est = heights.estimate_sequence(seq)
        payload = {"kind": args.kind, "length": spec.length, "schedule": spec.schedule,
                   **_estimate_payload(est)}
        rows = [(k, v) for k, v in payload.items()]
        if args.csv:
            heights.write_csv(args.csv, seq, est)
    _emit_rows(args.format, out, ("field", "value"), rows, payload)
    return 0


def _estimate_payload(e: heights.AlphaEstimate) -> dict:
    return {"estimate": round(e.estimate, 6), "tail_start": e.tail_start + 1,
            "tail_min": round(e.tail_min, 6), "tail_max": round(e.tail_max, 6),
            "spread": round(e.spread, 6), "distances_decreasing": e.distances_decreasing}


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cubicsurf", description="Seshadri and approximation constants on a smooth cubic surface.")
    p.add_argument("--format", choices=("json", "tsv", "table"), default="table")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    sub.add_parser("lines", help="the 27 line classes").set_defaults(func=_cmd_lines)
    sub.add_parser("pencils", help="the 27 conic pencil classes").set_defaults(func=_cmd_pencils)
    sub.add_parser("nefcone", help="extreme rays of the nef cone").set_defaults(func=_cmd_nefcone)

    s = sub.add_parser("subcone", help="extreme rays of Gamma(C) or Gamma(h)")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--pencil", help="pencil name such as L1, L23, B4")
    g.add_argument("--hyperplane", action="store_true")
    s.set_defaults(func=_cmd_subcone)

    s = sub.add_parser("seshadri", help="Seshadri constant of a nef class")
    s.add_argument("coeffs", nargs=7, type=int, metavar="N")
    s.add_argument("--oracle", action="store_true", help="also run the blow-up oracle")
    s.set_defaults(func=_cmd_seshadri)

    s = sub.add_parser("alpha", help="approximation constant of a nef class")
    s.add_argument("coeffs", nargs=7, type=int, metavar="N")
    s.add_argument("--tangent", required=True, choices=tuple(TANGENT_FLAGS))
    s.set_defaults(func=_cmd_alpha)

    s = sub.add_parser("curve-alpha", help="alpha on a singular rational curve")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--branch", action="append", required=True, metavar="M,R")
    s.set_defaults(func=_cmd_curve_alpha)

    s = sub.add_parser("verify", help="check the embedded tables")
    s.add_argument("what", choices=("tables", "reasons", "all"))
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("estimate-alpha", help="empirical approximation constant of a test sequence")
    s.add_argument("--kind", required=True,
                   help="line[:p/q] | cusp | node[:+1|-1] | quadric:a,b[,first|second|diagonal]")
    s.add_argument("--length", type=int, required=True)
    s.add_argument("--schedule", choices=heights.SCHEDULES, default="linear")
    s.add_argument("--csv", metavar="PATH")
    s.set_defaults(func=_cmd_estimate)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())
