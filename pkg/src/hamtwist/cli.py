"""Command-line interface.

Two commands:

  hamtwist compute {delta,antipode,counit} --variant V --elt EXPR [params]
  hamtwist verify SUITE [params] [--report FILE] [--figures DIR]

Exit codes: 0 success / all checks pass, 1 at least one check failed,
2 invalid configuration, 3 element parse error, 4 inadmissible element.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .quantize import (CHAR0, HORIZONTAL, UT, UTQ, VERTICAL, QuantizationContext)
from .report import summarize, write_jsonl
from .syntax import ParseError, detect_shape, format_tensor, format_u, parse_lie, parse_modular
from .verify import DEFAULT_SEED, SUITES, run_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2
EXIT_PARSE = 3
EXIT_INADMISSIBLE = 4

VARIANTS = {
    "char0-vertical": (VERTICAL, CHAR0),
    "char0-horizontal": (HORIZONTAL, CHAR0),
    "ut-vertical": (VERTICAL, UT),
    "ut-horizontal": (HORIZONTAL, UT),
    "utq": (VERTICAL, UTQ),
    "utq-vertical": (VERTICAL, UTQ),
    "utq-horizontal": (HORIZONTAL, UTQ),
}


class ConfigError(ValueError):
    pass


def _build_context(args, shape):
    family, setting = VARIANTS[args.variant]
    n = args.n if args.n is not None else shape["n"]
    if n != shape["n"]:
        raise ConfigError("element has rank n=%d but --n=%d was given" % (shape["n"], n))
    if setting == CHAR0:
        if shape["kind"] != "DH":
            raise ConfigError("characteristic-0 variants need DH[..] elements")
        if args.N is None:
            raise ConfigError("characteristic-0 variants need --N")
        p = None
    else:
        if shape["kind"] != "DHp":
            raise ConfigError("modular variants need DHp[..]@p elements")
        p = args.p if args.p is not None else shape["p"]
        if p != shape["p"]:
            raise ConfigError("element is mod %d but --p=%d was given" % (shape["p"], p))
    try:
        return QuantizationContext(
            family, setting, n, args.k, m=args.m, p=p,
            q=args.q if setting == UTQ else None, N=args.N)
    except ValueError as exc:
        raise ConfigError(str(exc))


def _print_tpoly(tp, fmt, render):
    if fmt == "json":
        payload = {"t^%d" % d: render(tp.coeffs[d]) for d in tp.degrees()}
        print(json.dumps(payload, sort_keys=True))
        return
    if tp.is_zero():
        print("0")
        return
    for d in tp.degrees():
        print("t^%d: %s" % (d, render(tp.coeffs[d])))


def cmd_compute(args):
    try:
        shape = detect_shape(args.elt)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    try:
        ctx = _build_context(args, shape)
    except ConfigError as exc:
        print("invalid configuration: %s" % exc, file=sys.stderr)
        return EXIT_CONFIG
    try:
        if ctx.setting == CHAR0:
            elem = parse_lie(args.elt, ctx.lie_ctx)
        else:
            elem = parse_modular(args.elt, ctx.lie_ctx)
        for idx in elem.terms:
            if not ctx.admissible(idx):
                raise KeyError(idx)
    except ParseError as exc:
        msg = str(exc)
        if "not a basis index" in msg or "not p-integral" in msg:
            print("inadmissible element: %s" % msg, file=sys.stderr)
            return EXIT_INADMISSIBLE
        print("parse error: %s" % msg, file=sys.stderr)
        return EXIT_PARSE
    except KeyError as exc:
        print("inadmissible element: index %s" % (exc.args[0],), file=sys.stderr)
        return EXIT_INADMISSIBLE

    if args.operation == "delta":
        _print_tpoly(ctx.delta_elem(elem), args.format, format_tensor)
    elif args.operation == "antipode":
        _print_tpoly(ctx.antipode_elem(elem), args.format, format_u)
    else:
        value = ctx.counit_elem(elem)
        print(json.dumps({"counit": str(value)}) if args.format == "json" else str(value))
    return EXIT_OK


def cmd_verify(args):
    cfg = {"seed": args.seed}
    if args.N is not None:
        cfg["N"] = args.N
    if args.p is not None:
        cfg["p"] = args.p
    try:
        records = run_suite(args.suite, cfg, jobs=args.jobs)
    except ValueError as exc:
        print("invalid configuration: %s" % exc, file=sys.stderr)
        return EXIT_CONFIG
    timing = not args.no_timing
    if args.report:
        with open(args.report, "w") as fh:
            write_jsonl(records, fh, timing=timing)
    else:
        write_jsonl(records, sys.stdout, timing=timing)
    if args.figures:
        from .figures import render_report_figures
        paths = render_report_figures(records, args.figures)
        print("figures: %s" % ", ".join(paths), file=sys.stderr)
    counts = summarize(records)
    print("pass=%d fail=%d skipped=%d" % (counts["pass"], counts["fail"], counts["skipped"]),
          file=sys.stderr)
    return EXIT_OK if counts["fail"] == 0 else EXIT_CHECK_FAILED


def build_parser():
    ap = argparse.ArgumentParser(
        prog="hamtwist",
        description="Exact twists and quantizations of Hamiltonian Lie algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compute", help="print delta/antipode/counit of an element")
    comp.add_argument("operation", choices=["delta", "antipode", "counit"])
    comp.add_argument("--variant", choices=sorted(VARIANTS), default="char0-vertical")
    comp.add_argument("--elt", required=True, help="element expression, e.g. 'DH[1;1]'")
    comp.add_argument("--n", type=int, default=None)
    comp.add_argument("--k", type=int, default=1)
    comp.add_argument("--m", type=int, default=None)
    comp.add_argument("--p", type=int, default=None)
    comp.add_argument("--q", type=int, default=0)
    comp.add_argument("--N", type=int, default=None, help="t-truncation bound")
    comp.add_argument("--format", choices=["text", "json"], default="text")
    comp.set_defaults(handler=cmd_compute)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", choices=["all"] + sorted(SUITES))
    ver.add_argument("--N", type=int, default=None, help="override truncation where sensible")
    ver.add_argument("--p", type=int, default=None)
    ver.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ver.add_argument("--jobs", type=int,
                     default=int(os.environ.get("HAMTWIST_JOBS", "1")))
    ver.add_argument("--report", default=None, help="write JSON Lines here instead of stdout")
    ver.add_argument("--figures", default=None, help="render summary figures into this directory")
    ver.add_argument("--no-timing", action="store_true",
                     help="zero the wall_time_ms fields for byte-identical reports")
    ver.set_defaults(handler=cmd_verify)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
