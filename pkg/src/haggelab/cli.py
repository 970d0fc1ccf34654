"""Command line entry point.

Exit status: 0 when every check passes, 1 when a check fails (the report is
still written), 2 for usage, parse and input errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .audit import section8_oracle
from .errors import DegenerateParameters, EmptyDrawList, GeometryError, ScriptError
from .numeric import parse_scalar
from .report import dumps
from .script import parse_script, run_program, serialize
from .suites import PRIMARY, SUITES, run_suite
from .svg import Options, emit_svg

OK, FAILED, USAGE = 0, 1, 2


def _write(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load_script(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_script(text)
    except ScriptError as exc:
        raise _UsageError(f"{path}:{exc.line}:{exc.column}: {exc.name}: {exc.args[0].split(': ', 1)[-1]}") from None


class _UsageError(Exception):
    pass


def cmd_verify(args) -> int:
    names = list(PRIMARY) if args.suite == "all" else [args.suite]
    runs = [run_suite(n, args.instances, args.seed, args.backend, args.jobs) for n in names]
    if len(runs) == 1:
        data = runs[0].to_json()
    else:
        data = {
            "suites": [r.to_json() for r in runs],
            "summary": {
                "suites": len(runs),
                "failed": [r.suite for r in runs if not r.passed],
                "pass": all(r.passed for r in runs),
            },
        }
    _write(dumps(data), args.report)
    for r in runs:
        bad = len(r.counterexamples())
        print(f"{r.suite}: {len(r.reports) - bad}/{len(r.reports)} instances pass", file=sys.stderr)
    return OK if all(r.passed for r in runs) else FAILED


def cmd_construct(args) -> int:
    prog = _load_script(args.script)
    result = run_program(prog, args.backend)
    data = {
        "program": serialize(prog).splitlines(),
        "report": result.report.to_json(),
        "environment": result.env_json(),
    }
    _write(dumps(data), args.json)
    return OK if result.report.passed else FAILED


def cmd_figure(args) -> int:
    prog = _load_script(args.script)
    result = run_program(prog, "float" if args.backend == "float" else "rational")
    try:
        svg = emit_svg(result.env, prog.draws(), Options(width=args.width))
    except EmptyDrawList:
        raise _UsageError(f"{args.script}: no draw statements") from None
    except GeometryError as exc:
        raise _UsageError(f"{args.script}: {exc.name}: {exc}") from None
    _write(svg, args.svg)
    return OK if result.report.passed else FAILED


def cmd_oracle8(args) -> int:
    try:
        values = [parse_scalar(getattr(args, k)) for k in ("v", "w", "m", "k")]
    except (ValueError, ZeroDivisionError) as exc:
        raise _UsageError(f"bad parameter: {exc}") from None
    try:
        rep = section8_oracle(*values)
    except DegenerateParameters as exc:
        raise _UsageError(f"DegenerateParameters: {exc}") from None
    _write(dumps(rep.to_json()), args.report)
    mism = [e["eq"] for e in rep.records["audit"] if e["status"] == "mismatch"]
    print(f"audit: {len(mism)} mismatch(es){': ' + ', '.join(mism) if mism else ''}", file=sys.stderr)
    return OK if rep.passed else FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="haggelab", description="Exact verification of Hagge and Speckman configurations.")
    sub = p.add_subparsers(dest="verb", required=True)

    v = sub.add_parser("verify", help="run a seeded verification suite")
    v.add_argument("--suite", required=True, choices=[*PRIMARY, "all", *(s for s in SUITES if s not in PRIMARY)])
    v.add_argument("--instances", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--backend", choices=["rational", "float"], default="rational")
    v.add_argument("--report", help="JSON output path (default: stdout)")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("construct", help="run a construction script")
    c.add_argument("script")
    c.add_argument("--json", help="JSON output path (default: stdout)")
    c.add_argument("--backend", choices=["rational", "float"], default="rational")
    c.set_defaults(func=cmd_construct)

    f = sub.add_parser("figure", help="render a script's draw statements to SVG")
    f.add_argument("script")
    f.add_argument("--svg", help="SVG output path (default: stdout)")
    f.add_argument("--width", type=int, default=800)
    f.add_argument("--backend", choices=["rational", "float"], default="rational")
    f.set_defaults(func=cmd_figure)

    o = sub.add_parser("oracle8", help="audit the closed forms of the orthocenter-centered family")
    for name in ("v", "w", "m", "k"):
        o.add_argument(f"--{name}", required=True, help="rational, e.g. 3/2")
    o.add_argument("--report", help="JSON output path (default: stdout)")
    o.set_defaults(func=cmd_oracle8)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    if getattr(args, "instances", 1) < 0 or getattr(args, "jobs", 1) < 1 or getattr(args, "width", 1) < 1:
        print("haggelab: counts must be positive", file=sys.stderr)
        return USAGE
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"haggelab: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
