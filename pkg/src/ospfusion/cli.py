"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 domain error, 4 a
verification check failed.  Every error also writes one JSON line to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .kernel import CHECKS, DEFAULT_MAX_ASSOC_LEVEL, UnknownCheckError, verify
from .labels import DomainError, LabelParseError, Level, enumerate_labels, parse_label
from .orbifold import decompose, dual, fuse, weight_profile
from .schema import SCHEMA_VERSION

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--level", type=_positive_int, required=True, help="level k >= 1")
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--out", type=Path, help="write output to this file instead of stdout")

    parser = _Parser(prog="ospfusion", description="Fusion ring of the orbifold of L_osp(1|2)(k,0).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("labels", parents=[common], help="list all module labels")
    p = sub.add_parser("fuse", parents=[common], help="fusion product of two labels")
    p.add_argument("left")
    p.add_argument("right")
    for name, text in (("dual", "contragredient module"), ("decompose", "sl2-orbifold x Virasoro branching"),
                       ("weight", "component weights of an untwisted label")):
        sub.add_parser(name, parents=[common], help=text).add_argument("label")
    p = sub.add_parser("table", parents=[common], help="full fusion table")
    p.add_argument("--filter", choices=("all", "untwisted", "covered"), default="all",
                   help="untwisted: untwisted pairs only; covered: skip twisted x twisted")
    p = sub.add_parser("verify", parents=[common], help="run verification checks")
    p.add_argument("--checks", default=",".join(CHECKS), help="comma-separated check names")
    p.add_argument("--max-assoc-level", type=int, default=DEFAULT_MAX_ASSOC_LEVEL)
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--timing", action="store_true", help="include elapsed times (output no longer byte-stable)")
    return parser


def emit_table(level: Level | int, filter: str = "all") -> dict:
    level = level if isinstance(level, Level) else Level(level)
    labels = enumerate_labels(level)
    if filter == "untwisted":
        labels = [x for x in labels if not x.twisted]
    products = []
    for x in labels:
        for y in labels:
            if filter == "covered" and x.twisted and y.twisted:
                continue
            result = fuse(level, x, y)
            products.append({
                "left": str(x),
                "right": str(y),
                "result": [{"label": str(z), "mult": m} for z, m in result.items()],
            })
    return {
        "schema_version": SCHEMA_VERSION,
        "level": level.k,
        "filter": filter,
        "labels": [str(x) for x in labels],
        "products": products,
    }


def dump_json(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _run(args) -> tuple[str, int]:
    level = Level(args.level)
    label = lambda text: parse_label(level, text)  # noqa: E731
    as_json = args.format == "json"

    if args.command == "labels":
        labels = enumerate_labels(level)
        if as_json:
            return dump_json({"level": level.k, "labels": [str(x) for x in labels]}), EXIT_OK
        return "".join(f"{x}\t{x.pretty()}\n" for x in labels), EXIT_OK

    if args.command == "fuse":
        a, b = label(args.left), label(args.right)
        result = fuse(level, a, b)
        if as_json:
            doc = {"level": level.k, "left": str(a), "right": str(b),
                   "result": [{"label": str(z), "mult": m} for z, m in result.items()]}
            return dump_json(doc), EXIT_OK
        return f"{result}\n", EXIT_OK

    if args.command == "dual":
        x = label(args.label)
        y = dual(level, x)
        if as_json:
            return dump_json({"level": level.k, "label": str(x), "dual": str(y)}), EXIT_OK
        return f"{y}\n", EXIT_OK

    if args.command == "decompose":
        x = label(args.label)
        comps = decompose(level, x)
        if as_json:
            doc = {"level": level.k, "label": str(x),
                   "components": [{"sl2": c.sl2.render(level.k), "vir": str(c.vir)} for c in comps]}
            return dump_json(doc), EXIT_OK
        lines = [f"{x}\t{x.pretty()}"] + [f"  {c.sl2.render(level.k)} x {c.vir}" for c in comps]
        return "\n".join(lines) + "\n", EXIT_OK

    if args.command == "weight":
        x = label(args.label)
        weights = weight_profile(level, x)
        if as_json:
            return dump_json({"level": level.k, "label": str(x), "weights": [str(w) for w in weights]}), EXIT_OK
        return " ".join(map(str, weights)) + "\n", EXIT_OK

    if args.command == "table":
        doc = emit_table(level, args.filter)
        if as_json or args.out:
            return dump_json(doc), EXIT_OK
        lines = []
        for prod in doc["products"]:
            rhs = " + ".join(e["label"] if e["mult"] == 1 else f"{e['mult']}*{e['label']}" for e in prod["result"])
            lines.append(f"{prod['left']} x {prod['right']} = {rhs or '0'}")
        return "\n".join(lines) + "\n", EXIT_OK

    if args.command == "verify":
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
        reports = verify(level, checks, max_assoc_level=args.max_assoc_level, workers=args.workers)
        code = EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY
        if as_json:
            doc = {"schema_version": SCHEMA_VERSION, "level": level.k,
                   "reports": [r.to_dict(with_timing=args.timing) for r in reports]}
            return dump_json(doc), code
        lines = []
        for r in reports:
            line = r.summary()
            if args.timing:
                line += f" elapsed={r.elapsed:.3f}s"
            lines.append(line)
            lines.extend(f"  finding: {json.dumps(f)}" for f in r.findings)
            lines.extend(f"  counterexample: {json.dumps(c)}" for c in r.counterexamples)
        return "\n".join(lines) + "\n", code

    raise UsageError(f"unknown command {args.command!r}")


def _diagnose(kind: str, code: int, message: str):
    print(json.dumps({"error": kind, "exit": code, "message": message}), file=sys.stderr)
    return code


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _diagnose("usage", EXIT_USAGE, str(exc))
    try:
        text, code = _run(args)
    except (LabelParseError, UnknownCheckError) as exc:
        return _diagnose("parse", EXIT_USAGE, str(exc))
    except DomainError as exc:
        return _diagnose("domain", EXIT_DOMAIN, str(exc))
    if args.out:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if code == EXIT_VERIFY:
        _diagnose("verification", code, "one or more checks failed")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
