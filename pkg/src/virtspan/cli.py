"""Command-line interface: ``virtspan <subcommand> ...``.

Exit codes: 0 success (or an inconclusive verdict), 1 input error,
2 crossing limit exceeded, 3 invalid certificate, 10 not classical.
"""
from __future__ import annotations

import argparse
import csv
import io
import os
import sys

from . import codec
from .adequacy import adequacy_report, check_theorem_43, classicality_obstruction
from .kauffman import DEFAULT_MAX_CROSSINGS, CrossingLimitError
from .diagram import DiagramError, virtualize
from .generators import FAMILIES, build_family, random_diagram
from .report import FIELDS, invariant_report

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_LIMIT = 2
EXIT_INVALID_CERTIFICATE = 3
EXIT_NOT_CLASSICAL = 10


def _load(path):
    try:
        return codec.read_vlk(path)
    except OSError as exc:
        raise codec.ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc


def cmd_validate(args) -> int:
    D = _load(args.path)
    print(f"ok: {D.c} real, {D.virtual_count} virtual crossings, {D.free_loops} free loops")
    return EXIT_OK


def cmd_invariants(args) -> int:
    rep = invariant_report(_load(args.path), args.max_crossings)
    print(codec.to_json(rep) if args.json else rep.text())
    return EXIT_OK


def cmd_adequacy(args) -> int:
    rep = adequacy_report(_load(args.path))
    if args.json:
        print(codec.to_json(rep))
    else:
        print(f"A-adequate       {rep.a_adequate}  failing {list(rep.failing_crossings_A)}")
        print(f"B-adequate       {rep.b_adequate}  failing {list(rep.failing_crossings_B)}")
        print(f"adequate         {rep.adequate}")
        print(f"pseudo-adequate  {rep.pseudo_adequate}")
    return EXIT_OK


def cmd_check_classical(args) -> int:
    v = classicality_obstruction(_load(args.path), args.max_crossings)
    if args.json:
        print(codec.to_json({"span": v.span, "verdict": v.verdict}))
    else:
        print(f"span {v.span}: {v.verdict}")
    return EXIT_NOT_CLASSICAL if v.not_classical else EXIT_OK


def cmd_check_thm43(args) -> int:
    D = _load(args.path)
    cert = check_theorem_43(D, args.crossing)
    data = cert.as_dict()
    data["virtualized"] = codec.serialize(cert.diagram)
    print(codec.to_json(data))
    return EXIT_OK if cert.valid else EXIT_INVALID_CERTIFICATE


def cmd_gen(args) -> int:
    if args.family == "random":
        if args.n is None:
            raise ValueError("random needs the number of real crossings")
        D = random_diagram(args.seed, args.n, args.virtual)
    else:
        D = build_family(args.family, args.n)
    if args.virtualize is not None:
        D = virtualize(D, args.virtualize)
    text = codec.serialize(D) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def batch_rows(directory, max_crossings=DEFAULT_MAX_CROSSINGS):
    names = sorted(f for f in os.listdir(directory) if f.endswith(".vlk"))
    for name in names:
        rep = invariant_report(_load(os.path.join(directory, name)), max_crossings)
        yield [name, *rep.row()]


def cmd_batch(args) -> int:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["file", *FIELDS])
    for row in batch_rows(args.dir, args.max_crossings):
        writer.writerow(row)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="virtspan",
        description="Kauffman bracket span, Turaev surface Euler characteristic and "
        "adequacy checks for virtual link diagrams (.vlk files).",
    )
    parser.add_argument(
        "--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS,
        help="refuse state sums over more real crossings than this (default %(default)s)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate a .vlk file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("invariants", help="full invariant report")
    p.add_argument("path")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true")
    g.add_argument("--text", dest="json", action="store_false")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("adequacy", help="adequacy and pseudo-adequacy")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_adequacy)

    p = sub.add_parser("check-classical", help="span mod 4 obstruction (exit 10 if not classical)")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_classical)

    p = sub.add_parser("check-thm43", help="certificate for virtualizing one real crossing")
    p.add_argument("path")
    p.add_argument("--crossing", type=int, required=True)
    p.set_defaults(func=cmd_check_thm43)

    p = sub.add_parser("gen", help="emit a generated diagram as .vlk")
    p.add_argument("family", choices=[*FAMILIES, "random"])
    p.add_argument("n", type=int, nargs="?", default=None,
                   help="family parameter (kink: handedness +1/-1; random: real crossings)")
    p.add_argument("--out")
    p.add_argument("--virtualize", type=int, metavar="P", help="virtualize real crossing P")
    p.add_argument("--seed", type=int, default=0, help="random family only")
    p.add_argument("--virtual", type=int, default=0, help="random family: virtual crossings")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("batch", help="one CSV row of invariants per .vlk file in a directory")
    p.add_argument("dir")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CrossingLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (codec.ParseError, DiagramError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
