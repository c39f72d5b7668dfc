"""Text (``.vlk``) and JSON encodings.

``.vlk`` grammar, one declaration per line::

    # comment
    X a b c d     real crossing, labels on slots 0..3 counterclockwise,
                  under-strand on slots 0 and 2
    V a b c d     virtual crossing
    O k           k crossing-free loops

Labels are nonnegative integers and each must occur exactly twice; the two
occurrences of a label are the two ends of one arc.
"""
from __future__ import annotations

import json
import re
from typing import Any

from .diagram import Diagram, DiagramError, Kind

_TOKEN = re.compile(r"\S+")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


def parse(text: str) -> Diagram:
    kinds: list[Kind] = []
    occurrences: dict[int, list[tuple[int, int, int]]] = {}
    free_loops = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        if not toks:
            continue
        head, col = toks[0]
        args = toks[1:]
        if head in ("X", "V"):
            if len(args) != 4:
                raise ParseError(
                    f"crossing '{head}' needs 4 edge labels, got {len(args)}", lineno, col
                )
            cid = len(kinds)
            kinds.append(Kind.REAL if head == "X" else Kind.VIRTUAL)
            for slot, (tok, tcol) in enumerate(args):
                if not tok.isdigit():
                    raise ParseError(f"edge label must be a nonnegative integer, got {tok!r}", lineno, tcol)
                occurrences.setdefault(int(tok), []).append((cid, slot, lineno))
        elif head == "O":
            if len(args) != 1:
                raise ParseError(f"'O' takes one loop count, got {len(args)} arguments", lineno, col)
            tok, tcol = args[0]
            if not tok.isdigit():
                raise ParseError(f"loop count must be a nonnegative integer, got {tok!r}", lineno, tcol)
            if free_loops is not None:
                raise ParseError("duplicate 'O' line", lineno, col)
            free_loops = int(tok)
        else:
            raise ParseError(f"unknown declaration {head!r} (expected X, V or O)", lineno, col)

    matching = [-1] * (4 * len(kinds))
    for label, occ in sorted(occurrences.items()):
        if len(occ) != 2:
            raise ParseError(
                f"edge label {label} occurs {len(occ)} time(s), expected exactly 2", occ[0][2]
            )
        (c1, s1, _), (c2, s2, _) = occ
        a, b = 4 * c1 + s1, 4 * c2 + s2
        matching[a], matching[b] = b, a
    try:
        return Diagram(tuple(kinds), tuple(matching), free_loops or 0)
    except DiagramError as exc:
        raise ParseError(f"invalid diagram: {exc}") from exc


def serialize(D: Diagram) -> str:
    """Render ``D`` as ``.vlk`` text; arcs are labelled 0, 1, ... by first port."""
    labels = [-1] * len(D.matching)
    nxt = 0
    for q, r in enumerate(D.matching):
        if labels[q] == -1:
            labels[q] = labels[r] = nxt
            nxt += 1
    lines = []
    for c, k in enumerate(D.kinds):
        lines.append(" ".join([k.value] + [str(labels[4 * c + t]) for t in range(4)]))
    if D.free_loops:
        lines.append(f"O {D.free_loops}")
    return "\n".join(lines)


def read_vlk(path) -> Diagram:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def write_vlk(D: Diagram, path, header: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if header:
            for line in header.splitlines():
                fh.write(f"# {line}\n")
        fh.write(serialize(D) + "\n")


def to_json(report: Any, indent: int | None = 2) -> str:
    """JSON for any report object exposing ``as_dict()`` (or a plain dict)."""
    data = report.as_dict() if hasattr(report, "as_dict") else report
    return json.dumps(data, indent=indent, sort_keys=False)
