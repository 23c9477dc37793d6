# -*- coding: utf-8 -*-

# Copyright © 2021 The lens-floer developers
#
# Permission to use, copy, modify, and/or distribute this software for
# any purpose with or without fee is hereby granted, provided that the
# above copyright notice and this permission notice appear in all copies.
#
# THE SOFTWARE IS PROVIDED "AS IS" AND THE AUTHOR DISCLAIMS ALL WARRANTIES
# WITH REGARD TO THIS SOFTWARE INCLUDING ALL IMPLIED WARRANTIES OF
# MERCHANTABILITY AND FITNESS. IN NO EVENT SHALL THE AUTHOR BE LIABLE FOR ANY
# SPECIAL, DIRECT, INDIRECT, OR CONSEQUENTIAL DAMAGES OR ANY DAMAGES WHATSOEVER
# RESULTING FROM LOSS OF USE, DATA OR PROFITS, WHETHER IN AN ACTION OF
# CONTRACT, NEGLIGENCE OR OTHER TORTIOUS ACTION, ARISING OUT OF OR IN
# CONNECTION WITH THE USE OR PERFORMANCE OF THIS SOFTWARE.

"""The ``lens-diagram v1`` text format.

A file starts with the header line, followed by one line per crossing in
β-order, the two basepoints and an optional label::

    lens-diagram v1
    # simple knot of class 2 in L(7,3)
    L simple_knot(7,3,2)
    X 0 pos=0/1 dir=+1 wind=0
    ...
    Z pos=1/21 y=1/48
    W pos=13/21 y=1/48

Lines starting with ``#`` and blank lines are ignored.
"""

import re
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from atomicwrites import atomic_write

from ..exceptions import ParseError
from .models import Basepoint, Crossing, CrossingSeq, Diagram

HEADER = "lens-diagram v1"

_fraction_re = re.compile(r"^(-?\d+)(?:/(\d+))?$")
_integer_re = re.compile(r"^[+-]?\d+$")

Token = Tuple[str, int]


def _tokens(line: str) -> List[Token]:
    return [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", line)]


def _fraction(text: str, lineno: int, column: int) -> Fraction:
    match = _fraction_re.match(text)

    if not match or int(match.group(2) or 1) == 0:
        raise ParseError(
            "expected a fraction <num>/<den>, got {!r}".format(text),
            lineno,
            column,
        )

    return Fraction(int(match.group(1)), int(match.group(2) or 1))


def _keyed(token: Token, key: str, lineno: int) -> Tuple[str, int]:
    text, column = token
    prefix = key + "="

    if not text.startswith(prefix):
        raise ParseError(
            "expected {}<value>, got {!r}".format(prefix, text),
            lineno,
            column,
        )

    return text[len(prefix):], column + len(prefix)


def _expect_fields(tokens: List[Token], count: int, lineno: int):
    if len(tokens) != count:
        column = tokens[min(len(tokens), count) - 1][1] if tokens else 1
        raise ParseError(
            "expected {} fields, got {}".format(count, len(tokens)),
            lineno,
            column,
        )


class CrossingLine:
    @staticmethod
    def from_line(tokens: List[Token], lineno: int, expected: int):
        # type: (List[Token], int, int) -> Tuple[Crossing, int, int]
        _expect_fields(tokens, 5, lineno)
        index, column = tokens[1]

        if not _integer_re.match(index) or int(index) != expected:
            raise ParseError(
                "expected crossing index {}, got {!r}".format(expected, index),
                lineno,
                column,
            )

        text, column = _keyed(tokens[2], "pos", lineno)
        pos = _fraction(text, lineno, column)
        if not 0 <= pos < 1:
            raise ParseError(
                "crossing position {} is outside [0,1)".format(pos),
                lineno,
                column,
            )

        text, column = _keyed(tokens[3], "dir", lineno)
        if text not in ("+1", "-1"):
            raise ParseError(
                "dir must be +1 or -1, got {!r}".format(text), lineno, column
            )

        winding, column = _keyed(tokens[4], "wind", lineno)
        if not _integer_re.match(winding):
            raise ParseError(
                "wind must be an integer, got {!r}".format(winding),
                lineno,
                column,
            )

        return Crossing(pos, int(text)), int(winding), tokens[2][1]

    @staticmethod
    def to_line(index: int, crossing: Crossing, winding: int) -> str:
        return "X {} pos={} dir={} wind={}".format(
            index,
            _render(crossing.pos),
            "+1" if crossing.dir > 0 else "-1",
            winding,
        )


class BasepointLine:
    @staticmethod
    def from_line(tokens: List[Token], lineno: int) -> Basepoint:
        _expect_fields(tokens, 3, lineno)

        text, column = _keyed(tokens[1], "pos", lineno)
        x = _fraction(text, lineno, column)
        if not 0 <= x < 1:
            raise ParseError(
                "basepoint position {} is outside [0,1)".format(x),
                lineno,
                column,
            )

        text, column = _keyed(tokens[2], "y", lineno)
        y = _fraction(text, lineno, column)
        if not 0 < y < 1:
            raise ParseError(
                "basepoint height {} is outside (0,1)".format(y),
                lineno,
                column,
            )

        return Basepoint(x, y)

    @staticmethod
    def to_line(name: str, point: Basepoint) -> str:
        return "{} pos={} y={}".format(
            name, _render(point.x), _render(point.y)
        )


def _render(value: Fraction) -> str:
    return "{}/{}".format(value.numerator, value.denominator)


def loads(text: str) -> Diagram:
    """Parse a diagram from the text format.

    Raises a ParseError carrying the line and column of the first problem.
    Whether the result is a valid diagram is up to ``validate``.
    """
    return _parse(text.splitlines())


def _parse(lines: Iterable[str]) -> Diagram:
    header_seen = False
    crossings: List[Crossing] = []
    windings: List[int] = []
    seen_positions: Dict[Fraction, int] = {}
    points: Dict[str, Basepoint] = {}
    label: Optional[str] = None
    lineno = 0

    for lineno, raw in enumerate(lines, 1):
        line = raw.rstrip("\n")
        stripped = line.strip()

        if not stripped or stripped.startswith("#"):
            continue

        if not header_seen:
            if stripped != HEADER:
                raise ParseError(
                    "expected header {!r}".format(HEADER),
                    lineno,
                    line.index(stripped[0]) + 1,
                )
            header_seen = True
            continue

        tokens = _tokens(line)
        kind, column = tokens[0]

        if kind == "X":
            crossing, winding, pos_column = CrossingLine.from_line(
                tokens, lineno, len(crossings)
            )

            if crossing.pos in seen_positions:
                raise ParseError(
                    "duplicate crossing position {}, first used on line "
                    "{}".format(crossing.pos, seen_positions[crossing.pos]),
                    lineno,
                    pos_column,
                )

            seen_positions[crossing.pos] = lineno
            crossings.append(crossing)
            windings.append(winding)

        elif kind in ("Z", "W"):
            if kind in points:
                raise ParseError(
                    "duplicate basepoint {}".format(kind), lineno, column
                )
            points[kind] = BasepointLine.from_line(tokens, lineno)

        elif kind == "L":
            if label is not None:
                raise ParseError("duplicate label", lineno, column)
            label = line[line.index("L", column - 1) + 1:].strip()

        else:
            raise ParseError(
                "unknown record {!r}".format(kind), lineno, column
            )

    if not header_seen:
        raise ParseError("missing header {!r}".format(HEADER), lineno + 1, 1)

    if not crossings:
        raise ParseError("the diagram has no crossings", lineno + 1, 1)

    for name in ("Z", "W"):
        if name not in points:
            raise ParseError(
                "missing basepoint {}".format(name), lineno + 1, 1
            )

    return Diagram(
        CrossingSeq(tuple(crossings), tuple(windings)),
        points["Z"],
        points["W"],
        label or "",
    )


def dumps(diagram: Diagram) -> str:
    beta = diagram.beta
    lines = [HEADER]

    if diagram.label:
        lines.append("L {}".format(diagram.label))

    for j, (crossing, winding) in enumerate(zip(beta.crossings,
                                                beta.windings)):
        lines.append(CrossingLine.to_line(j, crossing, winding))

    lines.append(BasepointLine.to_line("Z", diagram.z))
    lines.append(BasepointLine.to_line("W", diagram.w))

    return "\n".join(lines) + "\n"


def parse_diagram(path: str) -> Diagram:
    with open(path, "r", encoding="utf-8") as f:
        return _parse(f)


def save_diagram(diagram: Diagram, path: str):
    with atomic_write(path, overwrite=True) as f:
        f.write(dumps(diagram))
