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

"""The ``lens-floer`` command line tool.

Every verb parses its input, calls one library function and prints the
report. Input errors exit with status 2, failed internal consistency checks
with status 1.
"""

import argparse
import sys
from typing import Callable, Dict, Optional, Sequence

import logbook
from atomicwrites import atomic_write

from .berge import berge_report, conjecture_scan, enumerate_simple
from .diagram import (Diagram, dumps, parse_diagram, reduce, simple_knot,
                      t_l, t_r)
from .exceptions import InputError, InternalError, ParseError
from .floer import hfk
from .log import logger_group
from .staircase import (AlexPoly, dual_rank_prediction, format_staircase,
                        parse_alex, staircase_from_alex, torus_knot_alex)

PROG = "lens-floer"


def _add_format(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="Report format.",
    )


def _add_polynomial(parser: argparse.ArgumentParser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--alex",
        help="Alexander polynomial, e.g. 'T - 1 + T^-1'.",
    )
    group.add_argument(
        "--torus",
        type=int,
        nargs=2,
        metavar=("A", "B"),
        help="Use the Alexander polynomial of the torus knot T(A,B).",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Knot Floer homology of one-bridge knots in lens spaces.",
    )
    parser.add_argument(
        "-v", "--verbose",
        action="count",
        default=0,
        help="Log progress to standard error, twice for debug output.",
    )
    parser.add_argument(
        "--output",
        metavar="PATH",
        help="Write the report to PATH instead of standard output.",
    )

    verbs = parser.add_subparsers(dest="verb", metavar="VERB")
    verbs.required = True

    command = verbs.add_parser("hfk", help="Knot Floer homology ranks.")
    source = command.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", metavar="PATH",
                        help="A lens-diagram v1 file.")
    source.add_argument("--simple", type=int, nargs=3,
                        metavar=("P", "Q", "K"),
                        help="The simple knot of class K in L(P,Q).")
    source.add_argument("--tr", type=int, nargs=2, metavar=("P", "Q"),
                        help="The knot T_R in L(P,Q).")
    source.add_argument("--tl", type=int, nargs=2, metavar=("P", "Q"),
                        help="The knot T_L in L(P,Q).")
    _add_format(command)

    command = verbs.add_parser("reduce", help="Cancel empty bigons.")
    command.add_argument("--input", metavar="PATH", required=True,
                         help="A lens-diagram v1 file.")

    command = verbs.add_parser("simple", help="Diagrams of all simple knots.")
    command.add_argument("p", type=int)
    command.add_argument("q", type=int)

    command = verbs.add_parser("staircase",
                               help="Staircase of an L-space knot.")
    _add_polynomial(command)

    command = verbs.add_parser("predict",
                               help="Rank of the dual of p-surgery.")
    _add_polynomial(command)
    command.add_argument("--p", type=int, required=True, dest="slope",
                         help="The surgery slope.")

    command = verbs.add_parser("berge", help="Report on the simple knots.")
    command.add_argument("p", type=int)
    command.add_argument("q", type=int)
    _add_format(command)

    command = verbs.add_parser("scan", help="Random conjecture scan.")
    command.add_argument("p", type=int)
    command.add_argument("q", type=int)
    command.add_argument("--nmax", type=int, required=True,
                         help="Maximal number of crossings.")
    command.add_argument("--trials", type=int, required=True)
    command.add_argument("--seed", type=int, required=True)
    _add_format(command)

    return parser


def _diagram(args: argparse.Namespace) -> Diagram:
    if args.input:
        return parse_diagram(args.input)
    if args.simple:
        return simple_knot(*args.simple)
    if args.tr:
        return t_r(*args.tr)
    return t_l(*args.tl)


def _polynomial(args: argparse.Namespace) -> AlexPoly:
    if args.torus:
        return torus_knot_alex(*args.torus)
    return parse_alex(args.alex)


def _report(table, args: argparse.Namespace) -> str:
    return table.to_json() if args.format == "json" else table.to_tsv()


def cmd_hfk(args: argparse.Namespace) -> str:
    return _report(hfk(_diagram(args)), args)


def cmd_reduce(args: argparse.Namespace) -> str:
    return dumps(reduce(parse_diagram(args.input)))


def cmd_simple(args: argparse.Namespace) -> str:
    return "\n".join(
        "# k={}\n{}".format(record.k, dumps(record.diagram))
        for record in enumerate_simple(args.p, args.q)
    )


def cmd_staircase(args: argparse.Namespace) -> str:
    return format_staircase(staircase_from_alex(_polynomial(args)))


def cmd_predict(args: argparse.Namespace) -> str:
    staircase = staircase_from_alex(_polynomial(args))
    return "{}\n".format(dual_rank_prediction(staircase, args.slope))


def cmd_berge(args: argparse.Namespace) -> str:
    return _report(berge_report(args.p, args.q), args)


def cmd_scan(args: argparse.Namespace) -> str:
    report = conjecture_scan(
        args.p, args.q, args.nmax, args.trials, args.seed
    )
    return _report(report, args)


COMMANDS: Dict[str, Callable[[argparse.Namespace], str]] = {
    "hfk": cmd_hfk,
    "reduce": cmd_reduce,
    "simple": cmd_simple,
    "staircase": cmd_staircase,
    "predict": cmd_predict,
    "berge": cmd_berge,
    "scan": cmd_scan,
}


def _emit(text: str, path: Optional[str]):
    if path is None:
        sys.stdout.write(text)
        return

    with atomic_write(path, overwrite=True) as f:
        f.write(text)


def _fail(message: str):
    sys.stderr.write("{}: {}\n".format(PROG, message))


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return the exit status."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    level = logger_group.level
    if args.verbose:
        verbose = args.verbose > 1
        logger_group.level = logbook.DEBUG if verbose else logbook.INFO

    try:
        with logbook.StderrHandler(level=logbook.DEBUG).applicationbound():
            _emit(COMMANDS[args.verb](args), args.output)

    except ParseError as e:
        source = getattr(args, "input", None)
        _fail("{}: {}".format(source, e) if source else str(e))
        return 2

    except InputError as e:
        _fail("error: {}".format(e))
        return 2

    except OSError as e:
        _fail("error: {}".format(e))
        return 2

    except (InternalError, AssertionError) as e:
        _fail("internal error: {}".format(e))
        return 1

    finally:
        logger_group.level = level

    return 0


def main():
    sys.exit(run())
