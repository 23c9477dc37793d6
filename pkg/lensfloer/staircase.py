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

"""Staircase complexes of L-space knots.

The Alexander polynomial of a knot with an L-space surgery has coefficients
±1 that alternate in sign, and it determines the filtered chain homotopy
type of the hat complex. This module turns such a polynomial into its
staircase, computes the ranks of the filtration levels and the rank
predictions for surgery duals and the top group of Whitehead doubles.
"""

import re
from dataclasses import dataclass
from math import gcd
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np
import sympy as sp
from logbook import Logger

from . import gf2
from .exceptions import (BadParams, InternalError, NegativeRank,
                         NotLSpaceAdmissible, ParseError, RankMismatch,
                         SlopeTooSmall)
from .log import logger_group

logger = Logger("lensfloer.staircase")
logger_group.add_logger(logger)

__all__ = [
    "AlexPoly",
    "Staircase",
    "FiltRanks",
    "parse_alex",
    "staircase_from_alex",
    "tau",
    "filt_rank",
    "brute_force_filt_rank",
    "graded_differential",
    "wd_top_rank",
    "dual_rank_prediction",
    "torus_knot_alex",
    "format_staircase",
]


T = sp.Symbol("T")


@dataclass(frozen=True)
class AlexPoly:
    """A Laurent polynomial in T with integer coefficients.

    Args:
        terms (Tuple[Tuple[int, int]]): Pairs of exponent and nonzero
            coefficient, sorted by decreasing exponent.
    """

    terms: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_dict(cls, coeffs: Dict[int, int]) -> "AlexPoly":
        return cls(tuple(
            (exponent, coeff)
            for exponent, coeff in sorted(coeffs.items(), reverse=True)
            if coeff
        ))

    @classmethod
    def from_sympy(cls, expression) -> "AlexPoly":
        expression = sp.expand(expression)
        coeffs: Dict[int, int] = {}

        for term in sp.Add.make_args(expression):
            coeff, power = term.as_coeff_exponent(T)
            coeffs[int(power)] = coeffs.get(int(power), 0) + int(coeff)

        return cls.from_dict(coeffs)

    def coefficient(self, exponent: int) -> int:
        return dict(self.terms).get(exponent, 0)

    @property
    def support(self) -> List[int]:
        return sorted(exponent for exponent, _ in self.terms)

    @property
    def degree(self) -> int:
        return self.terms[0][0] if self.terms else 0

    def at_one(self) -> int:
        return sum(coeff for _, coeff in self.terms)

    def to_sympy(self):
        return sp.Add(*[coeff * T**exponent for exponent, coeff in self.terms])

    def shifted(self, offset: int) -> "AlexPoly":
        return AlexPoly(tuple((e + offset, c) for e, c in self.terms))

    def __neg__(self) -> "AlexPoly":
        return AlexPoly(tuple((e, -c) for e, c in self.terms))

    def __str__(self):
        if not self.terms:
            return "0"

        parts = []

        for exponent, coeff in self.terms:
            if exponent == 0:
                body = str(abs(coeff))
            else:
                power = "T" if exponent == 1 else "T^{}".format(exponent)
                body = power if abs(coeff) == 1 else "{}*{}".format(
                    abs(coeff), power
                )

            if not parts:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)

        return " ".join(parts)


_token_re = re.compile(r"\s*(?:(\d+)|([Tt])|(\^)|([+-])|(\*)|(\S))")
_token_kinds = ("number", "T", "caret", "sign", "star", "other")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    """Split a polynomial into (kind, text, column) triples."""
    tokens = []
    position = 0

    while True:
        match = _token_re.match(text, position)

        if match is None:
            break

        group = match.lastindex
        tokens.append((
            _token_kinds[group - 1], match.group(group), match.start(group) + 1
        ))
        position = match.end()

    return tokens


class _AlexParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> Optional[Tuple[str, str, int]]:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def take(self) -> Tuple[str, str, int]:
        token = self.peek()
        if token is None:
            raise ParseError(
                "unexpected end of polynomial", 1, len(self.text) + 1
            )
        self.index += 1
        return token

    def expect(self, kind: str, what: str) -> Tuple[str, str, int]:
        token = self.take()
        if token[0] != kind:
            raise ParseError(
                "expected {}, got {!r}".format(what, token[1]), 1, token[2]
            )
        return token

    def parse(self) -> AlexPoly:
        if self.peek() is None:
            raise ParseError("empty polynomial", 1, 1)

        coeffs: Dict[int, int] = {}
        sign = 1
        first = True

        while self.peek() is not None:
            token = self.peek()
            assert token is not None

            if token[0] == "sign":
                self.take()
                sign = -1 if token[1] == "-" else 1
            elif not first:
                raise ParseError(
                    "expected + or -, got {!r}".format(token[1]), 1, token[2]
                )

            exponent, coeff = self.term()
            coeffs[exponent] = coeffs.get(exponent, 0) + sign * coeff
            sign = 1
            first = False

        return AlexPoly.from_dict(coeffs)

    def term(self) -> Tuple[int, int]:
        token = self.take()

        if token[0] == "number":
            coeff = int(token[1])
            following = self.peek()

            if following is not None and following[0] == "star":
                self.take()
                self.expect("T", "T")
                return self.power(), coeff

            if following is not None and following[0] == "T":
                self.take()
                return self.power(), coeff

            return 0, coeff

        if token[0] == "T":
            return self.power(), 1

        raise ParseError(
            "expected a term, got {!r}".format(token[1]), 1, token[2]
        )

    def power(self) -> int:
        following = self.peek()

        if following is None or following[0] != "caret":
            return 1

        self.take()
        sign = 1
        following = self.peek()

        if following is not None and following[0] == "sign":
            self.take()
            sign = -1 if following[1] == "-" else 1

        return sign * int(self.expect("number", "an exponent")[1])


def parse_alex(text: str) -> AlexPoly:
    """Parse a polynomial such as ``T^3 - T^2 + 1 - T^-2 + T^-3``.

    Whitespace is ignored, coefficients are optional integers that may be
    followed by ``*``. Like terms are collected.

    Raises a ParseError pointing at the offending column.
    """
    return _AlexParser(text).parse()


@dataclass(frozen=True)
class Staircase:
    """The reduced filtered complex of an L-space knot.

    Attributes:
        n (Tuple[int]): The filtration levels n_{-k} < ... < n_k.
        delta (Tuple[int]): The Maslov grading of the generator at every
            level.
    """

    n:     Tuple[int, ...]
    delta: Tuple[int, ...]

    @property
    def g(self) -> int:
        return self.n[-1]

    @property
    def k(self) -> int:
        return len(self.n) // 2

    def pairs(self) -> List[Tuple[int, int]]:
        """Positions (i, i+1) in the lists with ∂y_{i+1} = y_i."""
        k = self.k
        return [
            (i + k, i + k + 1) for i in range(-k, k)
            if (k - i) % 2 == 0
        ]

    def euler(self) -> AlexPoly:
        coeffs: Dict[int, int] = {}
        for level, delta in zip(self.n, self.delta):
            coeffs[level] = coeffs.get(level, 0) + (-1) ** (delta % 2)
        return AlexPoly.from_dict(coeffs)


def check_admissible(poly: AlexPoly):
    """Raise NotLSpaceAdmissible unless the polynomial can be a staircase."""
    if not poly.terms:
        raise NotLSpaceAdmissible(0, "The zero polynomial has no staircase")

    for index, (exponent, coeff) in enumerate(poly.terms):
        expected = 1 if index % 2 == 0 else -1

        if coeff != expected:
            raise NotLSpaceAdmissible(
                exponent,
                "Coefficient {} of T^{} breaks the alternating ±1 "
                "pattern".format(coeff, exponent),
            )

    for exponent, coeff in poly.terms:
        if poly.coefficient(-exponent) != coeff:
            raise NotLSpaceAdmissible(
                exponent,
                "The coefficients of T^{} and T^{} differ".format(
                    exponent, -exponent
                ),
            )


def staircase_from_alex(poly: AlexPoly) -> Staircase:
    """Build the staircase of an L-space knot from its Alexander polynomial.

    The levels are the support of the polynomial. The top generator sits in
    Maslov grading zero, walking down a step of odd distance from the top
    drops the grading by 2(n_{i+1} - n_i) - 1, an even step drops it by
    one.
    """
    check_admissible(poly)

    levels = poly.support
    k = len(levels) // 2
    delta = [0] * len(levels)

    for i in range(k - 1, -k - 1, -1):
        here, above = i + k, i + k + 1

        if (k - i) % 2:
            delta[here] = (
                delta[above] - 2 * (levels[above] - levels[here]) + 1
            )
        else:
            delta[here] = delta[above] - 1

    staircase = Staircase(tuple(levels), tuple(delta))

    difference = sp.expand(staircase.euler().to_sympy() - poly.to_sympy())
    if difference != 0:
        raise InternalError(
            "The staircase of {} has Euler characteristic {}".format(
                poly, staircase.euler()
            )
        )

    return staircase


def tau(staircase: Staircase) -> int:
    """The τ invariant, which equals the genus for an L-space knot."""
    return staircase.g


@dataclass(frozen=True)
class FiltRanks:
    """Ranks of the homology of the filtration levels F(K, m).

    ``values`` holds the ranks for m in [-g-1, g]; above that range the rank
    is one, below it zero.
    """

    g:      int
    values: Tuple[int, ...]

    def __call__(self, m: int) -> int:
        if m > self.g:
            return 1
        if m < -self.g - 1:
            return 0
        return self.values[m + self.g + 1]

    @property
    def levels(self) -> range:
        return range(-self.g - 1, self.g + 1)

    def check(self):
        for m in self.levels:
            if self(m) > 1:
                raise RankMismatch(
                    "Level {} has homology of rank {}".format(m, self(m))
                )

            if self(m) + self(-m - 1) != 1:
                raise RankMismatch(
                    "The ranks of levels {} and {} don't add up to "
                    "one".format(m, -m - 1)
                )


def filt_rank(staircase: Staircase) -> FiltRanks:
    """Ranks of the sub-level complexes, read off the staircase pairing.

    A level m keeps the top generator once m ≥ g and the lower end of every
    pair that it cuts in two.
    """
    levels = staircase.n
    pairs = staircase.pairs()
    g = staircase.g

    values = tuple(
        int(m >= g) + sum(
            1 for low, high in pairs if levels[low] <= m < levels[high]
        )
        for m in range(-g - 1, g + 1)
    )

    ranks = FiltRanks(g, values)
    ranks.check()
    return ranks


def staircase_differential(staircase: Staircase) -> np.ndarray:
    """The vertical differential given by the staircase pairing."""
    matrix = gf2.zeros(len(staircase.n), len(staircase.n))
    for low, high in staircase.pairs():
        matrix[low, high] = 1
    return matrix


def graded_differential(staircase: Staircase) -> np.ndarray:
    """The vertical differential, read off the gradings alone.

    Walking up from the bottom, a generator that nothing hits yet is hit by
    the next one if that sits at a higher level and exactly one Maslov
    grading above it.
    """
    levels, delta = staircase.n, staircase.delta
    matrix = gf2.zeros(len(levels), len(levels))
    i = 0

    while i + 1 < len(levels):
        if delta[i + 1] - delta[i] == 1 and levels[i] < levels[i + 1]:
            matrix[i, i + 1] = 1
            i += 2
        else:
            i += 1

    return matrix


def brute_force_filt_rank(staircase: Staircase) -> FiltRanks:
    """Ranks of the sub-level complexes by linear algebra over GF(2).

    The differential comes from ``graded_differential``, so a wrong pairing
    or a wrong grading shows up as a disagreement with ``filt_rank``.

    Raises a RankMismatch error if the whole complex doesn't have homology
    of rank one in Maslov grading zero.
    """
    differential = graded_differential(staircase)
    size = len(staircase.n)

    if size - 2 * gf2.rank(differential) != 1:
        raise RankMismatch(
            "The graded complex of {} has homology of rank {}".format(
                staircase.n, size - 2 * gf2.rank(differential)
            )
        )

    survivor = next(
        i for i in range(size)
        if not differential[i].any() and not differential[:, i].any()
    )
    if staircase.delta[survivor] != 0:
        raise RankMismatch(
            "The homology of the graded complex sits in Maslov grading "
            "{}".format(staircase.delta[survivor])
        )

    g = staircase.g
    values = []

    for m in range(-g - 1, g + 1):
        below = [i for i, level in enumerate(staircase.n) if level <= m]
        sub = gf2.block(differential, below, below)
        values.append(len(below) - 2 * gf2.rank(sub))

    return FiltRanks(g, tuple(values))


def _check_slope(p: int):
    if p < 1:
        raise BadParams("The surgery slope must be positive, got {}".format(p))


def wd_top_rank(staircase: Staircase, p: int) -> int:
    """Rank of the top group of the Whitehead double after p-surgery.

    Raises a NegativeRank error if the count of the quotient turns negative
    or misses the closed forms p for p ≥ 2g and 4g - p below.
    """
    _check_slope(p)
    g = staircase.g
    ranks = filt_rank(staircase)
    total = sum(ranks(i) + ranks(-i - 1) for i in range(-g - 1, g + 1))

    if p >= 2 * g:
        result = (p - 2 * g - 2) + total
        expected = p
    else:
        result = (-p + 2 * g - 2) + total
        expected = 4 * g - p

    if result < 0 or result != expected:
        raise NegativeRank(
            "Top group rank {} for p={} and g={}, expected {}".format(
                result, p, g, expected
            )
        )

    return result


def dual_rank_prediction(staircase: Staircase, p: int) -> int:
    """Predicted rank of knot Floer homology of the dual of p-surgery.

    The dual knot in the lens space is simple for p ≥ 2g and has two more
    generators than the lens space for p = 2g - 1.

    Raises:
        SlopeTooSmall: If p < 2g - 1, where the surgery isn't a lens space
            surgery.
        BadParams: If p isn't positive.
    """
    g = staircase.g

    if p < 2 * g - 1:
        raise SlopeTooSmall(
            "Surgery with slope {} < 2g-1 = {} on an L-space knot doesn't "
            "give a lens space".format(p, 2 * g - 1)
        )

    _check_slope(p)
    prediction = p if p >= 2 * g else p + 2
    top = wd_top_rank(staircase, p)

    if top != prediction:
        raise RankMismatch(
            "Predicted rank {} differs from the top group rank {}".format(
                prediction, top
            )
        )

    logger.debug("Dual rank prediction for p={}, g={}: {}".format(
        p, g, prediction
    ))

    return prediction


def torus_knot_alex(a: int, b: int) -> AlexPoly:
    """Alexander polynomial of the positive (a, b) torus knot."""
    if a < 1 or b < 1 or gcd(a, b) != 1:
        raise BadParams(
            "T({},{}) is not a torus knot, a and b must be positive and "
            "coprime".format(a, b)
        )

    numerator = sp.Poly((T**(a * b) - 1) * (T - 1), T)
    denominator = sp.Poly((T**a - 1) * (T**b - 1), T)
    quotient, remainder = sp.div(numerator, denominator)
    assert remainder.is_zero

    genus = (a - 1) * (b - 1) // 2
    return AlexPoly.from_sympy(quotient.as_expr() * T**(-genus))


def format_staircase(staircase: Staircase) -> str:
    """Render the levels and gradings as two aligned rows."""
    cells = [str(value) for value in staircase.n + staircase.delta]
    width = max(len(cell) for cell in cells)

    def row(label: str, values: Iterable[int]) -> str:
        return label.ljust(7) + " ".join(
            str(value).rjust(width) for value in values
        )

    return "\n".join([
        row("n:", staircase.n),
        row("delta:", staircase.delta),
    ]) + "\n"
