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


class InputError(Exception):
    pass


class BadParams(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=1, column=1):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self):
        return "line {}, column {}: {}".format(
            self.line, self.column, self.message
        )


class DiagramError(InputError):
    pass


class NotEmbedded(DiagramError):
    pass


class NotCellular(DiagramError):
    pass


class BasepointOnCurve(DiagramError):
    pass


class BetaNullHomologous(DiagramError):
    pass


class IllegalSite(DiagramError):
    pass


class StaircaseError(InputError):
    pass


class NotLSpaceAdmissible(StaircaseError):
    def __init__(self, exponent, *args):
        super().__init__(*args)
        self.exponent = exponent


class SlopeTooSmall(StaircaseError):
    pass


class InternalError(Exception):
    pass


class NotASquareZero(InternalError):
    pass


class NoDomain(InternalError):
    pass


class GradingMismatch(InternalError):
    pass


class RankMismatch(InternalError):
    pass


class NegativeRank(InternalError):
    pass
