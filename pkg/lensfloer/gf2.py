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

"""Dense linear algebra over the field with two elements.

Matrices are numpy ``uint8`` arrays holding zeros and ones; rows are
eliminated with XOR.
"""

from typing import List, Sequence, Tuple

import numpy as np


def as_gf2(matrix) -> np.ndarray:
    """Copy a matrix into a fresh ``uint8`` array reduced modulo 2."""
    return (np.asarray(matrix, dtype=np.int64) % 2).astype(np.uint8)


def zeros(rows: int, columns: int) -> np.ndarray:
    return np.zeros((rows, columns), dtype=np.uint8)


def row_echelon(matrix) -> Tuple[np.ndarray, List[int]]:
    """Row reduce a binary matrix.

    Returns:
        The row echelon form and the list of pivot columns, whose length is
        the rank of the matrix.
    """
    reduced = as_gf2(matrix)
    rows, columns = reduced.shape
    pivots: List[int] = []
    pivot_row = 0

    for column in range(columns):
        if pivot_row == rows:
            break

        candidates = np.nonzero(reduced[pivot_row:, column])[0]

        if candidates.size == 0:
            continue

        found = pivot_row + int(candidates[0])

        if found != pivot_row:
            reduced[[pivot_row, found]] = reduced[[found, pivot_row]]

        below = np.nonzero(reduced[pivot_row + 1:, column])[0]
        for row in below + pivot_row + 1:
            reduced[row] ^= reduced[pivot_row]

        pivots.append(column)
        pivot_row += 1

    return reduced, pivots


def rank(matrix) -> int:
    matrix = np.asarray(matrix)

    if matrix.size == 0:
        return 0

    return len(row_echelon(matrix)[1])


def multiply(left, right) -> np.ndarray:
    product = np.asarray(left, dtype=np.int64) @ np.asarray(
        right, dtype=np.int64
    )
    return as_gf2(product)


def is_zero(matrix) -> bool:
    return not np.any(np.asarray(matrix))


def block(matrix, rows: Sequence[int], columns: Sequence[int]) -> np.ndarray:
    """Extract the sub-matrix on the given row and column indices."""
    matrix = np.asarray(matrix, dtype=np.uint8)

    if not rows or not columns:
        return zeros(len(rows), len(columns))

    return matrix[np.ix_(list(rows), list(columns))]
