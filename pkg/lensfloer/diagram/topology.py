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

from collections import deque
from typing import Dict, Tuple

from .cells import CellStructure, validate
from .models import Diagram


def _potential(cells: CellStructure, start: int, across_beta: bool):
    """Signed crossing counts along paths in the dual graph.

    Only edges of one curve are crossed. Stepping from the left of a
    forward dart to its right counts +1.
    """
    potential: Dict[int, int] = {start: 0}
    queue = deque([start])

    while queue:
        face = queue.popleft()

        for dart in cells.faces[face]:
            if dart.beta != across_beta:
                continue

            neighbour = cells.right(dart)
            if neighbour in potential:
                continue

            step = 1 if dart.forward else -1
            potential[neighbour] = potential[face] + step
            queue.append(neighbour)

    return potential


def ambient(diagram: Diagram) -> Tuple[int, int]:
    """Identify the lens space L(p,q) a diagram lives in."""
    validate(diagram)
    beta = diagram.beta
    p = beta.p
    return p, beta.h % p


def beta_intersection(cells: CellStructure) -> int:
    """Signed number of β-arcs crossed on the way from z to w.

    The path stays off α, so this is the intersection number of the knot
    with β.
    """
    return _potential(cells, cells.z_face, True)[cells.w_face]


def alpha_intersection(cells: CellStructure) -> int:
    """Signed number of α-edges crossed on the way from w to z, off β."""
    return _potential(cells, cells.w_face, False)[cells.z_face]


def homology_class(diagram: Diagram) -> int:
    """The class of the knot in H₁(L(p,q)) ≅ ℤ/p.

    The knot is the union of an arc from z to w avoiding α and an arc from
    w to z avoiding β. Its class is identified with a residue through the
    algebraic intersection number with β.
    """
    cells = validate(diagram)
    return beta_intersection(cells) % diagram.beta.p
