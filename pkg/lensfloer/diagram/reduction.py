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

"""Simplification of diagrams by cancelling empty bigons.

An empty bigon always contains an innermost bigon that is a single face of
α ∪ β, so it is enough to look for two-sided faces that contain neither
basepoint.
"""

from typing import List, Optional

from .cells import CellStructure, validate
from .construct import Anchor, place_pair
from .log import logger
from .models import Diagram


def empty_bigon_faces(cells: CellStructure) -> List[int]:
    basepoint_faces = (cells.z_face, cells.w_face)
    return [
        face for face in range(cells.F)
        if cells.is_bigon_face(face) and face not in basepoint_faces
    ]


def _reanchor(
    cells: CellStructure,
    face: int,
    corners: set,
    merged_west,
) -> Anchor:
    beta = cells.beta
    touching: Optional[Anchor] = None

    for dart in cells.alpha_sides(face):
        ends = set(beta.alpha_edge(dart.edge))
        west, side = cells.anchor(dart)

        if not ends & corners:
            return west, side

        if ends != corners and touching is None:
            touching = (merged_west, side)

    assert touching is not None
    return touching


def cancel_bigon_face(
    diagram: Diagram,
    cells: CellStructure,
    face: int,
) -> Diagram:
    """Isotope β across a two-sided face, removing its two corners."""
    beta = diagram.beta
    n = beta.n
    arc = next(d for d in cells.faces[face] if d.beta).edge
    alpha = next(d for d in cells.faces[face] if not d.beta).edge
    first, second = arc, (arc + 1) % n
    assert n >= 3

    before = (arc - 1) % n
    merged = (
        beta.windings[before] + beta.windings[arc] + beta.windings[second]
    )

    crossings = []
    windings = []
    for j in range(n):
        if j in (first, second):
            continue
        crossings.append(beta.crossings[j])
        windings.append(merged if j == before else beta.windings[j])

    west_of_pair = beta.alpha_edge((alpha - 1) % n)[0]
    merged_west = beta.pos(west_of_pair)
    corners = {first, second}

    cancelled = beta.replace(crossings, windings)
    z, w = place_pair(
        cancelled,
        _reanchor(cells, cells.z_face, corners, merged_west),
        _reanchor(cells, cells.w_face, corners, merged_west),
    )

    return Diagram(cancelled, z, w, diagram.label)


def reduce(diagram: Diagram) -> Diagram:
    """Cancel empty bigons until none is left.

    The bigon whose corner crossings come first in β-order is cancelled
    first, so the result is deterministic.
    """
    cells = validate(diagram)
    start = diagram.n

    while True:
        candidates = empty_bigon_faces(cells)

        if not candidates:
            break

        face = min(candidates, key=lambda f: sorted(cells.corners(f)))
        logger.debug("Cancelling bigon face {} with corners {}".format(
            face, cells.corners(face)
        ))
        diagram = cancel_bigon_face(diagram, cells, face)
        cells = validate(diagram)

    if diagram.n != start:
        logger.info("Reduced {!r} from {} to {} crossings".format(
            diagram.label, start, diagram.n
        ))

    return diagram
