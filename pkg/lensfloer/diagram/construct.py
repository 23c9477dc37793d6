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

"""Constructors and isotopies of doubly pointed genus-one diagrams."""

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd
from typing import List, NamedTuple, Optional, Tuple

from ..exceptions import BadParams, IllegalSite
from .cells import (ABOVE, BELOW, CellStructure, Dart, head, place,
                    validate)
from .log import logger
from .models import DOWN, UP, Basepoint, Crossing, CrossingSeq, Diagram

Z_FRACTION = Fraction(1, 3)
W_FRACTION = Fraction(2, 3)

Anchor = Tuple[Fraction, str]


@dataclass(frozen=True)
class FingerSite:
    """Where a finger move starts.

    The finger is pushed from the β-arc that precedes the chosen α-edge
    side in the boundary walk of ``face``, across that α-edge.

    Args:
        face (int): Index of the face in the cell structure.
        alpha_edge (int): Index of the α-edge, α-edges are numbered by the
            position of their western endpoint.
        side (str): ``"above"`` or ``"below"``, the side of α the face lies
            on.
    """

    face:       int
    alpha_edge: int
    side:       str


class _Pieces(NamedTuple):
    root: Anchor
    tip: Anchor
    outer: Anchor
    inner: Anchor
    tip_arc: int


def _opposite(side: str) -> str:
    return BELOW if side == ABOVE else ABOVE


def normalize_params(p: int, q: int) -> int:
    if p < 1:
        raise BadParams("p must be positive, got {}".format(p))

    q = q % p

    if p > 1 and gcd(q, p) != 1:
        raise BadParams(
            "q={} is not coprime to p={}".format(q, p)
        )

    return q


def place_pair(beta: CrossingSeq, z: Anchor, w: Anchor) -> Tuple[Basepoint,
                                                                Basepoint]:
    return (
        place(beta, z[0], z[1], Z_FRACTION),
        place(beta, w[0], w[1], W_FRACTION),
    )


def simple_knot(p: int, q: int, k: int) -> Diagram:
    """The simple knot of class k in L(p,q).

    β is the straight curve through the crossings j/p, traversed in the
    order 0, q, 2q, ... modulo p. z sits above the α-edge starting at 0, w
    above the α-edge starting at k/p.

    Raises a BadParams error if p isn't positive, k isn't a residue modulo
    p or q isn't coprime to p.
    """
    q = normalize_params(p, q)

    if not 0 <= k < p:
        raise BadParams("k={} is not a residue modulo {}".format(k, p))

    positions = [Fraction((i * q) % p, p) for i in range(p)]
    windings = [
        int(positions[i] + Fraction(q, p) - positions[(i + 1) % p])
        for i in range(p)
    ]
    beta = CrossingSeq.build(positions, [UP] * p, windings)
    z, w = place_pair(beta, (Fraction(0), ABOVE), (Fraction(k, p), ABOVE))

    return Diagram(beta, z, w, "simple_knot({},{},{})".format(p, q, k))


def _push(beta: CrossingSeq, root: Dart, across: Dart) -> Tuple[CrossingSeq,
                                                                _Pieces]:
    """Push β from the arc of ``root`` across the α-dart ``across``.

    ``root`` is the β-dart that precedes ``across`` in a face boundary, so
    both meet at the crossing v. The finger crosses the α-edge at one and
    two thirds of its length, measured from v.
    """
    j = root.edge
    n = beta.n
    v = head(beta, root)
    v_pos = beta.pos(v)
    length = beta.alpha_edge_length(across.edge)
    west, _ = beta.alpha_edge(across.edge)
    step = length / 3 if across.forward else -length / 3
    near, far = v_pos + step, v_pos + 2 * step

    # Shift between the face walk coordinates and the preferred lift of j.
    shift = -beta.windings[j] if root.forward else 0

    if root.forward:
        a_lift, b_lift = far, near
    else:
        a_lift, b_lift = near, far

    face_side = ABOVE if across.forward else BELOW
    a_dir = DOWN if face_side == ABOVE else UP

    a_floor, b_floor = floor(a_lift), floor(b_lift)
    new_windings = [
        a_floor - shift,
        b_floor - a_floor,
        shift + beta.windings[j] - b_floor,
    ]
    inserted = [Crossing(a_lift % 1, a_dir), Crossing(b_lift % 1, -a_dir)]

    crossings = list(beta.crossings)
    windings = list(beta.windings)
    crossings[j + 1:j + 1] = inserted
    windings[j:j + 1] = new_windings

    if across.forward:
        wests = (v_pos, near % 1, far % 1)
    else:
        wests = (near % 1, far % 1, beta.pos(west))

    far_side = _opposite(face_side)
    pieces = _Pieces(
        root=(wests[0], face_side),
        tip=(wests[1], far_side),
        outer=(wests[2], face_side),
        inner=(wests[0], far_side),
        tip_arc=j + 1,
    )

    assert n + 2 == len(crossings)
    return beta.replace(crossings, windings), pieces


def _site_dart(cells: CellStructure, site: FingerSite) -> Dart:
    n = cells.beta.n

    if site.side not in (ABOVE, BELOW):
        raise IllegalSite("Unknown side {!r}".format(site.side))

    if not 0 <= site.alpha_edge < n or not 0 <= site.face < cells.F:
        raise IllegalSite("No such face or α-edge: {}".format(site))

    dart = Dart(False, site.alpha_edge, site.side == ABOVE)

    if cells.face_of[dart] != site.face:
        raise IllegalSite(
            "The α-edge {} is not on the {} boundary of face {}".format(
                site.alpha_edge, site.side, site.face
            )
        )

    return dart


def finger_sites(diagram: Diagram) -> List[FingerSite]:
    """All legal finger move sites, ordered by face and boundary walk."""
    cells = validate(diagram)
    sites = []

    for face, walk in enumerate(cells.faces):
        for dart in walk:
            if not dart.beta:
                sites.append(FingerSite(
                    face, dart.edge, ABOVE if dart.forward else BELOW
                ))

    return sites


def default_anchor(cells: CellStructure, face: int) -> Anchor:
    return cells.anchor(cells.alpha_sides(face)[0])


def _finger_step(
    diagram: Diagram,
    cells: CellStructure,
    site: FingerSite,
) -> Tuple[Diagram, CellStructure, FingerSite]:
    across = _site_dart(cells, site)
    walk = cells.faces[site.face]
    root = walk[walk.index(across) - 1]
    assert root.beta

    beta, pieces = _push(diagram.beta, root, across)
    far_face = cells.right(across)

    anchors = []
    for face in (cells.z_face, cells.w_face):
        if face == site.face:
            anchors.append(pieces.outer)
        elif face == far_face:
            anchors.append(pieces.inner)
        else:
            anchors.append(default_anchor(cells, face))

    z, w = place_pair(beta, anchors[0], anchors[1])
    moved = Diagram(beta, z, w, diagram.label)
    moved_cells = validate(moved)

    # Continue from the outer side of the tip.
    tip_face = moved_cells.face_of[
        Dart(False, beta.alpha_edge_at(pieces.tip[0]), pieces.tip[1] == ABOVE)
    ]
    outer = next(
        d for d in (Dart(True, pieces.tip_arc, True),
                    Dart(True, pieces.tip_arc, False))
        if moved_cells.left(d) != tip_face
    )
    outer_face = moved_cells.left(outer)
    outer_walk = moved_cells.faces[outer_face]
    following = outer_walk[(outer_walk.index(outer) + 1) % len(outer_walk)]
    next_site = FingerSite(
        outer_face, following.edge, ABOVE if following.forward else BELOW
    )

    return moved, moved_cells, next_site


def finger_move(
    diagram: Diagram,
    site: FingerSite,
    depth: int = 1,
) -> Diagram:
    """Push a finger of β across α, adding two crossings per unit of depth.

    The finger starts at ``site`` and, for depth larger than one, keeps
    going from its tip across the next α-edge. The isotopy never crosses a
    basepoint.

    Raises an IllegalSite error if the site isn't an α-edge side of the
    chosen face or the depth isn't positive.
    """
    if depth < 1:
        raise IllegalSite(
            "Finger depth must be positive, got {}".format(depth)
        )

    cells = validate(diagram)
    moved = diagram

    for _ in range(depth):
        moved, cells, site = _finger_step(moved, cells, site)

    logger.debug("Finger move of depth {} on {!r}: {} -> {} crossings".format(
        depth, diagram.label, diagram.n, moved.n
    ))

    return moved.relabel("finger({})".format(diagram.label))


def t_l(p: int, q: int) -> Diagram:
    """The straight diagram of L(p,q) with one finger move.

    The finger is pushed from the strand through 0 across the α-edge east
    of 0. z sits in the bigon at the root of the finger, w in the bigon at
    its tip.
    """
    q = normalize_params(p, q)
    straight = simple_knot(p, q, 0)
    cells = validate(straight)

    across = Dart(False, 0, True)
    walk = cells.faces[cells.left(across)]
    root = walk[walk.index(across) - 1]
    beta, pieces = _push(straight.beta, root, across)
    z, w = place_pair(beta, pieces.root, pieces.tip)

    return Diagram(beta, z, w, "t_l({},{})".format(p, q))


def t_r(p: int, q: int) -> Diagram:
    """The mirror partner of ``t_l``, again a diagram in L(p,q)."""
    q = normalize_params(p, q)
    return mirror(t_l(p, -q)).relabel("t_r({},{})".format(p, q))


def mirror(diagram: Diagram) -> Diagram:
    """Reflect a diagram along a vertical line, x goes to -x.

    The result lives in L(p,-q) and represents the mirror knot.
    """
    beta = diagram.beta
    n = beta.n
    shifts = [1 if c.pos > 0 else 0 for c in beta.crossings]
    crossings = [Crossing((-c.pos) % 1, c.dir) for c in beta.crossings]
    windings = [
        -beta.windings[j] + shifts[j] - shifts[(j + 1) % n] for j in range(n)
    ]

    return Diagram(
        beta.replace(crossings, windings),
        diagram.z.mirrored(),
        diagram.w.mirrored(),
        "mirror({})".format(diagram.label),
    )


def reverse(diagram: Diagram) -> Diagram:
    """Swap the basepoints, which reverses the orientation of the knot."""
    return Diagram(
        diagram.beta, diagram.w, diagram.z, "reverse({})".format(diagram.label)
    )


def twist(diagram: Diagram, turns: int = 1) -> Diagram:
    """Apply Dehn twists along α.

    Every through strand winds ``turns`` more times around the annulus,
    caps are unchanged. The knot and its lens space stay the same.
    """
    cells = validate(diagram)
    beta = diagram.beta
    windings = [
        w + turns * arc_dir if arc_dir else w
        for w, arc_dir in zip(beta.windings, (a.dy for a in beta.arcs))
    ]
    twisted = beta.replace(beta.crossings, windings)
    z, w = place_pair(
        twisted,
        default_anchor(cells, cells.z_face),
        default_anchor(cells, cells.w_face),
    )

    return Diagram(twisted, z, w, "twist({},{})".format(diagram.label, turns))


def straight_like(diagram: Diagram, cells: Optional[CellStructure] = None):
    """Whether every face of the diagram is a quadrilateral."""
    cells = cells or validate(diagram)
    return diagram.n == diagram.beta.p and all(
        cells.is_quadrilateral(f) for f in range(cells.F)
    )
