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

"""Cell structure of α ∪ β on the torus.

The crossings are the vertices; α is cut into n α-edges between
horizontally consecutive crossings and β into its n arcs. Faces are traced
from the rotation system, every face is the face to the left of the darts
of its boundary walk.
"""

from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Dict, List, NamedTuple, Optional, Tuple

from ..exceptions import (BasepointOnCurve, BetaNullHomologous, NotCellular,
                          NotEmbedded)
from .log import logger
from .models import ArcKind, Basepoint, CrossingSeq, Diagram, UP

ABOVE = "above"
BELOW = "below"


class Dart(NamedTuple):
    """An oriented edge.

    ``beta`` tells whether the edge is a β-arc or an α-edge, ``forward``
    whether the dart follows the orientation of the edge (β: its traversal
    direction, α: eastwards).
    """

    beta: bool
    edge: int
    forward: bool

    def reverse(self) -> "Dart":
        return Dart(self.beta, self.edge, not self.forward)

    def __str__(self):
        return "{}{}{}".format(
            "b" if self.beta else "a", self.edge, "+" if self.forward else "-"
        )


def tail(beta: CrossingSeq, dart: Dart) -> int:
    n = beta.n

    if dart.beta:
        return dart.edge if dart.forward else (dart.edge + 1) % n

    west, east = beta.alpha_edge(dart.edge)
    return west if dart.forward else east


def head(beta: CrossingSeq, dart: Dart) -> int:
    return tail(beta, dart.reverse())


def rotation(
    beta: CrossingSeq,
    crossing: int,
) -> Tuple[Dart, Dart, Dart, Dart]:
    """The four darts leaving a crossing, counterclockwise from east."""
    n = beta.n
    r = beta.rank[crossing]
    east = Dart(False, r, True)
    west = Dart(False, (r - 1) % n, False)
    outgoing = Dart(True, crossing, True)
    incoming = Dart(True, (crossing - 1) % n, False)

    if beta.dir(crossing) == UP:
        return east, outgoing, west, incoming

    return east, incoming, west, outgoing


def all_darts(n: int) -> List[Dart]:
    return [
        Dart(is_beta, edge, forward)
        for is_beta in (False, True)
        for forward in (True, False)
        for edge in range(n)
    ]


def trace_faces(beta: CrossingSeq) -> Tuple[List[Tuple[Dart, ...]],
                                             Dict[Dart, int]]:
    previous: Dict[Dart, Dart] = {}

    for crossing in range(beta.n):
        darts = rotation(beta, crossing)
        for i, dart in enumerate(darts):
            previous[dart] = darts[i - 1]

    faces: List[Tuple[Dart, ...]] = []
    face_of: Dict[Dart, int] = {}

    for start in all_darts(beta.n):
        if start in face_of:
            continue

        walk = []
        dart = start

        while dart not in face_of:
            face_of[dart] = len(faces)
            walk.append(dart)
            dart = previous[dart.reverse()]

        faces.append(tuple(walk))

    return faces, face_of


@dataclass(frozen=True)
class CellStructure:
    """The map that α and β cut the torus into.

    Attributes:
        beta (CrossingSeq): The curve the structure was built from.
        faces (Tuple[Tuple[Dart]]): Boundary walk of every face.
        face_of (Dict[Dart, int]): The face to the left of every dart.
        z_face (int): The face containing z.
        w_face (int): The face containing w.
        euler_check (int): V - E + F, zero for every valid diagram.
    """

    beta:        CrossingSeq
    faces:       Tuple[Tuple[Dart, ...], ...]
    face_of:     Dict[Dart, int] = field(repr=False)
    z_face:      int
    w_face:      int
    euler_check: int

    @property
    def vertices(self) -> range:
        return range(self.beta.n)

    @property
    def alpha_edges(self) -> List[Tuple[int, int]]:
        return [self.beta.alpha_edge(i) for i in range(self.beta.n)]

    @property
    def beta_edges(self) -> List[Tuple[int, int]]:
        n = self.beta.n
        return [(j, (j + 1) % n) for j in range(n)]

    @property
    def V(self) -> int:
        return self.beta.n

    @property
    def E(self) -> int:
        return 2 * self.beta.n

    @property
    def F(self) -> int:
        return len(self.faces)

    @property
    def disk_bounding(self) -> bool:
        """Whether z and w share a face, the knot then bounds a disk."""
        return self.z_face == self.w_face

    def left(self, dart: Dart) -> int:
        return self.face_of[dart]

    def right(self, dart: Dart) -> int:
        return self.face_of[dart.reverse()]

    def corners(self, face: int) -> Tuple[int, ...]:
        """Crossings at the corners of a face, in boundary order."""
        return tuple(head(self.beta, d) for d in self.faces[face])

    def euler_measure(self, face: int) -> Fraction:
        return 1 - Fraction(len(self.faces[face]), 4)

    def quadrants(self, crossing: int) -> Tuple[int, int, int, int]:
        """Faces in the NE, NW, SW and SE quadrants of a crossing."""
        return tuple(  # type: ignore
            self.face_of[d] for d in rotation(self.beta, crossing)
        )

    def alpha_sides(self, face: int) -> List[Dart]:
        return [d for d in self.faces[face] if not d.beta]

    def is_bigon_face(self, face: int) -> bool:
        return len(self.faces[face]) == 2

    def is_quadrilateral(self, face: int) -> bool:
        return len(self.faces[face]) == 4

    def anchor(self, dart: Dart) -> Tuple[Fraction, str]:
        """Describe the α-edge side of an α-dart by its western endpoint."""
        west, _ = self.beta.alpha_edge(dart.edge)
        return self.beta.pos(west), ABOVE if dart.forward else BELOW


class CanonicalDrawing:
    """A concrete drawing of β in the annulus used to locate basepoints.

    Caps on the bottom boundary are drawn as rectangles whose horizontal
    bar sits at height ``rank / (3(n+1))``, where the rank of a cap is one
    more than the largest rank nested inside it. Caps on the top boundary
    mirror this below y=1. Through strands are vertical in the bottom and
    top thirds and straight segments in the middle third.
    """

    def __init__(self, beta: CrossingSeq):
        self.beta = beta
        self.unit = Fraction(1, 3 * (beta.n + 1))
        self.strands: List[Tuple[Fraction, Fraction, int]] = []
        self.caps: Dict[ArcKind, List[Tuple[Fraction, Fraction, int]]] = {
            ArcKind.bottom_cap: [],
            ArcKind.top_cap: [],
        }
        self.levels: Dict[int, int] = {}
        self.sorted_positions = [beta.pos(j) for j in beta.order]

        for arc in beta.arcs:
            if arc.is_cap:
                lo, hi = sorted((arc.start, arc.end))
                shift = floor(lo)
                self.caps[arc.kind].append((lo - shift, hi - shift, arc.index))
            else:
                shift = floor(arc.bottom)
                self.strands.append(
                    (arc.bottom - shift, arc.top - shift, arc.index)
                )

        self.strands.sort()

    def check_embedded(self):
        strands = self.strands

        for (_, top, j), (_, next_top, k) in zip(strands, strands[1:]):
            if not top < next_top:
                raise NotEmbedded(
                    "The β-arcs {} and {} cross each other".format(j, k)
                )

        if strands and not strands[-1][1] < strands[0][1] + 1:
            raise NotEmbedded(
                "The β-arcs {} and {} cross each other".format(
                    strands[-1][2], strands[0][2]
                )
            )

        for kind in (ArcKind.bottom_cap, ArcKind.top_cap):
            caps = self.caps[kind]
            feet = [
                (bottom if kind is ArcKind.bottom_cap else top) % 1
                for bottom, top, _ in strands
            ]

            for i, (lo, hi, j) in enumerate(caps):
                if hi - lo >= 1:
                    raise NotEmbedded(
                        "The β-arc {} wraps around the annulus".format(j)
                    )

                for foot in feet:
                    if 0 < (foot - lo) % 1 < hi - lo:
                        raise NotEmbedded(
                            "A through strand ends inside the β-arc "
                            "{}".format(j)
                        )

                for other_lo, other_hi, k in caps[i + 1:]:
                    for t in (-1, 0, 1):
                        a, b = other_lo + t, other_hi + t
                        if lo < a < hi < b or a < lo < b < hi:
                            raise NotEmbedded(
                                "The β-arcs {} and {} interleave".format(j, k)
                            )

        for kind in (ArcKind.bottom_cap, ArcKind.top_cap):
            self._rank_caps(self.caps[kind])

    def _rank_caps(self, caps):
        ranked: List[Tuple[Fraction, Fraction, int]] = []

        for lo, hi, j in sorted(caps, key=lambda cap: cap[1] - cap[0]):
            inner = [
                self.levels[k] for a, b, k in ranked
                if any(lo < a + t and b + t < hi for t in (-1, 0, 1))
            ]
            self.levels[j] = 1 + max(inner, default=0)
            ranked.append((lo, hi, j))

    def alpha_edge_containing(self, x: Fraction) -> int:
        return (bisect_left(self.sorted_positions, x) - 1) % self.beta.n

    def _outer_dart(self, j: int) -> Dart:
        arc = self.beta.arcs[j]
        eastward = arc.end > arc.start

        if arc.kind is ArcKind.bottom_cap:
            return Dart(True, j, eastward)
        return Dart(True, j, not eastward)

    def locate(self, point: Basepoint) -> Dart:
        """Find a dart whose left face contains the point.

        Raises a BasepointOnCurve error if the point lies on α or β.
        """
        x, y = point.x, point.y

        if self._on_leg(x, y):
            raise BasepointOnCurve(
                "The point ({}, {}) lies on a vertical β segment".format(x, y)
            )

        if y < Fraction(1, 3):
            return self._locate_in_band(x, y, ArcKind.bottom_cap)

        if y > Fraction(2, 3):
            return self._locate_in_band(x, y, ArcKind.top_cap)

        best: Optional[Tuple[Fraction, int]] = None

        for bottom, top, j in self.strands:
            crossing_x = bottom + (top - bottom) * (3 * y - 1)
            offset = (x - crossing_x) % 1

            if offset == 0:
                raise BasepointOnCurve(
                    "The point ({}, {}) lies on the β-arc {}".format(x, y, j)
                )

            if best is None or offset < best[0]:
                best = (offset, j)

        assert best is not None
        j = best[1]
        return Dart(True, j, self.beta.arcs[j].kind is not ArcKind.up)

    def _on_leg(self, x: Fraction, y: Fraction) -> bool:
        """Whether the point sits on the vertical foot of a β-arc.

        Every crossing has one foot in the bottom third and one in the top
        third. A through strand's foot fills its third, a cap's foot ends
        at the cap's bar.
        """
        if x not in self.sorted_positions:
            return False

        if y < Fraction(1, 3):
            kind, height = ArcKind.bottom_cap, y
        elif y > Fraction(2, 3):
            kind, height = ArcKind.top_cap, 1 - y
        else:
            return False

        for lo, hi, j in self.caps[kind]:
            if x in (lo % 1, hi % 1):
                return height <= self.levels[j] * self.unit

        return True

    def _locate_in_band(self, x: Fraction, y: Fraction, kind: ArcKind) -> Dart:
        bottom = kind is ArcKind.bottom_cap
        best: Optional[Tuple[Fraction, int]] = None

        for lo, hi, j in self.caps[kind]:
            # Closed at both feet, above a foot the bar is still below us.
            if not (x - lo) % 1 <= hi - lo:
                continue

            level = self.levels[j] * self.unit
            if not bottom:
                level = 1 - level

            if level == y:
                raise BasepointOnCurve(
                    "The point ({}, {}) lies on the β-arc {}".format(x, y, j)
                )

            distance = y - level if bottom else level - y
            if distance > 0 and (best is None or distance < best[0]):
                best = (distance, j)

        if best is not None:
            return self._outer_dart(best[1])

        return Dart(False, self.alpha_edge_containing(x), bottom)


def place(
    beta: CrossingSeq,
    west_pos: Fraction,
    side: str,
    fraction: Fraction,
) -> Basepoint:
    """Put a point next to an α-edge, on the given side of α."""
    i = beta.alpha_edge_at(west_pos)
    x = (west_pos + fraction * beta.alpha_edge_length(i)) % 1
    height = Fraction(1, 6 * (beta.n + 1))

    if side == ABOVE:
        return Basepoint(x, height)
    return Basepoint(x, 1 - height)


def cells_of(beta: CrossingSeq) -> Tuple[CanonicalDrawing,
                                         List[Tuple[Dart, ...]],
                                         Dict[Dart, int]]:
    if beta.v == 0:
        raise BetaNullHomologous(
            "β is null-homologous in the vertical direction, the ambient "
            "manifold is not a rational homology sphere"
        )

    drawing = CanonicalDrawing(beta)
    drawing.check_embedded()

    faces, face_of = trace_faces(beta)
    euler = beta.n - 2 * beta.n + len(faces)

    if euler != 0:
        raise NotCellular(
            "The complement of α and β has V-E+F = {}".format(euler)
        )

    return drawing, faces, face_of


def validate(diagram: Diagram) -> CellStructure:
    """Check a diagram and build its cell structure.

    Raises:
        BetaNullHomologous: If β has vertical class zero.
        NotEmbedded: If two β-arcs are forced to cross.
        NotCellular: If a complementary region is not a disk.
        BasepointOnCurve: If z or w lies on α or β.
    """
    beta = diagram.beta
    drawing, faces, face_of = cells_of(beta)

    z_face = face_of[drawing.locate(diagram.z)]
    w_face = face_of[drawing.locate(diagram.w)]

    logger.debug(
        "Validated diagram {!r}: {} crossings, z in face {}, w in face "
        "{}".format(diagram.label, beta.n, z_face, w_face)
    )

    return CellStructure(
        beta,
        tuple(faces),
        face_of,
        z_face,
        w_face,
        beta.n - 2 * beta.n + len(faces),
    )
