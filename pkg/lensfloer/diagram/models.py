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

"""Value types describing a genus-one doubly pointed Heegaard diagram.

The torus is cut open along α into an annulus, drawn as the strip
ℝ×[0,1] modulo horizontal unit translations. The bottom boundary y=0 is the
copy of α seen from above, the top boundary y=1 the copy seen from below.
β is stored as the cyclic sequence of its crossings with α together with an
integer winding for every β-arc between consecutive crossings.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence, Tuple

from ..exceptions import BadParams

UP = 1
DOWN = -1


class ArcKind(Enum):
    up = "up"
    down = "down"
    bottom_cap = "bottom cap"
    top_cap = "top cap"


@dataclass(frozen=True)
class Crossing:
    """An intersection point of β with α.

    Args:
        pos (Fraction): Horizontal coordinate on α, in [0,1).
        dir (int): ``+1`` if β crosses α upwards here, ``-1`` otherwise.
    """

    pos: Fraction
    dir: int

    def __post_init__(self):
        object.__setattr__(self, "pos", Fraction(self.pos))

        if not 0 <= self.pos < 1:
            raise BadParams(
                "Crossing position {} is outside [0,1)".format(self.pos)
            )

        if self.dir not in (UP, DOWN):
            raise BadParams(
                "Crossing direction must be +1 or -1, got {}".format(self.dir)
            )


@dataclass(frozen=True)
class Arc:
    """The preferred lift of one β-arc in the strip.

    Attributes:
        index (int): The arc index j, the arc runs from crossing j to
            crossing j+1.
        start (Fraction): Lifted horizontal coordinate of the start point.
        end (Fraction): Lifted horizontal coordinate of the end point.
        kind (ArcKind): Whether the arc is a through strand or a cap.
        dy (int): Vertical displacement of the arc in the universal cover of
            the torus.
    """

    index: int
    start: Fraction
    end: Fraction
    kind: ArcKind
    dy: int

    @property
    def dx(self) -> Fraction:
        return self.end - self.start

    @property
    def is_cap(self) -> bool:
        return self.kind in (ArcKind.bottom_cap, ArcKind.top_cap)

    @property
    def bottom(self) -> Fraction:
        """Lifted coordinate of the endpoint on the bottom boundary."""
        if self.kind is ArcKind.down:
            return self.end
        return self.start

    @property
    def top(self) -> Fraction:
        """Lifted coordinate of the endpoint on the top boundary."""
        if self.kind is ArcKind.down:
            return self.start
        return self.end


def arc_kind(start_dir: int, end_dir: int) -> ArcKind:
    return {
        (UP, UP): ArcKind.up,
        (DOWN, DOWN): ArcKind.down,
        (UP, DOWN): ArcKind.bottom_cap,
        (DOWN, UP): ArcKind.top_cap,
    }[(start_dir, end_dir)]


@dataclass(frozen=True)
class CrossingSeq:
    """The curve β, encoded by its crossings with α in traversal order.

    Args:
        crossings (Tuple[Crossing]): The n ≥ 1 crossings, in the order in
            which β passes through them.
        windings (Tuple[int]): For every arc j the integer w_j such that the
            preferred lift of the arc runs from ``pos_j`` to
            ``pos_{j+1} + w_j``.
    """

    crossings: Tuple[Crossing, ...]
    windings:  Tuple[int, ...]

    arcs:   Tuple[Arc, ...] = field(init=False, repr=False, compare=False)
    order:  Tuple[int, ...] = field(init=False, repr=False, compare=False)
    rank:   Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        crossings = tuple(self.crossings)
        windings = tuple(int(w) for w in self.windings)

        if not crossings:
            raise BadParams("A diagram needs at least one crossing")

        if len(crossings) != len(windings):
            raise BadParams(
                "Got {} crossings but {} windings".format(
                    len(crossings), len(windings)
                )
            )

        positions = [c.pos for c in crossings]
        if len(set(positions)) != len(positions):
            raise BadParams("Crossing positions must be pairwise distinct")

        object.__setattr__(self, "crossings", crossings)
        object.__setattr__(self, "windings", windings)

        n = len(crossings)
        arcs = []

        for j, crossing in enumerate(crossings):
            following = crossings[(j + 1) % n]
            arcs.append(Arc(
                j,
                crossing.pos,
                following.pos + windings[j],
                arc_kind(crossing.dir, following.dir),
                (crossing.dir + following.dir) // 2,
            ))

        order = tuple(sorted(range(n), key=lambda j: crossings[j].pos))
        rank = [0] * n
        for r, j in enumerate(order):
            rank[j] = r

        object.__setattr__(self, "arcs", tuple(arcs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "rank", tuple(rank))

    @classmethod
    def build(
        cls,
        positions: Sequence[Fraction],
        dirs: Sequence[int],
        windings: Sequence[int],
    ) -> "CrossingSeq":
        return cls(
            tuple(Crossing(Fraction(x), d) for x, d in zip(positions, dirs)),
            tuple(windings),
        )

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def v(self) -> int:
        """Vertical homology class of β."""
        return sum(c.dir for c in self.crossings)

    @property
    def h(self) -> int:
        """Horizontal homology class of β."""
        return sum(self.windings)

    @property
    def p(self) -> int:
        return abs(self.v)

    def pos(self, j: int) -> Fraction:
        return self.crossings[j].pos

    def dir(self, j: int) -> int:
        return self.crossings[j].dir

    def alpha_edge(self, i: int) -> Tuple[int, int]:
        """Crossings at the west and east end of the α-edge ``i``."""
        n = self.n
        return self.order[i], self.order[(i + 1) % n]

    def alpha_edge_length(self, i: int) -> Fraction:
        west, east = self.alpha_edge(i)
        if self.n == 1:
            return Fraction(1)
        return (self.pos(east) - self.pos(west)) % 1

    def alpha_edge_at(self, west_pos: Fraction) -> int:
        """Index of the α-edge whose western endpoint sits at ``west_pos``."""
        for i, j in enumerate(self.order):
            if self.pos(j) == west_pos:
                return i
        raise KeyError(west_pos)

    def replace(
        self,
        crossings: Sequence[Crossing],
        windings: Sequence[int],
    ) -> "CrossingSeq":
        return CrossingSeq(tuple(crossings), tuple(windings))


@dataclass(frozen=True)
class Basepoint:
    """A marked point in the annulus, away from α and β.

    Args:
        x (Fraction): Horizontal coordinate in [0,1).
        y (Fraction): Height in the open interval (0,1).
    """

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

        if not 0 <= self.x < 1:
            raise BadParams("Basepoint x={} is outside [0,1)".format(self.x))

        if not 0 < self.y < 1:
            raise BadParams("Basepoint y={} is outside (0,1)".format(self.y))

    def mirrored(self) -> "Basepoint":
        return Basepoint((-self.x) % 1, self.y)


@dataclass(frozen=True)
class Diagram:
    """A doubly pointed genus-one Heegaard diagram.

    Args:
        beta (CrossingSeq): The β curve.
        z (Basepoint): The basepoint z.
        w (Basepoint): The basepoint w.
        label (str, optional): Free text describing the diagram.
    """

    beta:  CrossingSeq
    z:     Basepoint
    w:     Basepoint
    label: str = ""

    @property
    def n(self) -> int:
        return self.beta.n

    def relabel(self, label: str) -> "Diagram":
        return Diagram(self.beta, self.z, self.w, label)
