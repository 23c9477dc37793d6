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

"""Knot Floer homology from the combinatorial bigon count.

The generators of the chain complex are the crossings of α and β. A
generator x hits y in the differential once for every bigon from x to y: an
index one domain bounded by an α-arc running from x to y and a β-arc
running back, with acute corners at both ends. Whether a bigon may cover
the basepoints depends on the complex:

``avoid_both``
    the hat complex of the knot, ``d_hat``
``avoid_w``
    the complex of the ambient manifold with basepoint w, ``d_z``
``avoid_z``
    the complex of the ambient manifold with basepoint z, ``d_w``

Given two generators in the same Spin^c class the boundary of a domain
connecting them is fixed up to adding the whole torus, so the search is
complete once the α and β sides of that boundary fit into the window of
the configuration.
"""

import json
from collections import defaultdict, deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from logbook import Logger

from . import gf2
from .config import DEFAULT_CONFIG, FloerConfig
from .diagram import CellStructure, Dart, Diagram, reduce, validate
from .exceptions import (BadParams, GradingMismatch, NegativeRank, NoDomain,
                         NotASquareZero, RankMismatch)
from .log import logger_group
from .schemas import Schemas, validate_json
from .staircase import AlexPoly

logger = Logger("lensfloer.floer")
logger_group.add_logger(logger)

__all__ = [
    "Mode",
    "Generator",
    "BigonCertificate",
    "ChainData",
    "RankTable",
    "spinc_partition",
    "find_bigons",
    "differential",
    "gradings",
    "chain_data",
    "hfk",
    "is_simple_fh",
    "detect_simple",
    "alexander_polynomial",
    "recognize_s3",
    "dz_euler",
]


QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)


class Mode(Enum):
    avoid_both = "avoid_both"
    avoid_w = "avoid_w"
    avoid_z = "avoid_z"

    def admits(self, covers_z: bool, covers_w: bool) -> bool:
        if self is Mode.avoid_both:
            return not covers_z and not covers_w
        if self is Mode.avoid_w:
            return not covers_w
        return not covers_z


@dataclass(frozen=True)
class Generator:
    crossing_id: int
    spinc:       int
    alex:        int
    maslov:      int


@dataclass(frozen=True)
class BigonCertificate:
    """A bigon from ``source`` to ``target``.

    Attributes:
        source (int): The crossing at the start of the α side.
        target (int): The crossing at the end of the α side.
        alpha_arc (Tuple[Dart]): The α-edges of the α side, in order.
        beta_arc (Tuple[Dart]): The β-arcs of the β side, from ``target``
            back to ``source``.
        lift_translate (Tuple[int, int]): Deck translation taking the
            reference lift of ``target`` to the corner of the lifted bigon,
            when ``source`` sits at its reference lift.
        covers_z (bool): Whether the bigon contains z.
        covers_w (bool): Whether the bigon contains w.
        domain (Tuple[int]): Multiplicity of every face.
    """

    source:         int
    target:         int
    alpha_arc:      Tuple[Dart, ...]
    beta_arc:       Tuple[Dart, ...]
    lift_translate: Tuple[int, int]
    covers_z:       bool
    covers_w:       bool
    domain:         Tuple[int, ...] = field(repr=False)


class _Lifts:
    """Reference lifts of the crossings, reached by following β from x_0."""

    def __init__(self, cells: CellStructure):
        beta = cells.beta
        self.x: List[Fraction] = [beta.pos(0)]
        self.y: List[int] = [0]

        for arc in beta.arcs[:-1]:
            self.x.append(self.x[-1] + arc.dx)
            self.y.append(self.y[-1] + arc.dy)


class _Connection(NamedTuple):
    """The boundary of the domains from ``source`` to ``target``."""

    alpha_coeffs: List[int]
    beta_coeffs: List[int]
    alpha_arc: Tuple[Dart, ...]
    beta_arc: Tuple[Dart, ...]
    alpha_length: Fraction
    loops: int
    translate: Tuple[int, int]


def spinc_partition(diagram: Diagram) -> Dict[int, int]:
    """Label every generator with its Spin^c class in ℤ/p.

    Two generators x and y share a class iff the loop made of an α-path
    from x to y and a β-path back is trivial in H₁(T²)/⟨α, β⟩. That group
    is read off the vertical displacement, so the label of x_j is the
    vertical displacement of β from x_0 to x_j, modulo p.
    """
    cells = validate(diagram)
    return _spinc(cells, _Lifts(cells))


def _spinc(cells: CellStructure, lifts: _Lifts) -> Dict[int, int]:
    p = cells.beta.p
    return {j: lifts.y[j] % p for j in range(cells.beta.n)}


def _connect(
    cells: CellStructure,
    lifts: _Lifts,
    source: int,
    target: int,
) -> Optional[_Connection]:
    beta = cells.beta
    n, v, h = beta.n, beta.v, beta.h
    wraps = source < target

    # Following β forward from target to source, without extra loops.
    forward = (source - target) % n
    dx = lifts.x[source] - lifts.x[target] + (h if wraps else 0)
    dy = lifts.y[source] - lifts.y[target] + (v if wraps else 0)

    if dy % v:
        return None

    loops = -dy // v
    beta_coeffs = [
        loops + (1 if (j - target) % n < forward else 0) for j in range(n)
    ]
    dx += loops * h

    if loops >= 0:
        beta_arc = tuple(
            Dart(True, (target + i) % n, True)
            for i in range(forward + loops * n)
        )
    else:
        beta_arc = tuple(
            Dart(True, (target - 1 - i) % n, False)
            for i in range(n - forward + (-loops - 1) * n)
        )

    # The α side closes the loop.
    length = -dx
    eastward = length > 0
    alpha_coeffs = [0] * n
    alpha_arc = []
    remaining = abs(length)
    edge = beta.rank[source] if eastward else beta.rank[source] - 1

    while remaining > 0:
        edge %= n
        alpha_coeffs[edge] += 1 if eastward else -1
        alpha_arc.append(Dart(False, edge, eastward))
        remaining -= beta.alpha_edge_length(edge)
        edge += 1 if eastward else -1

    assert remaining == 0

    corner = lifts.x[source] + length - lifts.x[target]
    assert corner.denominator == 1

    return _Connection(
        alpha_coeffs,
        beta_coeffs,
        tuple(alpha_arc),
        beta_arc,
        abs(length),
        loops if loops >= 0 else -loops - 1,
        (int(corner), lifts.y[source] - lifts.y[target]),
    )


def _solve(cells: CellStructure, connection: _Connection) -> Optional[
        List[int]]:
    """Find face multiplicities whose boundary is the connecting loop.

    The solution is unique up to adding a constant, the first face gets
    multiplicity zero.
    """
    multiplicities: List[Optional[int]] = [None] * cells.F
    multiplicities[0] = 0
    queue = deque([0])

    while queue:
        face = queue.popleft()
        here = multiplicities[face]
        assert here is not None

        for dart in cells.faces[face]:
            coeffs = (
                connection.beta_coeffs if dart.beta
                else connection.alpha_coeffs
            )
            coeff = coeffs[dart.edge] if dart.forward else -coeffs[dart.edge]
            neighbour = cells.right(dart)
            value = here - coeff

            if multiplicities[neighbour] is None:
                multiplicities[neighbour] = value
                queue.append(neighbour)
            elif multiplicities[neighbour] != value:
                return None

    assert all(m is not None for m in multiplicities)
    return multiplicities  # type: ignore


def _point_measure(
    cells: CellStructure,
    domain: Sequence[int],
    crossing: int,
) -> Fraction:
    return Fraction(sum(domain[f] for f in cells.quadrants(crossing)), 4)


def _euler_measure(cells: CellStructure, domain: Sequence[int]) -> Fraction:
    return sum(
        (m * cells.euler_measure(f) for f, m in enumerate(domain) if m),
        Fraction(0),
    )


def _bigon(
    cells: CellStructure,
    lifts: _Lifts,
    source: int,
    target: int,
    config: FloerConfig,
) -> Optional[BigonCertificate]:
    connection = _connect(cells, lifts, source, target)

    if connection is None:
        return None

    if (connection.alpha_length >= config.alpha_turns
            or connection.loops >= config.beta_turns):
        return None

    domain = _solve(cells, connection)
    if domain is None:
        return None

    # Fix the constant by asking for an acute corner at the source.
    shift = 1 - sum(domain[f] for f in cells.quadrants(source))
    if shift % 4:
        return None

    domain = [m + shift // 4 for m in domain]

    if min(domain) < 0:
        return None

    if (_euler_measure(cells, domain) != HALF
            or _point_measure(cells, domain, target) != QUARTER):
        return None

    return BigonCertificate(
        source,
        target,
        connection.alpha_arc,
        connection.beta_arc,
        connection.translate,
        domain[cells.z_face] > 0,
        domain[cells.w_face] > 0,
        tuple(domain),
    )


def _all_bigons(
    cells: CellStructure,
    config: FloerConfig,
) -> List[BigonCertificate]:
    lifts = _Lifts(cells)
    spinc = _spinc(cells, lifts)
    bigons = []

    for source in range(cells.beta.n):
        for target in range(cells.beta.n):
            if source == target or spinc[source] != spinc[target]:
                continue

            bigon = _bigon(cells, lifts, source, target, config)
            if bigon is not None:
                bigons.append(bigon)

    return bigons


def find_bigons(
    diagram: Diagram,
    mode: Mode,
    config: FloerConfig = DEFAULT_CONFIG,
) -> List[BigonCertificate]:
    """List the bigons that the given complex counts.

    Certificates are sorted by source and target.
    """
    cells = validate(diagram)
    return [
        bigon for bigon in _all_bigons(cells, config)
        if mode.admits(bigon.covers_z, bigon.covers_w)
    ]


def _matrix(
    n: int,
    bigons: Sequence[BigonCertificate],
    mode: Mode,
    config: FloerConfig,
) -> np.ndarray:
    matrix = gf2.zeros(n, n)

    for bigon in bigons:
        if mode.admits(bigon.covers_z, bigon.covers_w):
            matrix[bigon.target, bigon.source] ^= 1

    if config.check_square_zero and not gf2.is_zero(
        gf2.multiply(matrix, matrix)
    ):
        raise NotASquareZero(
            "The {} differential doesn't square to zero".format(mode.value)
        )

    return matrix


def differential(
    diagram: Diagram,
    mode: Mode,
    config: FloerConfig = DEFAULT_CONFIG,
) -> np.ndarray:
    """The differential of a complex as a matrix over GF(2).

    The entry in row y and column x is the number of bigons from x to y
    modulo two.

    Raises a NotASquareZero error if the matrix doesn't square to zero.
    """
    cells = validate(diagram)
    return _matrix(diagram.n, _all_bigons(cells, config), mode, config)


def _relative(
    cells: CellStructure,
    lifts: _Lifts,
    source: int,
    target: int,
) -> Tuple[int, int]:
    """Alexander and Maslov grading of target minus those of source."""
    connection = _connect(cells, lifts, source, target)
    domain = _solve(cells, connection) if connection else None

    if domain is None:
        raise NoDomain(
            "No domain connects the generators {} and {}".format(
                source, target
            )
        )

    n_z = domain[cells.z_face]
    n_w = domain[cells.w_face]
    index = (
        _euler_measure(cells, domain)
        + _point_measure(cells, domain, source)
        + _point_measure(cells, domain, target)
    )
    maslov = 2 * n_w - index

    if maslov.denominator != 1:
        raise GradingMismatch(
            "The domain from {} to {} has index {}".format(
                source, target, index
            )
        )

    return n_w - n_z, int(maslov)


def _gradings(cells: CellStructure, config: FloerConfig) -> List[Generator]:
    lifts = _Lifts(cells)
    spinc = _spinc(cells, lifts)
    classes: Dict[int, List[int]] = defaultdict(list)

    for crossing in range(cells.beta.n):
        classes[spinc[crossing]].append(crossing)

    relative: Dict[int, Tuple[int, int]] = {}

    for members in classes.values():
        base = members[0]
        relative[base] = (0, 0)

        for crossing in members[1:]:
            relative[crossing] = _relative(cells, lifts, base, crossing)

        if not config.check_gradings:
            continue

        # Recompute through a second domain: from the previous member, or
        # back to the base.
        for previous, crossing in zip(members, members[1:]):
            if previous == base:
                alex, maslov = _relative(cells, lifts, crossing, base)
                alex, maslov = -alex, -maslov
            else:
                step = _relative(cells, lifts, previous, crossing)
                alex = relative[previous][0] + step[0]
                maslov = relative[previous][1] + step[1]

            if (alex, maslov) != relative[crossing]:
                raise GradingMismatch(
                    "Generator {} has gradings {} and {}".format(
                        crossing, relative[crossing], (alex, maslov)
                    )
                )

    generators = []
    for members in classes.values():
        low = min(relative[c][0] for c in members)
        high = max(relative[c][1] for c in members)

        for crossing in members:
            alex, maslov = relative[crossing]
            generators.append(Generator(
                crossing, spinc[crossing], alex - low, maslov - high
            ))

    return sorted(generators, key=lambda g: g.crossing_id)


def gradings(
    diagram: Diagram,
    config: FloerConfig = DEFAULT_CONFIG,
) -> List[Generator]:
    """Spin^c class, Alexander and Maslov grading of every generator.

    Within a class the lowest Alexander grading and the highest Maslov
    grading are zero.

    Raises:
        NoDomain: If two generators of one class aren't connected by a
            domain.
        GradingMismatch: If two domains give different gradings.
    """
    return _gradings(validate(diagram), config)


@dataclass(frozen=True)
class ChainData:
    """The three complexes of a diagram.

    Attributes:
        generators (Tuple[Generator]): The generators, indexed by crossing.
        d_hat, d_z, d_w (np.ndarray): The differentials.
        blocks (Dict[int, Tuple[int]]): The generators of every Spin^c
            class.
        bigons (Tuple[BigonCertificate]): Every bigon in the window.
    """

    generators: Tuple[Generator, ...]
    d_hat:      np.ndarray = field(compare=False, repr=False)
    d_z:        np.ndarray = field(compare=False, repr=False)
    d_w:        np.ndarray = field(compare=False, repr=False)
    blocks:     Dict[int, Tuple[int, ...]]
    bigons:     Tuple[BigonCertificate, ...] = field(repr=False)


def chain_data(
    diagram: Diagram,
    config: FloerConfig = DEFAULT_CONFIG,
) -> ChainData:
    cells = validate(diagram)
    n = diagram.n
    generators = _gradings(cells, config)
    bigons = _all_bigons(cells, config)
    blocks: Dict[int, List[int]] = defaultdict(list)

    for generator in generators:
        blocks[generator.spinc].append(generator.crossing_id)

    logger.debug("Chain data of {!r}: {} generators, {} bigons".format(
        diagram.label, n, len(bigons)
    ))

    return ChainData(
        tuple(generators),
        _matrix(n, bigons, Mode.avoid_both, config),
        _matrix(n, bigons, Mode.avoid_w, config),
        _matrix(n, bigons, Mode.avoid_z, config),
        {spinc: tuple(members) for spinc, members in sorted(blocks.items())},
        tuple(bigons),
    )


@dataclass(frozen=True)
class RankTable:
    """Ranks of the homology of the three complexes.

    Attributes:
        p (int): Order of H₁ of the ambient lens space.
        ranks (Dict[Tuple[int, int, int], int]): Nonzero ranks of the hat
            knot Floer homology per (spinc, alex, maslov).
        dz_ranks (Dict[int, int]): Rank of H(d_z) per Spin^c class.
        dw_ranks (Dict[int, int]): Rank of H(d_w) per Spin^c class.
        label (str): Label of the diagram.
    """

    p:        int
    ranks:    Dict[Tuple[int, int, int], int]
    dz_ranks: Dict[int, int]
    dw_ranks: Dict[int, int]
    label:    str = ""

    @property
    def total(self) -> int:
        return sum(self.ranks.values())

    @property
    def dz_total(self) -> int:
        return sum(self.dz_ranks.values())

    @property
    def dw_total(self) -> int:
        return sum(self.dw_ranks.values())

    def alex_ranks(self) -> Dict[Tuple[int, int], int]:
        """Ranks per (spinc, alex), summed over the Maslov grading."""
        result: Dict[Tuple[int, int], int] = defaultdict(int)
        for (spinc, alex, _), rank in self.ranks.items():
            result[(spinc, alex)] += rank
        return dict(result)

    def euler(self) -> Dict[Tuple[int, int], int]:
        """Graded Euler characteristic per (spinc, alex)."""
        result: Dict[Tuple[int, int], int] = defaultdict(int)
        for (spinc, alex, maslov), rank in self.ranks.items():
            result[(spinc, alex)] += (-1) ** (maslov % 2) * rank
        return dict(result)

    def to_tsv(self) -> str:
        lines = [
            "{}\t{}\t{}\t{}".format(spinc, alex, maslov, rank)
            for (spinc, alex, maslov), rank in sorted(self.ranks.items())
        ]
        lines.append("TOTAL {}".format(self.total))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> Dict:
        document = {
            "label": self.label,
            "p": self.p,
            "total": self.total,
            "ranks": [
                {"spinc": s, "alex": a, "maslov": m, "rank": r}
                for (s, a, m), r in sorted(self.ranks.items())
            ],
            "d_z": [
                {"spinc": s, "rank": r}
                for s, r in sorted(self.dz_ranks.items())
            ],
            "d_w": [
                {"spinc": s, "rank": r}
                for s, r in sorted(self.dw_ranks.items())
            ],
            "euler": [
                {"spinc": s, "alex": a, "chi": chi}
                for (s, a), chi in sorted(self.euler().items())
            ],
        }
        validate_json(document, Schemas.rank_table)
        return document

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _homology_rank(matrix: np.ndarray, members: Sequence[int]) -> int:
    return len(members) - 2 * gf2.rank(gf2.block(matrix, members, members))


def _check_hat_gradings(data: ChainData):
    for bigon in data.bigons:
        if bigon.covers_z or bigon.covers_w:
            continue

        source = data.generators[bigon.source]
        target = data.generators[bigon.target]

        if (source.alex != target.alex
                or source.maslov != target.maslov + 1):
            raise GradingMismatch(
                "The bigon from {} to {} doesn't drop the Maslov grading by "
                "one within an Alexander grading".format(
                    bigon.source, bigon.target
                )
            )


def hfk(diagram: Diagram, config: FloerConfig = DEFAULT_CONFIG) -> RankTable:
    """Compute the hat knot Floer homology and the homology of the ambient
    manifold with either basepoint.

    Raises:
        RankMismatch: If a lens space complex doesn't have rank one in every
            Spin^c class.
    """
    data = chain_data(diagram, config)
    p = diagram.beta.p
    _check_hat_gradings(data)

    groups: Dict[Tuple[int, int, int], List[int]] = defaultdict(list)
    for generator in data.generators:
        key = (generator.spinc, generator.alex, generator.maslov)
        groups[key].append(generator.crossing_id)

    ranks = {}
    for (spinc, alex, maslov), members in sorted(groups.items()):
        lower = groups.get((spinc, alex, maslov - 1), [])
        upper = groups.get((spinc, alex, maslov + 1), [])
        rank = (
            len(members)
            - gf2.rank(gf2.block(data.d_hat, lower, members))
            - gf2.rank(gf2.block(data.d_hat, members, upper))
        )

        if rank < 0:
            raise NegativeRank(
                "Negative rank {} at {}".format(rank, (spinc, alex, maslov))
            )

        if rank:
            ranks[(spinc, alex, maslov)] = rank

    dz_ranks = {}
    dw_ranks = {}
    for spinc in range(p):
        members = data.blocks.get(spinc, ())
        dz_ranks[spinc] = _homology_rank(data.d_z, members)
        dw_ranks[spinc] = _homology_rank(data.d_w, members)

    table = RankTable(p, ranks, dz_ranks, dw_ranks, diagram.label)

    if any(rank != 1 for rank in dz_ranks.values()):
        raise RankMismatch(
            "H(d_z) of {!r} has ranks {} instead of one per class".format(
                diagram.label, dz_ranks
            )
        )

    if table.dz_total != p or table.dw_total != p:
        raise RankMismatch(
            "H(d_z) and H(d_w) of {!r} have ranks {} and {}, expected "
            "{}".format(diagram.label, table.dz_total, table.dw_total, p)
        )

    logger.debug("HFK of {!r}: total rank {}".format(
        diagram.label, table.total
    ))

    return table


def is_simple_fh(diagram: Diagram, config: FloerConfig = DEFAULT_CONFIG):
    """Whether the knot has simple Floer homology, rank p."""
    return hfk(diagram, config).total == diagram.beta.p


def detect_simple(
    diagram: Diagram,
    config: FloerConfig = DEFAULT_CONFIG,
) -> bool:
    """Whether the reduced diagram is combinatorially a straight diagram.

    That is the case iff it has p crossings, all faces are quadrilaterals
    and no complex has a bigon.
    """
    reduced = reduce(diagram)
    cells = validate(reduced)

    if reduced.n != reduced.beta.p:
        return False

    if not all(cells.is_quadrilateral(f) for f in range(cells.F)):
        return False

    bigons = _all_bigons(cells, config)
    return not any(
        mode.admits(b.covers_z, b.covers_w) for b in bigons for mode in Mode
    )


def _check_s3(diagram: Diagram):
    if diagram.beta.p != 1:
        raise BadParams(
            "The diagram lives in L({},{}), not in S³".format(
                diagram.beta.p, diagram.beta.h % diagram.beta.p
            )
        )


def alexander_polynomial(
    diagram: Diagram,
    config: FloerConfig = DEFAULT_CONFIG,
) -> AlexPoly:
    """The symmetrized Alexander polynomial of a knot in S³.

    It is the graded Euler characteristic of the hat homology, shifted to
    be symmetric and signed so that it is one at T = 1.

    Raises a BadParams error if the diagram isn't a diagram of S³.
    """
    _check_s3(diagram)
    chi: Dict[int, int] = {}

    for (_, alex), value in hfk(diagram, config).euler().items():
        chi[alex] = chi.get(alex, 0) + value

    poly = AlexPoly.from_dict(chi)
    top = poly.degree
    bottom = poly.support[0] if poly.terms else 0

    if (top + bottom) % 2 or abs(poly.at_one()) != 1:
        raise GradingMismatch(
            "The Euler characteristic {} is not an Alexander "
            "polynomial".format(poly)
        )

    poly = poly.shifted(-(top + bottom) // 2)
    return poly if poly.at_one() == 1 else -poly


def recognize_s3(
    diagram: Diagram,
    config: FloerConfig = DEFAULT_CONFIG,
) -> Optional[str]:
    """Name the knot if knot Floer homology detects it.

    Returns ``"unknot"`` for rank one and ``"trefoil"`` for rank three in
    S³, None otherwise.
    """
    if diagram.beta.p != 1:
        return None

    return {1: "unknot", 3: "trefoil"}.get(hfk(diagram, config).total)


def dz_euler(
    diagram: Diagram,
    config: FloerConfig = DEFAULT_CONFIG,
) -> Dict[int, int]:
    """Euler characteristic of the d_z complex in every Spin^c class."""
    result: Dict[int, int] = defaultdict(int)

    for generator in gradings(diagram, config):
        result[generator.spinc] += (-1) ** (generator.maslov % 2)

    return dict(sorted(result.items()))
