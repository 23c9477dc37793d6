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

"""Simple knots, homological S³ surgery candidates and conjecture scans."""

import json
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List

import numpy as np
from logbook import Logger
from sympy import mod_inverse
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import smith_normal_form

from .config import (DEFAULT_CONFIG, DEFAULT_SCAN_CONFIG, FloerConfig,
                     ScanConfig)
from .diagram import (Diagram, alpha_intersection, beta_intersection,
                      dumps, finger_move, finger_sites,
                      homology_class, mirror, normalize_params, reduce,
                      reverse, simple_knot, t_l, t_r, twist, validate)
from .diagram.construct import default_anchor, place_pair
from .exceptions import BadParams
from .floer import detect_simple, hfk
from .log import logger_group
from .schemas import Schemas, validate_json

logger = Logger("lensfloer.berge")
logger_group.add_logger(logger)

__all__ = [
    "SimpleKnotRecord",
    "BergeReport",
    "ScanTrial",
    "ScanReport",
    "enumerate_simple",
    "s3_candidate",
    "surgery_h1_order",
    "s3_candidate_oracle",
    "berge_report",
    "random_diagram",
    "t_shaped",
    "conjecture_scan",
]


REPORT_HEADER = ("k", "candidate", "hfk_total", "simple_fh", "detect_simple")
SCAN_HEADER = REPORT_HEADER + ("seed", "n")


def _flag(value: bool) -> str:
    return "true" if value else "false"


@dataclass(frozen=True)
class SimpleKnotRecord:
    """One simple knot together with the checks run on it.

    Attributes:
        p (int): Order of H₁ of the lens space.
        q (int): The lens space is L(p,q).
        k (int): The homology class of the knot.
        diagram (Diagram): Its straight diagram.
        hfk_total (int): Total rank of its knot Floer homology.
        candidate (bool): Whether it passes the homological S³ filter.
        simple_fh (bool): Whether its knot Floer homology has rank p.
        detect_simple (bool): Whether its reduced diagram is straight.
    """

    p:             int
    q:             int
    k:             int
    diagram:       Diagram = field(repr=False)
    hfk_total:     int
    candidate:     bool
    simple_fh:     bool
    detect_simple: bool

    @property
    def prediction_match(self) -> bool:
        """Simple Floer homology and a straight reduction agree."""
        return self.simple_fh == self.detect_simple

    def row(self) -> List[str]:
        return [
            str(self.k),
            _flag(self.candidate),
            str(self.hfk_total),
            _flag(self.simple_fh),
            _flag(self.detect_simple),
        ]

    def to_dict(self) -> Dict:
        return {
            "k": self.k,
            "candidate": self.candidate,
            "hfk_total": self.hfk_total,
            "simple_fh": self.simple_fh,
            "detect_simple": self.detect_simple,
        }


def enumerate_simple(
    p: int,
    q: int,
    config: FloerConfig = DEFAULT_CONFIG,
) -> List[SimpleKnotRecord]:
    """The p simple knots of L(p,q), one per homology class.

    Raises a BadParams error if the parameters don't describe a lens space.
    """
    q = normalize_params(p, q)
    records = []

    for k in range(p):
        diagram = simple_knot(p, q, k)
        assert homology_class(diagram) == k
        total = hfk(diagram, config).total

        records.append(SimpleKnotRecord(
            p,
            q,
            k,
            diagram,
            total,
            s3_candidate(p, q, k),
            total == p,
            detect_simple(diagram, config),
        ))

    return records


def s3_candidate(p: int, q: int, k: int) -> bool:
    """Whether the simple knot of class k could have an S³ surgery.

    An integral surgery giving a homology sphere exists iff the class
    generates H₁ and its self-linking k²/q mod p is ±1.

    Raises a BadParams error if k isn't a residue mod p.
    """
    q = normalize_params(p, q)

    if not 0 <= k < p:
        raise BadParams("k={} is not a residue modulo {}".format(k, p))

    if p == 1:
        return True

    if gcd(k, p) != 1:
        return False

    return (k * k * mod_inverse(q, p)) % p in (1, p - 1)


def surgery_h1_order(diagram: Diagram, slope: int) -> int:
    """Order of H₁ after the integral filling λ + slope·μ of the knot.

    H₁ of the punctured torus is free on α, a vertical curve and the
    meridian, with the meridian coordinate counted by intersections with
    the knot arc between the basepoints that avoids α. The filling kills α,
    β and the filling curve; returns 0 when the result is infinite.
    """
    cells = validate(diagram)
    beta = diagram.beta
    presentation = DM([
        [1, 0, 0],
        [beta.h, beta.v, beta_intersection(cells)],
        [0, alpha_intersection(cells), slope],
    ], ZZ)

    normal = smith_normal_form(presentation).to_Matrix()
    order = 1

    for i in range(3):
        order *= abs(int(normal[i, i]))

    return order


def s3_candidate_oracle(p: int, q: int, k: int) -> bool:
    """Whether some integral filling of the simple knot has trivial H₁.

    Only slopes up to the size of the presentation matrix can have order
    one, so the search is finite.
    """
    diagram = simple_knot(p, q, k)
    cells = validate(diagram)
    bound = abs(beta_intersection(cells) * alpha_intersection(cells)) + p + 1

    return any(
        surgery_h1_order(diagram, slope) == 1
        for slope in range(-bound, bound + 1)
    )


@dataclass(frozen=True)
class BergeReport:
    p:       int
    q:       int
    records: List[SimpleKnotRecord]

    def to_tsv(self) -> str:
        lines = ["\t".join(REPORT_HEADER)]
        lines.extend("\t".join(record.row()) for record in self.records)
        return "\n".join(lines) + "\n"

    def to_dict(self) -> Dict:
        document = {
            "p": self.p,
            "q": self.q,
            "rows": [record.to_dict() for record in self.records],
        }
        validate_json(document, Schemas.berge_report)
        return document

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def berge_report(
    p: int,
    q: int,
    config: FloerConfig = DEFAULT_CONFIG,
) -> BergeReport:
    """Tabulate the simple knots of L(p,q) and the checks run on them."""
    q = normalize_params(p, q)
    records = enumerate_simple(p, q, config)

    for record in records:
        if record.hfk_total != p or not record.detect_simple:
            logger.warn("Simple knot {} of L({},{}) fails a check: {}".format(
                record.k, p, q, record.row()
            ))

    return BergeReport(p, q, records)


def _check_seed(seed: int):
    if seed < 0:
        raise BadParams("Seeds must be non-negative, got {}".format(seed))


def _scatter(diagram: Diagram, rng: np.random.Generator) -> Diagram:
    """Put z and w into two distinct random faces of β."""
    cells = validate(diagram)

    if cells.F < 2:
        return diagram

    z_face, w_face = (
        int(face) for face in rng.choice(cells.F, size=2, replace=False)
    )
    z, w = place_pair(
        diagram.beta,
        default_anchor(cells, z_face),
        default_anchor(cells, w_face),
    )

    return Diagram(diagram.beta, z, w, diagram.label)


def random_diagram(
    p: int,
    q: int,
    n_max: int,
    seed: int,
    scan_config: ScanConfig = DEFAULT_SCAN_CONFIG,
) -> Diagram:
    """A random diagram of a knot in L(p,q) with at most n_max crossings.

    β starts out as the curve of a simple knot or of one of the two knots
    of rank p + 2. Its windings are changed by Dehn twists along α and it
    is pushed around by finger moves. Most of the time z and w are then
    dropped into two random faces, which gives a new knot. Finally the
    knot is reversed or everything is built in L(p,-q) and mirrored, each
    with probability one half. The same seed gives the same diagram.
    """
    q = normalize_params(p, q)
    _check_seed(seed)

    if n_max < p:
        raise BadParams(
            "A diagram of L({},{}) has at least {} crossings, n_max is "
            "{}".format(p, q, p, n_max)
        )

    rng = np.random.default_rng(seed)
    flip = bool(rng.random() < 0.5)
    base_q = -q if flip else q

    if n_max >= p + 2 and rng.random() < scan_config.tr_share:
        constructor = t_r if rng.random() < 0.5 else t_l
        diagram = constructor(p, base_q)
    else:
        diagram = simple_knot(p, base_q, int(rng.integers(p)))

    turns = int(rng.integers(-scan_config.max_twists,
                             scan_config.max_twists + 1))
    if turns:
        diagram = twist(diagram, turns)

    for _ in range(int(rng.integers(scan_config.max_fingers + 1))):
        room = (n_max - diagram.n) // 2
        if room < 1:
            break

        sites = finger_sites(diagram)
        site = sites[int(rng.integers(len(sites)))]
        depth = int(rng.integers(1, min(room, 3) + 1))
        diagram = finger_move(diagram, site, depth)

    if rng.random() < scan_config.scatter_share:
        diagram = _scatter(diagram, rng)

    if flip:
        diagram = mirror(diagram)

    if rng.random() < 0.5:
        diagram = reverse(diagram)

    return diagram.relabel("random({},{},{},{})".format(p, q, n_max, seed))


def t_shaped(diagram: Diagram) -> bool:
    """Whether a reduced diagram looks like T_R or T_L.

    That is p + 2 crossings and exactly two bigon faces, one around each
    basepoint.
    """
    cells = validate(diagram)
    bigons = [f for f in range(cells.F) if cells.is_bigon_face(f)]

    return (
        diagram.n == diagram.beta.p + 2
        and not cells.disk_bounding
        and bigons == sorted([cells.z_face, cells.w_face])
    )


@dataclass(frozen=True)
class ScanTrial:
    seed:          int
    n:             int
    k:             int
    candidate:     bool
    hfk_total:     int
    detect_simple: bool
    reduced_n:     int
    finding:       str = ""

    def row(self, p: int) -> List[str]:
        return [
            str(self.k),
            _flag(self.candidate),
            str(self.hfk_total),
            _flag(self.hfk_total == p),
            _flag(self.detect_simple),
            str(self.seed),
            str(self.n),
        ]

    def to_dict(self, p: int) -> Dict:
        return {
            "k": self.k,
            "candidate": self.candidate,
            "hfk_total": self.hfk_total,
            "simple_fh": self.hfk_total == p,
            "detect_simple": self.detect_simple,
            "seed": self.seed,
            "n": self.n,
        }


@dataclass(frozen=True)
class ScanReport:
    """Outcome of a conjecture scan.

    A finding is a diagram of rank p whose reduction isn't straight or a
    diagram of rank p + 2 whose reduction doesn't look like T_R or T_L.
    Findings are evidence against the conjectured classification, the scan
    never fails on them.
    """

    p:      int
    q:      int
    n_max:  int
    seed:   int
    trials: List[ScanTrial]

    @property
    def findings(self) -> List[ScanTrial]:
        return [trial for trial in self.trials if trial.finding]

    def rank_counts(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for trial in self.trials:
            counts[trial.hfk_total] = counts.get(trial.hfk_total, 0) + 1
        return dict(sorted(counts.items()))

    def to_tsv(self) -> str:
        lines = ["\t".join(SCAN_HEADER)]
        lines.extend("\t".join(trial.row(self.p)) for trial in self.trials)
        lines.append("FINDINGS {}".format(len(self.findings)))
        lines.extend(
            "FINDING\t{}\t{}".format(trial.seed, trial.finding)
            for trial in self.findings
        )
        return "\n".join(lines) + "\n"

    def to_dict(self) -> Dict:
        document = {
            "p": self.p,
            "q": self.q,
            "n_max": self.n_max,
            "seed": self.seed,
            "trials": len(self.trials),
            "rows": [trial.to_dict(self.p) for trial in self.trials],
            "findings": [
                {"seed": trial.seed, "n": trial.n,
                 "hfk_total": trial.hfk_total, "reduced_n": trial.reduced_n,
                 "reason": trial.finding}
                for trial in self.findings
            ],
            "rank_counts": {
                str(rank): count for rank, count in self.rank_counts().items()
            },
        }
        validate_json(document, Schemas.scan_report)
        return document

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _scan_trial(
    p: int,
    q: int,
    n_max: int,
    seed: int,
    scan_config: ScanConfig,
    config: FloerConfig,
) -> ScanTrial:
    diagram = random_diagram(p, q, n_max, seed, scan_config)
    total = hfk(diagram, config).total
    reduced = reduce(diagram)
    simple = detect_simple(diagram, config)
    k = homology_class(diagram)
    finding = ""

    if total == p and not simple:
        finding = "rank {} but the reduction has {} crossings".format(
            total, reduced.n
        )
    elif total == p + 2 and not t_shaped(reduced):
        finding = "rank {} but the reduction is not T-shaped".format(total)

    if finding:
        logger.warn("Scan finding for seed {}: {}\n{}".format(
            seed, finding, dumps(diagram)
        ))

    return ScanTrial(
        seed,
        diagram.n,
        k,
        s3_candidate(p, q, k),
        total,
        simple,
        reduced.n,
        finding,
    )


def conjecture_scan(
    p: int,
    q: int,
    n_max: int,
    trials: int,
    seed: int,
    scan_config: ScanConfig = DEFAULT_SCAN_CONFIG,
    config: FloerConfig = DEFAULT_CONFIG,
) -> ScanReport:
    """Look for knots that break the conjectured rank classification.

    Trial i uses the seed ``seed + i``, so ``random_diagram`` regenerates
    any row of the report.

    Raises a BadParams error if trials < 1 or n_max < p.
    """
    q = normalize_params(p, q)
    _check_seed(seed)

    if trials < 1:
        raise BadParams("A scan needs at least one trial")

    if n_max < p:
        raise BadParams(
            "n_max={} is below the minimal crossing number {}".format(
                n_max, p
            )
        )

    results = []
    for i in range(trials):
        results.append(_scan_trial(p, q, n_max, seed + i, scan_config, config))

        if (i + 1) % 50 == 0:
            logger.info("Scan of L({},{}): {} of {} trials done".format(
                p, q, i + 1, trials
            ))

    report = ScanReport(p, q, n_max, seed, results)
    logger.info("Scan of L({},{}) finished with {} findings".format(
        p, q, len(report.findings)
    ))

    return report
