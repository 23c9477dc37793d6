# -*- coding: utf-8 -*-

import json
from collections import Counter, defaultdict
from math import gcd

import pytest

from helpers import faker
from lensfloer import (DEFAULT_CONFIG, BadParams, FloerConfig, Generator,
                       Mode, ScanConfig, alexander_polynomial, chain_data,
                       detect_simple, differential, dz_euler, find_bigons,
                       finger_move, finger_sites, gradings, hfk,
                       is_simple_fh, random_diagram, recognize_s3, reduce,
                       reverse, simple_knot, spinc_partition, t_l, t_r)
from lensfloer.gf2 import is_zero, multiply


def bigon_summary(bigons):
    return [(b.source, b.target, b.covers_z, b.covers_w) for b in bigons]


class TestChainComplex:
    def test_simple_knot_gradings(self, simple_7_3_2):
        generators = gradings(simple_7_3_2)

        assert generators == [Generator(j, j, 0, 0) for j in range(7)]
        assert spinc_partition(simple_7_3_2) == {j: j for j in range(7)}

    def test_spinc_classes(self):
        partition = spinc_partition(t_l(5, 2))
        sizes = sorted(Counter(partition.values()).values())

        assert sizes == [1, 1, 1, 1, 3]
        assert set(partition.values()) == set(range(5))

    def test_trefoil_gradings(self, trefoil):
        generators = gradings(trefoil)

        assert [(g.alex, g.maslov) for g in generators] == [
            (2, 0), (1, -1), (0, -2)
        ]
        assert {g.spinc for g in generators} == {0}

    def test_trefoil_bigons(self, trefoil):
        assert find_bigons(trefoil, Mode.avoid_both) == []
        assert bigon_summary(find_bigons(trefoil, Mode.avoid_w)) == [
            (0, 1, True, False)
        ]
        assert bigon_summary(find_bigons(trefoil, Mode.avoid_z)) == [
            (2, 1, False, True)
        ]

    def test_bigon_certificate(self, trefoil):
        bigon, = find_bigons(trefoil, Mode.avoid_w)

        assert len(bigon.domain) == 3
        assert min(bigon.domain) >= 0
        assert bigon.alpha_arc
        assert bigon.beta_arc
        assert all(not dart.beta for dart in bigon.alpha_arc)
        assert all(dart.beta for dart in bigon.beta_arc)

    def test_trefoil_differentials(self, trefoil):
        d_hat = differential(trefoil, Mode.avoid_both)
        d_z = differential(trefoil, Mode.avoid_w)
        d_w = differential(trefoil, Mode.avoid_z)

        assert d_hat.sum() == 0
        assert d_z.sum() == 1 and d_z[1, 0] == 1
        assert d_w.sum() == 1 and d_w[1, 2] == 1

    def test_mode_admits(self):
        assert Mode.avoid_both.admits(False, False)
        assert not Mode.avoid_both.admits(True, False)
        assert Mode.avoid_w.admits(True, False)
        assert not Mode.avoid_w.admits(False, True)
        assert Mode.avoid_z.admits(False, True)
        assert not Mode.avoid_z.admits(True, False)

    def test_square_zero(self):
        data = chain_data(t_r(7, 3))

        for matrix in (data.d_hat, data.d_z, data.d_w):
            assert is_zero(multiply(matrix, matrix))

        assert sorted(len(block) for block in data.blocks.values()) == [
            1, 1, 1, 1, 1, 1, 3
        ]

    def test_doubled_window(self, trefoil, simple_7_3_2):
        doubled = DEFAULT_CONFIG.doubled()

        assert doubled == FloerConfig(2, 2)

        for diagram in (trefoil, simple_7_3_2):
            for mode in Mode:
                assert find_bigons(diagram, mode, doubled) == find_bigons(
                    diagram, mode
                )

    def test_bad_window(self):
        with pytest.raises(BadParams):
            FloerConfig(alpha_turns=0)


class TestHFK:
    def test_simple_knot(self, simple_7_3_2):
        table = hfk(simple_7_3_2)

        assert table.total == 7
        assert table.dz_ranks == {s: 1 for s in range(7)}
        assert table.dw_total == 7
        assert table.to_tsv().endswith("TOTAL 7\n")
        assert len(table.to_tsv().splitlines()) == 8
        assert is_simple_fh(simple_7_3_2)
        assert detect_simple(simple_7_3_2)

    def test_random_simple_knots(self):
        for _ in range(5):
            p, q, k = faker.simple_params()
            diagram = simple_knot(p, q, k)

            assert hfk(diagram).total == p
            assert detect_simple(diagram)

    def test_trefoil(self, trefoil):
        table = hfk(trefoil)

        assert table.total == 3
        assert table.ranks == {(0, 2, 0): 1, (0, 1, -1): 1, (0, 0, -2): 1}
        assert table.dz_ranks == {0: 1}
        assert table.dw_ranks == {0: 1}
        assert table.euler() == {(0, 2): 1, (0, 1): -1, (0, 0): 1}
        assert table.alex_ranks() == {(0, 2): 1, (0, 1): 1, (0, 0): 1}
        assert table.to_tsv() == (
            "0\t0\t-2\t1\n"
            "0\t1\t-1\t1\n"
            "0\t2\t0\t1\n"
            "TOTAL 3\n"
        )
        assert not is_simple_fh(trefoil)
        assert not detect_simple(trefoil)

    def test_json(self, trefoil):
        document = json.loads(hfk(trefoil).to_json())

        assert document["p"] == 1
        assert document["total"] == 3
        assert document["label"] == "t_l(1,0)"
        assert len(document["ranks"]) == 3
        assert document["d_z"] == [{"spinc": 0, "rank": 1}]

    def test_mirrored_trefoil(self, mirrored_trefoil):
        assert hfk(mirrored_trefoil).total == 3
        assert str(alexander_polynomial(mirrored_trefoil)) == "T - 1 + T^-1"
        assert recognize_s3(mirrored_trefoil) == "trefoil"

    def test_alexander_polynomial(self, trefoil):
        poly = alexander_polynomial(trefoil)

        assert str(poly) == "T - 1 + T^-1"
        assert poly.at_one() == 1
        assert str(alexander_polynomial(simple_knot(1, 0, 0))) == "1"

        with pytest.raises(BadParams):
            alexander_polynomial(simple_knot(3, 1, 0))

    def test_recognize_s3(self, trefoil):
        assert recognize_s3(trefoil) == "trefoil"
        assert recognize_s3(simple_knot(1, 0, 0)) == "unknot"
        assert recognize_s3(simple_knot(3, 1, 0)) is None

    def test_t_knots(self):
        assert hfk(t_r(7, 3)).total == 9
        assert hfk(t_l(7, 3)).total == 9
        assert hfk(t_l(5, 2)).total == 7
        assert not detect_simple(t_l(5, 2))

    def test_orientation_reversal(self, trefoil):
        assert hfk(reverse(trefoil)).total == 3
        assert hfk(reverse(t_r(5, 2))).total == 7

    def test_finger_move_invariance(self):
        diagram = simple_knot(5, 2, 1)

        for site in finger_sites(diagram):
            moved = finger_move(diagram, site)
            table = hfk(moved)

            assert table.total == 5
            assert table.dz_total == 5

    def test_dz_euler(self, trefoil, simple_7_3_2):
        assert dz_euler(trefoil) == {0: 1}
        assert dz_euler(simple_7_3_2) == {s: 1 for s in range(7)}
        assert all(
            abs(chi) == 1 for chi in dz_euler(t_r(5, 2)).values()
        )

    def test_hfk_benchmark(self, benchmark):
        diagram = t_r(7, 3)
        table = benchmark(hfk, diagram)

        assert table.total == 9


def lens_spaces(max_p):
    return [
        (p, q) for p in range(1, max_p + 1) for q in range(p)
        if p == 1 or gcd(q, p) == 1
    ]


def spinc_totals(table):
    totals = defaultdict(int)
    for (spinc, _, _), rank in table.ranks.items():
        totals[spinc] += rank
    return dict(totals)


class TestSweeps:
    @pytest.mark.parametrize("p,q", lens_spaces(25))
    def test_simple_knots(self, p, q):
        for k in range(p):
            diagram = simple_knot(p, q, k)
            table = hfk(diagram)
            data = chain_data(diagram)

            assert table.total == p
            assert spinc_totals(table) == {s: 1 for s in range(p)}
            for matrix in (data.d_hat, data.d_z, data.d_w):
                assert matrix.sum() == 0

    @pytest.mark.parametrize("p,q", lens_spaces(25))
    def test_t_knots(self, p, q):
        for constructor in (t_r, t_l):
            diagram = constructor(p, q)
            table = hfk(diagram)

            assert table.total == p + 2
            assert table.dz_total == p
            assert table.dw_total == p
            assert reduce(diagram).n == p + 2

    def test_perturbed_simple_knots(self):
        config = ScanConfig(max_twists=0, tr_share=0.0, scatter_share=0.0)

        for seed in range(200):
            p = 1 + seed % 15
            residues = [q for q in range(p) if p == 1 or gcd(q, p) == 1]
            q = residues[seed % len(residues)]
            diagram = random_diagram(p, q, p + 6, seed, config)

            assert hfk(diagram).total == p
            assert reduce(diagram).n == p
            assert detect_simple(diagram)

    def test_square_zero_on_random_diagrams(self):
        for seed in range(100):
            p = 1 + seed % 9
            diagram = random_diagram(p, 1, p + 6, seed)
            data = chain_data(diagram)

            for matrix in (data.d_hat, data.d_z, data.d_w):
                assert is_zero(multiply(matrix, matrix))
