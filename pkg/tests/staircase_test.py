# -*- coding: utf-8 -*-

import pytest
import sympy as sp
from hypothesis import given
from hypothesis.strategies import integers, lists

from helpers import faker
from lensfloer import (AlexPoly, BadParams, NotLSpaceAdmissible, ParseError,
                       RankMismatch, SlopeTooSmall, Staircase,
                       brute_force_filt_rank, graded_differential,
                       dual_rank_prediction, filt_rank, parse_alex,
                       staircase_from_alex, tau, torus_knot_alex,
                       wd_top_rank)
from lensfloer.staircase import T, format_staircase, staircase_differential

TREFOIL = "T - 1 + T^-1"
T34 = "T^3 - T^2 + 1 - T^-2 + T^-3"


def staircase_of(text):
    return staircase_from_alex(parse_alex(text))


class TestAlexPoly:
    def test_parse(self):
        assert parse_alex(TREFOIL) == AlexPoly(((1, 1), (0, -1), (-1, 1)))
        assert parse_alex("1") == AlexPoly(((0, 1),))
        assert parse_alex("t^2 - 2*T + 3t^-1") == AlexPoly(
            ((2, 1), (1, -2), (-1, 3))
        )
        assert parse_alex("T + T - 2T") == AlexPoly(())

    def test_render(self):
        assert str(parse_alex(TREFOIL)) == TREFOIL
        assert str(parse_alex(T34)) == T34
        assert str(parse_alex("-2T^3 + 1")) == "-2*T^3 + 1"
        assert str(AlexPoly(())) == "0"

    def test_sympy(self):
        poly = parse_alex(T34)

        assert sp.expand(poly.to_sympy() - (T**3 - T**2 + 1 - T**-2 + T**-3)
                         ) == 0
        assert AlexPoly.from_sympy(poly.to_sympy()) == poly

    def test_parse_errors(self):
        with pytest.raises(ParseError) as e:
            parse_alex("")
        assert e.value.column == 1

        with pytest.raises(ParseError) as e:
            parse_alex("T^")
        assert e.value.column == 3

        with pytest.raises(ParseError) as e:
            parse_alex("T T")
        assert e.value.column == 3

        with pytest.raises(ParseError) as e:
            parse_alex("T + x")
        assert e.value.column == 5

    def test_torus_knots(self):
        assert str(torus_knot_alex(2, 3)) == TREFOIL
        assert str(torus_knot_alex(3, 4)) == T34
        assert str(torus_knot_alex(1, 5)) == "1"
        assert torus_knot_alex(2, 5) == parse_alex(
            "T^2 - T + 1 - T^-1 + T^-2"
        )

        with pytest.raises(BadParams):
            torus_knot_alex(2, 4)

        with pytest.raises(BadParams):
            torus_knot_alex(0, 3)


class TestStaircase:
    def test_goldens(self):
        assert staircase_of(TREFOIL) == Staircase((-1, 0, 1), (-2, -1, 0))
        assert staircase_from_alex(torus_knot_alex(2, 5)).delta == (
            -4, -3, -2, -1, 0
        )
        assert staircase_of(T34) == Staircase(
            (-3, -2, 0, 2, 3), (-6, -5, -2, -1, 0)
        )

    def test_pairs_and_tau(self):
        staircase = staircase_of(T34)

        assert staircase.g == 3
        assert staircase.k == 2
        assert tau(staircase) == 3
        assert staircase.pairs() == [(0, 1), (2, 3)]

    def test_euler_characteristic(self):
        for _ in range(10):
            poly = faker.admissible_alex()
            assert staircase_from_alex(poly).euler() == poly

    def test_not_admissible(self):
        with pytest.raises(NotLSpaceAdmissible) as e:
            staircase_of("T - 2 + T^-1")
        assert e.value.exponent == 0

        with pytest.raises(NotLSpaceAdmissible):
            staircase_of("T^2 - T + 1")

        with pytest.raises(NotLSpaceAdmissible):
            staircase_of("T^2 + 1 + T^-2")

        with pytest.raises(NotLSpaceAdmissible):
            staircase_from_alex(AlexPoly(()))

    def test_format(self):
        assert format_staircase(staircase_of(TREFOIL)) == (
            "n:     -1  0  1\n"
            "delta: -2 -1  0\n"
        )


class TestFiltration:
    def test_trefoil_ranks(self):
        ranks = filt_rank(staircase_of(TREFOIL))

        assert [ranks(m) for m in ranks.levels] == [0, 1, 0, 1]
        assert ranks(5) == 1
        assert ranks(-5) == 0

    def test_t34_ranks(self):
        ranks = filt_rank(staircase_of(T34))

        assert [ranks(m) for m in ranks.levels] == [0, 1, 0, 0, 1, 1, 0, 1]

    def test_against_brute_force(self):
        for _ in range(20):
            staircase = staircase_from_alex(faker.admissible_alex())
            assert filt_rank(staircase) == brute_force_filt_rank(staircase)

    def test_graded_differential(self):
        for text in (TREFOIL, T34, "1", "T^2 - T + 1 - T^-1 + T^-2"):
            staircase = staircase_of(text)
            assert (graded_differential(staircase)
                    == staircase_differential(staircase)).all()

        for _ in range(50):
            staircase = staircase_from_alex(faker.admissible_alex(10))
            assert (graded_differential(staircase)
                    == staircase_differential(staircase)).all()

    def test_brute_force_catches_bad_gradings(self):
        with pytest.raises(RankMismatch):
            brute_force_filt_rank(Staircase((-1, 0, 1), (-3, -1, 0)))

        with pytest.raises(RankMismatch):
            brute_force_filt_rank(
                Staircase((-3, -2, 0, 2, 3), (-6, -5, -3, -1, 0))
            )

    def test_random_staircases(self):
        for _ in range(200):
            staircase = staircase_from_alex(faker.admissible_alex(10))
            ranks = filt_rank(staircase)

            assert staircase.g <= 10
            for m in ranks.levels:
                assert ranks(m) <= 1
                assert ranks(m) + ranks(-m - 1) == 1

            if staircase.g <= 6:
                assert ranks == brute_force_filt_rank(staircase)

    @given(lists(integers(1, 40), unique=True, max_size=12))
    def test_against_brute_force_levels(self, exponents):
        exponents = sorted(exponents)
        levels = sorted([-e for e in exponents] + [0] + exponents,
                        reverse=True)
        poly = AlexPoly(tuple(
            (level, (-1) ** i) for i, level in enumerate(levels)
        ))
        staircase = staircase_from_alex(poly)
        ranks = filt_rank(staircase)

        assert ranks == brute_force_filt_rank(staircase)
        assert all(ranks(m) + ranks(-m - 1) == 1 for m in ranks.levels)


class TestPredictions:
    def test_wd_top_rank(self):
        trefoil = staircase_of(TREFOIL)

        assert wd_top_rank(trefoil, 1) == 3
        assert wd_top_rank(trefoil, 2) == 2
        assert wd_top_rank(trefoil, 7) == 7

        t34 = staircase_of(T34)
        assert wd_top_rank(t34, 4) == 8
        assert wd_top_rank(t34, 6) == 6

        with pytest.raises(BadParams):
            wd_top_rank(trefoil, 0)

    def test_dual_rank(self):
        trefoil = staircase_of(TREFOIL)

        assert dual_rank_prediction(trefoil, 1) == 3
        assert dual_rank_prediction(trefoil, 5) == 5

        t34 = staircase_of(T34)
        assert dual_rank_prediction(t34, 5) == 7
        assert dual_rank_prediction(t34, 11) == 11

        with pytest.raises(SlopeTooSmall):
            dual_rank_prediction(t34, 4)

    def test_dual_rank_unknot(self):
        unknot = staircase_of("1")

        assert dual_rank_prediction(unknot, 3) == 3

        with pytest.raises(BadParams):
            dual_rank_prediction(unknot, 0)

    def test_random_rank_formulas(self):
        for _ in range(200):
            staircase = staircase_from_alex(faker.admissible_alex(10))
            g = staircase.g

            for p in range(max(2 * g, 1), 2 * g + 11):
                assert wd_top_rank(staircase, p) == p
                assert dual_rank_prediction(staircase, p) == p

            if g > 0:
                assert wd_top_rank(staircase, 2 * g - 1) == 2 * g + 1
                assert dual_rank_prediction(staircase, 2 * g - 1) == 2 * g + 1

            for p in range(1, 2 * g - 1):
                with pytest.raises(SlopeTooSmall):
                    dual_rank_prediction(staircase, p)

    def test_dual_rank_random(self):
        for _ in range(10):
            staircase = staircase_from_alex(faker.admissible_alex())
            g = staircase.g

            assert dual_rank_prediction(staircase, 2 * g + 1) == 2 * g + 1
            if g > 0:
                assert dual_rank_prediction(staircase, 2 * g - 1) == 2 * g + 1
