# -*- coding: utf-8 -*-

from fractions import Fraction
from os import path

import pytest

from helpers import faker
from lensfloer import (BadParams, Basepoint, BasepointOnCurve,
                       BetaNullHomologous, CrossingSeq, Diagram, IllegalSite,
                       NotEmbedded, ParseError, ScanConfig, ambient, dumps,
                       empty_bigon_faces, finger_move, finger_sites,
                       homology_class, loads, mirror, parse_diagram,
                       random_diagram, reduce, reverse, save_diagram,
                       simple_knot, straight_like, t_l, t_r, twist, validate)
from lensfloer.diagram import FingerSite


def diagram_text(*records):
    return "\n".join(("lens-diagram v1",) + records) + "\n"


class TestConstruction:
    def test_simple_knot_cells(self, simple_7_3_2):
        cells = validate(simple_7_3_2)

        assert cells.V == 7
        assert cells.E == 14
        assert cells.F == 7
        assert cells.euler_check == 0
        assert all(cells.is_quadrilateral(f) for f in range(cells.F))
        assert straight_like(simple_7_3_2, cells)

    def test_simple_knot_layout(self, simple_7_3_2):
        beta = simple_7_3_2.beta

        assert beta.v == 7
        assert beta.h == 3
        assert [c.pos for c in beta.crossings] == [
            Fraction((3 * i) % 7, 7) for i in range(7)
        ]
        assert beta.windings == (0, 0, 1, 0, 1, 0, 1)

    def test_simple_knot_params(self):
        with pytest.raises(BadParams):
            simple_knot(0, 1, 0)

        with pytest.raises(BadParams):
            simple_knot(6, 2, 1)

        with pytest.raises(BadParams):
            simple_knot(5, 2, 5)

    def test_ambient(self, simple_7_3_2):
        assert ambient(simple_7_3_2) == (7, 3)
        assert ambient(simple_knot(7, 10, 0)) == (7, 3)
        assert ambient(t_l(7, 3)) == (7, 3)
        assert ambient(t_r(7, 3)) == (7, 3)
        assert ambient(mirror(simple_7_3_2)) == (7, 4)

    def test_homology_class(self):
        for k in range(7):
            assert homology_class(simple_knot(7, 3, k)) == k

    def test_homology_class_random(self):
        for _ in range(10):
            p, q, k = faker.simple_params()
            assert homology_class(simple_knot(p, q, k)) == k

    def test_t_knots(self, trefoil):
        assert trefoil.n == 3
        assert t_l(7, 3).n == 9
        assert t_r(7, 3).n == 9

        cells = validate(trefoil)
        assert (cells.V, cells.E, cells.F) == (3, 6, 3)
        assert sorted(len(face) for face in cells.faces) == [2, 2, 8]
        assert cells.is_bigon_face(cells.z_face)
        assert cells.is_bigon_face(cells.w_face)
        assert not cells.disk_bounding

    def test_t_knots_are_reduced(self):
        diagram = t_l(5, 2)

        assert empty_bigon_faces(validate(diagram)) == []
        assert reduce(diagram) == diagram
        assert not straight_like(diagram)

    def test_unknot_in_s3(self):
        unknot = simple_knot(1, 0, 0)
        cells = validate(unknot)

        assert unknot.n == 1
        assert cells.F == 1
        assert cells.disk_bounding


class TestIsotopies:
    def test_finger_move(self):
        diagram = simple_knot(5, 2, 1)
        sites = finger_sites(diagram)

        assert len(sites) == 10

        moved = finger_move(diagram, sites[0])
        assert moved.n == 7
        assert ambient(moved) == (5, 2)
        assert homology_class(moved) == 1

        deeper = finger_move(diagram, sites[0], depth=2)
        assert deeper.n == 9
        assert ambient(deeper) == (5, 2)

    def test_finger_move_and_reduce(self):
        diagram = simple_knot(5, 2, 1)

        for site in finger_sites(diagram):
            moved = finger_move(diagram, site)
            reduced = reduce(moved)

            assert moved.n == 7
            assert reduced.n == 5
            assert straight_like(reduced)
            assert empty_bigon_faces(validate(reduced)) == []
            assert homology_class(reduced) == 1

    def test_deep_finger_and_reduce(self):
        diagram = simple_knot(5, 1, 2)

        for site in finger_sites(diagram):
            moved = finger_move(diagram, site, depth=3)

            assert moved.n == 11
            assert reduce(moved).n == 5
            assert homology_class(reduce(moved)) == 2

    def test_reduce_is_idempotent(self):
        config = ScanConfig(scatter_share=0.5)

        for seed in range(40):
            diagram = random_diagram(7, 3, 13, seed, config)
            reduced = reduce(diagram)

            assert reduce(reduced) == reduced
            assert reduced.n <= diagram.n
            assert empty_bigon_faces(validate(reduced)) == []
            assert ambient(reduced) == ambient(diagram)
            assert homology_class(reduced) == homology_class(diagram)

    def test_illegal_sites(self):
        diagram = simple_knot(5, 2, 1)
        site = finger_sites(diagram)[0]

        with pytest.raises(IllegalSite):
            finger_move(diagram, site, depth=0)

        with pytest.raises(IllegalSite):
            finger_move(diagram, FingerSite(site.face, site.alpha_edge, "up"))

        with pytest.raises(IllegalSite):
            finger_move(diagram, FingerSite(99, 0, "above"))

    def test_twist(self, simple_7_3_2):
        twisted = twist(simple_7_3_2, 1)

        assert twisted.n == 7
        assert twisted.beta.h == 10
        assert ambient(twisted) == (7, 3)
        assert homology_class(twisted) == 2
        assert ambient(twist(simple_7_3_2, -2)) == (7, 3)

    def test_mirror(self, simple_7_3_2):
        mirrored = mirror(simple_7_3_2)

        assert mirrored.n == 7
        assert mirrored.beta.h % 7 == 4
        assert mirror(mirrored).beta == simple_7_3_2.beta

    def test_reverse(self, simple_7_3_2):
        reversed_knot = reverse(simple_7_3_2)

        assert reversed_knot.z == simple_7_3_2.w
        assert reversed_knot.w == simple_7_3_2.z
        assert homology_class(reversed_knot) == 5


class TestValidation:
    def test_null_homologous(self):
        beta = CrossingSeq.build([0, Fraction(1, 2)], [1, -1], [0, 0])
        diagram = Diagram(
            beta, Basepoint(Fraction(1, 4), Fraction(1, 8)),
            Basepoint(Fraction(3, 4), Fraction(1, 8))
        )

        with pytest.raises(BetaNullHomologous):
            validate(diagram)

    def test_crossing_strands(self):
        beta = CrossingSeq.build([0, Fraction(1, 2)], [1, 1], [1, 0])
        diagram = Diagram(
            beta, Basepoint(Fraction(1, 4), Fraction(1, 8)),
            Basepoint(Fraction(3, 4), Fraction(1, 8))
        )

        with pytest.raises(NotEmbedded):
            validate(diagram)

    def test_interleaving_caps(self):
        beta = CrossingSeq.build(
            [0, Fraction(1, 2), Fraction(1, 4), Fraction(3, 4),
             Fraction(1, 8), Fraction(5, 8)],
            [1, -1, 1, -1, 1, 1],
            [0, 0, 0, 0, 0, 1],
        )
        diagram = Diagram(
            beta, Basepoint(Fraction(1, 16), Fraction(1, 2)),
            Basepoint(Fraction(3, 16), Fraction(1, 2))
        )

        with pytest.raises(NotEmbedded):
            validate(diagram)

    def test_basepoint_on_beta(self):
        diagram = simple_knot(3, 1, 0)
        on_curve = Diagram(
            diagram.beta, Basepoint(0, Fraction(1, 2)), diagram.w
        )

        with pytest.raises(BasepointOnCurve):
            validate(on_curve)

    def test_basepoint_above_cap_foot(self):
        beta = CrossingSeq.build(
            [0, Fraction(1, 3), Fraction(2, 3)], [1, 1, -1], [0, 0, 1]
        )
        inside = Basepoint(Fraction(1, 2), Fraction(1, 24))

        def z_face(x, y):
            return validate(Diagram(beta, Basepoint(x, y), inside)).z_face

        above_bar = z_face(Fraction(1, 2), Fraction(1, 6))

        assert z_face(Fraction(1, 3), Fraction(1, 6)) == above_bar
        assert z_face(Fraction(2, 3), Fraction(1, 6)) == above_bar
        assert above_bar != z_face(Fraction(1, 2), Fraction(1, 24))

        for x, y in ((Fraction(1, 3), Fraction(1, 24)),
                     (Fraction(1, 3), Fraction(1, 12)),
                     (Fraction(0), Fraction(1, 6)),
                     (Fraction(1, 3), Fraction(5, 6))):
            with pytest.raises(BasepointOnCurve):
                z_face(x, y)

    def test_bad_values(self):
        with pytest.raises(BadParams):
            Basepoint(1, Fraction(1, 2))

        with pytest.raises(BadParams):
            Basepoint(0, 0)

        with pytest.raises(BadParams):
            CrossingSeq.build([0, 0], [1, 1], [0, 1])

        with pytest.raises(BadParams):
            CrossingSeq.build([0], [2], [1])

        with pytest.raises(BadParams):
            CrossingSeq.build([], [], [])


class TestTextFormat:
    def test_roundtrip(self, simple_7_3_2, trefoil):
        for diagram in (simple_7_3_2, trefoil, t_r(5, 2)):
            assert loads(dumps(diagram)) == diagram

    def test_dumps(self, simple_7_3_2):
        lines = dumps(simple_7_3_2).splitlines()

        assert lines[0] == "lens-diagram v1"
        assert lines[1] == "L simple_knot(7,3,2)"
        assert lines[2] == "X 0 pos=0/1 dir=+1 wind=0"
        assert lines[4] == "X 2 pos=6/7 dir=+1 wind=1"
        assert lines[-2].startswith("Z pos=")
        assert lines[-1].startswith("W pos=")

    def test_comments_and_blank_lines(self, simple_7_3_2):
        text = dumps(simple_7_3_2).replace("\nX 3", "\n\n# comment\nX 3")
        assert loads(text) == simple_7_3_2

    def test_file_roundtrip(self, tempdir, simple_7_3_2):
        file = path.join(tempdir, "knot.txt")
        save_diagram(simple_7_3_2, file)

        assert parse_diagram(file) == simple_7_3_2

    def test_bad_header(self):
        with pytest.raises(ParseError) as e:
            loads("lens-diagram v2\n")

        assert (e.value.line, e.value.column) == (1, 1)

    def test_bad_field(self):
        text = diagram_text(
            "X 0 pos=0/1 dir=+1 wind=1",
            "Z pos=1/2 y=1/4",
            "W pos=half y=1/4",
        )

        with pytest.raises(ParseError) as e:
            loads(text)

        assert (e.value.line, e.value.column) == (4, 7)

    def test_bad_direction(self):
        text = diagram_text(
            "X 0 pos=1/2 dir=+2 wind=0",
            "Z pos=1/4 y=1/2",
            "W pos=3/4 y=1/2",
        )

        with pytest.raises(ParseError) as e:
            loads(text)

        assert (e.value.line, e.value.column) == (2, 17)
        assert str(e.value).startswith("line 2, column 17: ")

    def test_bad_index(self):
        text = diagram_text("X 1 pos=0/1 dir=+1 wind=0")

        with pytest.raises(ParseError) as e:
            loads(text)

        assert (e.value.line, e.value.column) == (2, 3)

    def test_duplicate_position(self):
        text = diagram_text(
            "X 0 pos=0/1 dir=+1 wind=0",
            "X 1 pos=0/1 dir=+1 wind=1",
        )

        with pytest.raises(ParseError) as e:
            loads(text)

        assert (e.value.line, e.value.column) == (3, 5)
        assert "line 2" in e.value.message

    def test_out_of_range(self):
        text = diagram_text("X 0 pos=3/2 dir=+1 wind=0")

        with pytest.raises(ParseError) as e:
            loads(text)

        assert (e.value.line, e.value.column) == (2, 9)

    def test_missing_basepoint(self):
        text = diagram_text(
            "X 0 pos=0/1 dir=+1 wind=1",
            "Z pos=1/2 y=1/4",
        )

        with pytest.raises(ParseError) as e:
            loads(text)

        assert e.value.line == 4
        assert "W" in e.value.message

    def test_unknown_record(self):
        text = diagram_text("Y 0")

        with pytest.raises(ParseError) as e:
            loads(text)

        assert (e.value.line, e.value.column) == (2, 1)

    def test_zero_denominator(self):
        for fraction in ("0/0", "0/00", "1/000"):
            text = diagram_text("X 0 pos={} dir=+1 wind=0".format(fraction))

            with pytest.raises(ParseError) as e:
                loads(text)

            assert (e.value.line, e.value.column) == (2, 9)

        text = diagram_text(
            "X 0 pos=0/1 dir=+1 wind=1",
            "Z pos=1/2 y=1/00",
            "W pos=1/4 y=1/2",
        )

        with pytest.raises(ParseError) as e:
            loads(text)

        assert (e.value.line, e.value.column) == (3, 13)
