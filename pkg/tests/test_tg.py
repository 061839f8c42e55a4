"""Tests for the T/G format: parsing, realizing and emitting."""

import random
from collections.abc import Callable
from itertools import combinations

import pytest

from mtorus.core.models import MarkedMap
from mtorus.graphs.paths import power
from mtorus.groups.smith import AbelianGroup
from mtorus.tg.emitter import TgWriter, emit_tg
from mtorus.tg.errors import TgEmitError, TgParseError, TgRealizeError
from mtorus.tg.parser import TgDocument, TgTetrahedron, parse_tg
from mtorus.tg.realize import face_labels, implicit_gluings, realize
from mtorus.triangulation.homology import first_homology
from mtorus.triangulation.isomorphism import is_isomorphic
from mtorus.triangulation.links import vertex_links
from mtorus.triangulation.models import Tetrahedron, Triangulation3
from mtorus.triangulation.pipeline import build_mapping_torus

SIMPLEX_BOUNDARY = """\
// boundary of the 4-simplex
T 0 1 2 3
T 0 1 2 4
T 0 1 3 4
T 0 2 3 4
T 1 2 3 4
"""

PIPELINE_OUTPUTS = [
    ("fig8.map", 1),
    ("example1.map", 1),
    ("theta.map", 1),
    ("rose1_identity.map", 1),
    ("rose2_identity.map", 1),
    pytest.param("fig8.map", 2, marks=pytest.mark.slow),
    pytest.param("fig8.map", 3, marks=[pytest.mark.slow, pytest.mark.timeout(300)]),
]


def _make_triangulation(mm: MarkedMap, k: int) -> Triangulation3:
    return build_mapping_torus(power(mm, k) if k > 1 else mm).triangulation


def _random_document(rng: random.Random, pool: str) -> TgDocument:
    tetrahedra = []
    for n in range(rng.randint(2, 6)):
        a, b, c, d = rng.sample(pool, 4)
        tetrahedra.append(TgTetrahedron(labels=(a, b, c, d), line=n + 1))
    return TgDocument(tetrahedra=tuple(tetrahedra))


class TestParseTg:
    def test_m004(self, load_fixture: Callable[[str], str]) -> None:
        doc = parse_tg(load_fixture("m004.tg"), "m004.tg")
        assert [t.labels for t in doc.tetrahedra] == [("a", "b", "c", "d"), ("b", "c", "d", "e")]
        assert len(doc.gluings) == 3
        assert doc.gluings[0].first == ("b", "e", "d")
        assert doc.gluings[0].second == ("a", "c", "d")
        assert doc.tetrahedra[0].line == 2
        assert doc.source == "m004.tg"

    def test_comments_and_blank_lines(self) -> None:
        doc = parse_tg("\n// nothing here\n  \nT a b c d // trailing\n")
        assert len(doc.tetrahedra) == 1
        assert doc.tetrahedra[0].line == 4

    @pytest.mark.parametrize(
        ("text", "message"),
        [
            ("T a b c\n", "T needs 4 labels"),
            ("T a b c c\n", "duplicate label in T line"),
            ("G a b c d e\n", "G needs 6 labels"),
            ("G a a c d e f\n", "duplicate label in G line"),
            ("X a b c d\n", "unknown line tag"),
        ],
    )
    def test_malformed_lines(self, text: str, message: str) -> None:
        with pytest.raises(TgParseError, match=message) as info:
            parse_tg("// header\n" + text, "bad.tg")
        assert info.value.line == 2
        assert str(info.value).startswith("bad.tg:2: ")


class TestRealize:
    def test_m004_implicit_gluing(self, load_fixture: Callable[[str], str]) -> None:
        doc = parse_tg(load_fixture("m004.tg"))
        assert implicit_gluings(doc) == [((0, 0), (1, 3))]

    def test_m004_explicit_gluings(self, m004: Triangulation3) -> None:
        assert m004.glue(1, 1) == (0, (0, 1, 3, 2))
        assert m004.glue(1, 2) == (0, (1, 0, 2, 3))
        assert m004.glue(1, 0) == (0, (3, 0, 1, 2))
        assert m004.provenance["source"] == "m004.tg"

    def test_simplex_boundary_is_a_sphere(self) -> None:
        t = realize(parse_tg(SIMPLEX_BOUNDARY))
        assert t.size == 5
        assert t.is_closed
        assert vertex_links(t).summary() == "5 finite vertices"
        assert first_homology(t) == AbelianGroup(rank=0)

    @pytest.mark.parametrize(
        ("text", "message"),
        [
            ("T a b c d\nT d c b a\n", "share all four labels"),
            ("T a b c d\nT a b c e\nT a b c f\n", "shared by 3 faces"),
            ("T a b c d\nG a b c b c a\n", "glued to itself"),
            ("T a b c d\nG a b x a b d\n", "no tetrahedron has the face a b x"),
            ("T a b c d\nT b c d e\nG b c d a b c\n", "glued twice"),
            ("T a b c d\n", "4 unglued faces"),
        ],
    )
    def test_realize_errors(self, text: str, message: str) -> None:
        with pytest.raises(TgRealizeError, match=message):
            realize(parse_tg(text))

    def test_error_carries_line(self) -> None:
        with pytest.raises(TgRealizeError) as info:
            realize(parse_tg("T a b c d\n\nG a b x a b d\n"))
        assert info.value.line == 3


class TestEmitTg:
    def test_corner_labels_round_trip(self, m004: Triangulation3) -> None:
        text = emit_tg(m004)
        lines = text.splitlines()
        assert lines[0] == "T t0_0 t0_1 t0_2 t0_3"
        assert sum(1 for line in lines if line.startswith("G ")) == 4
        assert realize(parse_tg(text)).tetrahedra == m004.tetrahedra

    def test_orbit_labels_when_implicit(self) -> None:
        t = realize(parse_tg(SIMPLEX_BOUNDARY))
        text = emit_tg(t)
        assert not any(line.startswith("G ") for line in text.splitlines())
        assert text.splitlines()[0] == "T v0 v1 v2 v3"
        assert realize(parse_tg(text)).tetrahedra == t.tetrahedra

    def test_forced_corner_labels(self) -> None:
        t = realize(parse_tg(SIMPLEX_BOUNDARY))
        text = emit_tg(t, labels="corners")
        assert sum(1 for line in text.splitlines() if line.startswith("G ")) == 10
        assert realize(parse_tg(text)).tetrahedra == t.tetrahedra

    def test_name_header(self, m004: Triangulation3) -> None:
        assert emit_tg(m004, name="fig8").startswith("// fig8\nT ")

    def test_refuses_unglued(self) -> None:
        with pytest.raises(TgEmitError, match="unglued"):
            emit_tg(Triangulation3(tetrahedra=[Tetrahedron()]))

    def test_writer(self, m004: Triangulation3) -> None:
        writer = TgWriter()
        assert writer.extension == "tg"
        assert writer.write(m004, "fig8") == emit_tg(m004, name="fig8")

    @pytest.mark.parametrize(("name", "k"), PIPELINE_OUTPUTS)
    def test_pipeline_output_round_trip(
        self, load_map: Callable[[str], MarkedMap], name: str, k: int
    ) -> None:
        t = _make_triangulation(load_map(name), k)
        back = realize(parse_tg(emit_tg(t), name))
        assert is_isomorphic(back, t)


class TestImplicitGluings:
    @pytest.mark.parametrize("seed", range(25))
    def test_matches_face_scan(self, seed: int) -> None:
        doc = _random_document(random.Random(seed), "abcdefg")
        faces = [(i, f) for i in range(len(doc.tetrahedra)) for f in range(4)]

        def labels(face: tuple[int, int]) -> frozenset[str]:
            return face_labels(doc.tetrahedra[face[0]].labels, face[1])

        matches = [(x, y) for x, y in combinations(faces, 2) if labels(x) == labels(y)]
        crowded = any(
            sum(1 for face in faces if labels(face) == labels(x)) > 2 for x, _ in matches
        )
        twins = any(
            set(s.labels) == set(t.labels) for s, t in combinations(doc.tetrahedra, 2)
        )
        if crowded or twins:
            with pytest.raises(TgRealizeError):
                implicit_gluings(doc)
        else:
            assert implicit_gluings(doc) == sorted(matches)
