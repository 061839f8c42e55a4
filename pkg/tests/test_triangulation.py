"""Tests for tetrahedral triangulations: gluings, orbits, links, homology and isomorphism."""

import pytest
from pydantic import ValidationError

from mtorus.groups.presentation import abelianization
from mtorus.groups.smith import AbelianGroup
from mtorus.groups.tietze import tietze_simplify
from mtorus.triangulation.errors import TriangulationError
from mtorus.triangulation.homology import first_homology
from mtorus.triangulation.isomorphism import canonical_form, is_isomorphic
from mtorus.triangulation.links import surface_name, vertex_links
from mtorus.triangulation.models import FaceGluing, Tetrahedron, Triangulation3
from mtorus.triangulation.orbits import edge_cycles, edge_orbits, vertex_orbits
from mtorus.triangulation.orient import SWAP_01, is_orientable, orient, relabel
from mtorus.triangulation.perm import (
    ALL_PERMS,
    IDENTITY,
    compose,
    decode,
    encode,
    inverse,
    sign,
)
from mtorus.triangulation.presentation import triangulation_presentation


def _reindex(t: Triangulation3, order: list[int]) -> Triangulation3:
    """Renumber tetrahedra so that old tetrahedron ``order[k]`` becomes ``k``."""
    new = {old: k for k, old in enumerate(order)}
    tetrahedra = []
    for old in order:
        tet = t.tetrahedra[old]
        neighbors = tuple(None if u is None else new[u] for u in tet.neighbors)
        tetrahedra.append(Tetrahedron(neighbors=neighbors, gluings=tet.gluings))
    return Triangulation3(tetrahedra=tetrahedra)


def _make_mirror_pair() -> Triangulation3:
    """Two tetrahedra glued face to face by the identity on all four faces."""
    return Triangulation3.from_gluings(
        2, [FaceGluing(tet=0, face=f, other=1, perm=IDENTITY) for f in range(4)]
    )


class TestPerm:
    def test_all_perms(self) -> None:
        assert len(ALL_PERMS) == 24
        assert ALL_PERMS[0] == IDENTITY

    def test_compose_and_inverse(self) -> None:
        p = (1, 2, 3, 0)
        assert compose(p, inverse(p)) == IDENTITY
        assert compose(p, p) == (2, 3, 0, 1)

    def test_sign(self) -> None:
        assert sign(IDENTITY) == 1
        assert sign(SWAP_01) == -1
        assert sign((1, 2, 3, 0)) == -1

    def test_encode_decode(self) -> None:
        assert encode(IDENTITY) == "0123"
        assert decode("1023") == (1, 0, 2, 3)

    def test_decode_rejects_non_perm(self) -> None:
        with pytest.raises(ValueError, match="not a permutation"):
            decode("0113")


class TestModels:
    def test_m004_structure(self, m004: Triangulation3) -> None:
        assert m004.size == 2
        assert m004.is_closed
        assert len(list(m004.face_gluings())) == 4
        assert m004.glue(0, 0) == (1, (3, 0, 1, 2))
        assert m004.glue(1, 3) == (0, inverse((3, 0, 1, 2)))

    def test_reverse_gluing(self) -> None:
        gluing = FaceGluing(tet=0, face=1, other=2, perm=(1, 0, 2, 3))
        back = gluing.reverse()
        assert (back.tet, back.face, back.other) == (2, 0, 0)
        assert back.reverse() == gluing

    def test_double_gluing_rejected(self) -> None:
        gluings = [
            FaceGluing(tet=0, face=0, other=1, perm=IDENTITY),
            FaceGluing(tet=0, face=0, other=1, perm=SWAP_01),
        ]
        with pytest.raises(ValueError, match="glued twice"):
            Triangulation3.from_gluings(2, gluings)

    def test_asymmetric_gluing_rejected(self) -> None:
        one_sided = Tetrahedron(
            neighbors=(1, None, None, None), gluings=(IDENTITY, None, None, None)
        )
        with pytest.raises(ValidationError, match="not matched"):
            Triangulation3(tetrahedra=[one_sided, Tetrahedron()])

    def test_face_glued_to_itself_rejected(self) -> None:
        tet = Tetrahedron(neighbors=(0, None, None, None), gluings=(IDENTITY, None, None, None))
        with pytest.raises(ValidationError, match="glued to itself"):
            Triangulation3(tetrahedra=[tet])

    def test_bad_perm_rejected(self) -> None:
        with pytest.raises(ValidationError, match="not a permutation"):
            Tetrahedron(neighbors=(0, None, None, None), gluings=((0, 0, 1, 2), None, None, None))

    def test_unglued_faces(self) -> None:
        t = Triangulation3(tetrahedra=[Tetrahedron()])
        assert not t.is_closed
        assert t.unglued_faces() == [(0, 0), (0, 1), (0, 2), (0, 3)]
        with pytest.raises(KeyError):
            t.glue(0, 0)


class TestOrbits:
    def test_single_vertex(self, m004: Triangulation3) -> None:
        orbits = vertex_orbits(m004)
        assert len(orbits) == 1
        assert len(orbits[0]) == 8

    def test_two_edges_of_valence_six(self, m004: Triangulation3) -> None:
        orbits = edge_orbits(m004)
        assert sorted(orbit.valence for orbit in orbits) == [6, 6]

    def test_edge_cycles_match_orbits(self, m004: Triangulation3) -> None:
        cycles = edge_cycles(m004)
        assert sorted(cycle.valence for cycle in cycles) == [6, 6]
        assert all(len(cycle.edges) == len(cycle.exits) for cycle in cycles)

    def test_edge_cycles_need_closed_input(self) -> None:
        with pytest.raises(TriangulationError, match="unglued"):
            edge_cycles(Triangulation3(tetrahedra=[Tetrahedron()]))

    def test_mirror_pair_vertices(self) -> None:
        assert len(vertex_orbits(_make_mirror_pair())) == 4


class TestLinks:
    @pytest.mark.parametrize(
        ("chi", "orientable", "name"),
        [
            (2, True, "sphere"),
            (0, True, "torus"),
            (-2, True, "genus-2 surface"),
            (1, False, "projective plane"),
            (0, False, "Klein bottle"),
        ],
    )
    def test_surface_name(self, chi: int, orientable: bool, name: str) -> None:
        assert surface_name(chi, orientable) == name

    def test_m004_torus_cusp(self, m004: Triangulation3) -> None:
        report = vertex_links(m004)
        assert len(report.links) == 1
        link = report.links[0]
        assert (link.vertices, link.edges, link.triangles) == (4, 12, 8)
        assert link.surface == "torus"
        assert link.kind == "ideal"
        assert report.summary() == "1 torus cusp"

    def test_mirror_pair_has_sphere_links(self) -> None:
        report = vertex_links(_make_mirror_pair())
        assert len(report.finite) == 4
        assert report.ideal == []
        assert report.summary() == "4 finite vertices"


class TestHomology:
    def test_m004(self, m004: Triangulation3) -> None:
        assert first_homology(m004) == AbelianGroup(rank=1)

    def test_mirror_pair_is_sphere(self) -> None:
        assert first_homology(_make_mirror_pair()) == AbelianGroup(rank=0)

    def test_presentation_abelianizes_to_homology(self, m004: Triangulation3) -> None:
        presentation = triangulation_presentation(m004)
        assert len(presentation.generators) == 3
        simplified = tietze_simplify(presentation)
        assert abelianization(simplified) == AbelianGroup(rank=1)


class TestOrient:
    def test_m004_orientable(self, m004: Triangulation3) -> None:
        assert is_orientable(m004)
        oriented = orient(m004)
        assert oriented is not None
        assert all(sign(g.perm) == -1 for g in oriented.face_gluings())

    def test_orient_flips_negative_tetrahedra(self) -> None:
        """Identity gluings are orientation-preserving, so one tetrahedron is relabeled."""
        t = _make_mirror_pair()
        oriented = orient(t)
        assert oriented is not None
        assert all(sign(g.perm) == -1 for g in oriented.face_gluings())
        assert is_isomorphic(t, oriented)

    def test_relabel_keeps_structure(self, m004: Triangulation3) -> None:
        moved = relabel(m004, [(2, 0, 3, 1), (1, 3, 0, 2)])
        assert moved.is_closed
        assert vertex_links(moved).summary() == "1 torus cusp"
        assert first_homology(moved) == AbelianGroup(rank=1)


class TestIsomorphism:
    def test_relabel_and_reindex(self, m004: Triangulation3) -> None:
        moved = _reindex(relabel(m004, [(3, 1, 0, 2), SWAP_01]), [1, 0])
        assert canonical_form(moved) == canonical_form(m004)
        assert is_isomorphic(m004, moved)

    def test_different_triangulations(self, m004: Triangulation3) -> None:
        assert not is_isomorphic(m004, _make_mirror_pair())

    def test_disconnected_rejected(self) -> None:
        with pytest.raises(TriangulationError, match="connected"):
            canonical_form(Triangulation3(tetrahedra=[Tetrahedron(), Tetrahedron()]))
