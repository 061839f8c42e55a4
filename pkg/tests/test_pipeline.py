"""End-to-end tests for build_mapping_torus on the fixture maps."""

from collections.abc import Callable

import pytest

from mtorus.core.models import MarkedMap
from mtorus.graphs.errors import InvalidMarkedMapError
from mtorus.graphs.parser import parse_marked_map
from mtorus.graphs.paths import power
from mtorus.groups.smith import AbelianGroup
from mtorus.snappea.reader import read_snappea
from mtorus.snappea.writer import write_snappea
from mtorus.surface.models import SurfaceComplex
from mtorus.triangulation.cone import APEX, cone_and_glue
from mtorus.triangulation.config import PipelineConfig
from mtorus.triangulation.errors import PipelineError
from mtorus.triangulation.homology import first_homology, mapping_torus_homology
from mtorus.triangulation.links import vertex_links
from mtorus.triangulation.orbits import edge_cycles, vertex_orbits
from mtorus.triangulation.orient import is_orientable
from mtorus.triangulation.pipeline import build_mapping_torus, tetrahedron_bound

FULL = PipelineConfig(verification="full")


class TestConeAndGlue:
    def test_one_tetrahedron_per_triangle(self, fig8: MarkedMap) -> None:
        result = build_mapping_torus(fig8)
        surface: SurfaceComplex = result.surface
        t = cone_and_glue(surface)
        assert t.size == len(surface.triangles)
        assert t.is_closed

    def test_base_faces_follow_pairing(self, fig8: MarkedMap) -> None:
        result = build_mapping_torus(fig8)
        t = result.triangulation
        for pair in result.surface.pairs:
            other, perm = t.glue(pair.first, APEX)
            assert other == pair.second
            assert perm == (*pair.corners, APEX)

    def test_apexes_form_one_vertex(self, fig8: MarkedMap) -> None:
        t = build_mapping_torus(fig8).triangulation
        apex_orbits = [
            orbit for orbit in vertex_orbits(t) if any(v == APEX for _, v in orbit)
        ]
        assert len(apex_orbits) == 1
        assert len(apex_orbits[0]) == t.size


class TestFig8:
    def test_links(self, fig8: MarkedMap) -> None:
        result = build_mapping_torus(fig8)
        ideal = result.links.ideal
        assert len(ideal) == 1
        assert ideal[0].surface == "torus"
        assert all(link.surface == "sphere" for link in result.links.finite)

    def test_diagnostics(self, fig8: MarkedMap) -> None:
        d = build_mapping_torus(fig8).diagnostics
        assert d.genus == 1
        assert d.sizes == (5, 3, 2)
        assert d.folds == 2
        assert d.bound.bound == 240
        assert d.bound.applicable
        assert d.within_bound
        assert d.tetrahedra == sum(d.annulus_triangles)

    def test_full_verification(self, fig8: MarkedMap) -> None:
        result = build_mapping_torus(fig8, FULL)
        assert result.diagnostics.homology == "Z"
        assert first_homology(result.triangulation) == AbelianGroup(rank=1)

    def test_orientable(self, fig8: MarkedMap) -> None:
        assert is_orientable(build_mapping_torus(fig8).triangulation)

    def test_every_edge_closes_up(self, fig8: MarkedMap) -> None:
        t = build_mapping_torus(fig8).triangulation
        cycles = edge_cycles(t)
        assert sum(cycle.valence for cycle in cycles) == 6 * t.size


class TestExample1:
    def test_within_bound(self, example1: MarkedMap) -> None:
        d = build_mapping_torus(example1).diagnostics
        assert d.genus == 2
        assert d.sizes[0] == 23
        assert d.bound.bound == 2944
        assert d.bound.applicable
        assert d.tetrahedra <= 2944

    def test_links_and_homology(self, example1: MarkedMap) -> None:
        result = build_mapping_torus(example1, FULL)
        assert result.links.summary().startswith("1 torus cusp")
        assert result.diagnostics.homology == str(mapping_torus_homology(example1))


class TestTheta:
    def test_links(self, theta: MarkedMap) -> None:
        result = build_mapping_torus(theta)
        assert result.links.summary().startswith("1 torus cusp")
        assert all(link.surface == "sphere" for link in result.links.finite)
        assert is_orientable(result.triangulation)

    def test_homology(self, theta: MarkedMap) -> None:
        result = build_mapping_torus(theta, FULL)
        expected = AbelianGroup(rank=1, torsion=(2, 2))
        assert mapping_torus_homology(theta) == expected
        assert first_homology(result.triangulation) == expected
        assert result.diagnostics.homology == "Z + Z/2 + Z/2"

    def test_diagnostics(self, theta: MarkedMap) -> None:
        d = build_mapping_torus(theta).diagnostics
        assert d.sizes == (7, 6, 5, 3)
        assert (d.partial_folds, d.full_folds) == (1, 2)
        assert not d.bound.applicable
        assert d.bound.reason == "map is not tight"
        assert d.within_bound

    def test_snappea_output(self, theta: MarkedMap) -> None:
        t = build_mapping_torus(theta).triangulation
        parsed = read_snappea(write_snappea(t, "theta"))
        assert parsed.cusps == ("torus",)
        assert first_homology(parsed.to_triangulation()) == first_homology(t)


class TestIdentityMaps:
    @pytest.mark.parametrize(
        ("name", "rank"),
        [("rose1_identity.map", 3), ("rose2_identity.map", 5)],
    )
    def test_product_homology(
        self, load_map: Callable[[str], MarkedMap], name: str, rank: int
    ) -> None:
        result = build_mapping_torus(load_map(name), FULL)
        assert first_homology(result.triangulation) == AbelianGroup(rank=rank)
        assert len(result.links.ideal) == 1

    def test_bound_not_applicable(self, load_map: Callable[[str], MarkedMap]) -> None:
        mm = load_map("rose1_identity.map")
        check = tetrahedron_bound(mm)
        assert not check.applicable
        assert check.reason == "no folds"
        assert check.admits(1000)


class TestBound:
    def test_low_valence_not_applicable(self) -> None:
        text = (
            "vertices: 0 1\n"
            "edge a 0 1\n"
            "edge b 1 0\n"
            "edge c 0 0\n"
            "map a = a\n"
            "map b = b\n"
            "map c = c\n"
            "boundary = a b c\n"
        )
        check = tetrahedron_bound(parse_marked_map(text))
        assert check.reason == "a vertex has valence below 3"

    def test_exceeded_bound(self, fig8: MarkedMap) -> None:
        check = tetrahedron_bound(fig8)
        assert check.applicable
        assert check.admits(240)
        assert not check.admits(241)


class TestFailures:
    def test_invalid_map_names_stage(self) -> None:
        text = "vertices: 0\nedge a 0 0\nedge b 0 0\nmap a = b\nmap b = a\nboundary = a ~b ~a b\n"
        with pytest.raises(PipelineError) as info:
            build_mapping_torus(parse_marked_map(text))
        assert info.value.stage == "decompose"
        assert isinstance(info.value.original_error, InvalidMarkedMapError)
        assert "decompose failed" in str(info.value)


@pytest.mark.slow
@pytest.mark.timeout(300)
class TestIterates:
    @pytest.mark.parametrize("k", [2, 3])
    def test_fig8_powers(self, fig8: MarkedMap, k: int) -> None:
        mm = power(fig8, k)
        result = build_mapping_torus(mm, FULL)
        assert len(result.links.ideal) == 1
        assert result.diagnostics.within_bound
        assert first_homology(result.triangulation) == mapping_torus_homology(mm)
        assert vertex_links(result.triangulation).summary() == result.diagnostics.links
