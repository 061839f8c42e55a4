"""Tests for the torus K assembled from a fold sequence."""

from collections.abc import Callable

import pytest

from mtorus.core.models import MarkedMap
from mtorus.folding.decomposer import decompose
from mtorus.groups.smith import AbelianGroup
from mtorus.surface.annuli import build_fold_annulus
from mtorus.surface.checks import check_surface
from mtorus.surface.dump import dump_off
from mtorus.surface.errors import SurfaceError
from mtorus.surface.homology import quotient_homology
from mtorus.surface.models import SurfaceComplex
from mtorus.surface.torus import assemble_torus, spell_circles
from mtorus.triangulation.homology import mapping_torus_homology


def _make_surface(mm: MarkedMap) -> SurfaceComplex:
    return assemble_torus(decompose(mm))


class TestSpellCircles:
    def test_fig8_circles(self, fig8: MarkedMap) -> None:
        circles = spell_circles(decompose(fig8))
        assert len(circles) == 6
        assert circles[0].steps == ("a", "~b", "~a", "b")
        assert circles[-1].alias == 0
        offsets = [c.offset for c in circles]
        assert offsets == sorted(offsets)

    def test_top_circle_edges_alias_bottom(self, fig8: MarkedMap) -> None:
        circles = spell_circles(decompose(fig8))
        top, bottom = circles[-1], circles[0]
        assert {top.edge(j) for j in range(len(top))} == {
            bottom.edge(j) for j in range(len(bottom))
        }


class TestFoldAnnulus:
    def test_needs_cancelled_corner(self, fig8: MarkedMap) -> None:
        seq = decompose(fig8)
        circles = spell_circles(seq)
        with pytest.raises(SurfaceError, match="no subpath of either normal form for a ~b_2"):
            build_fold_annulus(seq.folds[0], circles[0], circles[2])

    def test_collapsed_fold(self, theta: MarkedMap) -> None:
        seq = decompose(theta)
        circles = spell_circles(seq)
        piece = build_fold_annulus(seq.folds[2], circles[5], circles[6], 5)
        assert len(circles[5]) - len(circles[6]) == 4
        assert sum(1 for t in piece.triangles if t.cell == "fold") == 4
        assert len(piece.triangles) == 2 * len(piece.pairs)


class TestAssembleTorus:
    def test_fig8_annuli(self, fig8: MarkedMap) -> None:
        k = _make_surface(fig8)
        assert [a.kind for a in k.annuli] == [
            "subdivision",
            "fold",
            "subdivision",
            "fold",
            "final",
        ]
        assert sum(a.triangle_count for a in k.annuli) == len(k.triangles)

    def test_surface_checks_pass(self, load_map: Callable[[str], MarkedMap]) -> None:
        for name in ("fig8.map", "example1.map", "rose1_identity.map", "rose2_identity.map"):
            report = check_surface(_make_surface(load_map(name)))
            assert report.ok, f"{name}: {report}"
            assert report.euler_characteristic == 0
            assert report.orientable
            assert report.pairing_involution
            assert report.pairing_reverses_orientation

    def test_pairing_covers_every_triangle(self, example1: MarkedMap) -> None:
        k = _make_surface(example1)
        paired = sorted([p.first for p in k.pairs] + [p.second for p in k.pairs])
        assert paired == list(range(len(k.triangles)))

    def test_pairs_stay_in_one_annulus(self, example1: MarkedMap) -> None:
        k = _make_surface(example1)
        for pair in k.pairs:
            assert k.triangles[pair.first].annulus == k.triangles[pair.second].annulus

    def test_identity_has_only_final_annulus(self, load_map: Callable[[str], MarkedMap]) -> None:
        k = _make_surface(load_map("rose1_identity.map"))
        assert [a.kind for a in k.annuli] == ["final"]

    def test_broken_complex_reported(self, fig8: MarkedMap) -> None:
        k = _make_surface(fig8)
        broken = k.model_copy(update={"triangles": k.triangles[:-1]})
        report = check_surface(broken)
        assert not report.ok
        assert not report.closed
        assert any("lies in 1 triangles" in failure for failure in report.failures)

    def test_dangling_pair_reported(self, fig8: MarkedMap) -> None:
        k = _make_surface(fig8)
        size = len(k.triangles)
        stray = k.pairs[0].model_copy(update={"second": size + 3})
        broken = k.model_copy(update={"pairs": [stray, *k.pairs[1:]]})
        report = check_surface(broken)
        assert not report.ok
        assert not report.pairing_involution
        assert f"pairing names missing triangles [{size + 3}]" in report.failures

    def test_theta_surface(self, theta: MarkedMap) -> None:
        k = _make_surface(theta)
        report = check_surface(k)
        assert report.ok, str(report)
        assert [a.kind for a in k.annuli].count("fold") == 3
        assert quotient_homology(k) == AbelianGroup(rank=1, torsion=(2, 2))


class TestQuotientHomology:
    def test_fig8(self, fig8: MarkedMap) -> None:
        assert quotient_homology(_make_surface(fig8)) == AbelianGroup(rank=1)

    @pytest.mark.parametrize(
        ("name", "rank"),
        [("rose1_identity.map", 3), ("rose2_identity.map", 5)],
    )
    def test_identity_maps(
        self, load_map: Callable[[str], MarkedMap], name: str, rank: int
    ) -> None:
        assert quotient_homology(_make_surface(load_map(name))) == AbelianGroup(rank=rank)

    def test_matches_graph_map(self, example1: MarkedMap) -> None:
        k = _make_surface(example1)
        assert quotient_homology(k) == mapping_torus_homology(example1)


class TestDumpOff:
    def test_header_counts(self, fig8: MarkedMap) -> None:
        k = _make_surface(fig8)
        lines = dump_off(k).splitlines()
        assert lines[0] == "OFF"
        assert lines[1] == f"{len(k.canonical)} {len(k.triangles)} {len(k.edges)}"
        assert sum(1 for line in lines if line.startswith("3 ")) == len(k.triangles)
        assert sum(1 for line in lines if line.startswith("# pair ")) == len(k.pairs)
