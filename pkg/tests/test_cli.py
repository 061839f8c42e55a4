"""Tests for the mtorus command-line front end."""

import io
from pathlib import Path

import pytest
from pydantic import ValidationError

from mtorus.cli import (
    EXIT_INVALID,
    EXIT_IO,
    EXIT_OK,
    RunConfig,
    _default_jobs,
    detect_kind,
    process,
    run,
)
from mtorus.snappea.models import MAGIC

FIXTURES_DIR = Path(__file__).parent / "fixtures"
FIG8 = str(FIXTURES_DIR / "fig8.map")
ROSE1 = str(FIXTURES_DIR / "rose1_identity.map")
M004 = str(FIXTURES_DIR / "m004.tg")
THETA = str(FIXTURES_DIR / "theta.map")

SWAP_MAP = "vertices: 0\nedge a 0 0\nedge b 0 0\nmap a = b\nmap b = a\nboundary = a ~b ~a b\n"


class TestDetectKind:
    def test_marked_map(self) -> None:
        assert detect_kind((FIXTURES_DIR / "fig8.map").read_text()) == "marked-map"

    def test_tg(self) -> None:
        assert detect_kind("// comment\n\nT a b c d\n") == "tg"

    def test_snappea(self) -> None:
        assert detect_kind(f"{MAGIC}\nfig8\n") == "snappea"

    def test_empty_defaults_to_marked_map(self) -> None:
        assert detect_kind("") == "marked-map"


class TestRunConfig:
    def test_defaults(self) -> None:
        config = RunConfig(command="triangulate", inputs=["a.map"])
        assert config.format == "tg"
        assert config.verification == "basic"
        assert config.jobs == 1
        assert config.extension == "tg"

    def test_snappea_extension(self) -> None:
        config = RunConfig(command="triangulate", inputs=["a.map"], format="snappea")
        assert config.extension == "tri"

    @pytest.mark.parametrize(
        ("kwargs", "message"),
        [
            ({"inputs": []}, "at least one input"),
            ({"inputs": ["-", "-"]}, "read only once"),
            ({"inputs": ["a.map"], "jobs": 0}, "jobs must be at least 1"),
            ({"inputs": ["a.map", "b.map"], "output": "-"}, "output directory"),
        ],
    )
    def test_rejected(self, kwargs: dict[str, object], message: str) -> None:
        with pytest.raises(ValidationError, match=message):
            RunConfig(command="info", **kwargs)


class TestProcess:
    def test_validation_failure(self) -> None:
        config = RunConfig(command="triangulate", inputs=["swap.map"])
        outcome = process(config, "swap.map", SWAP_MAP)
        assert outcome.code == EXIT_INVALID
        assert outcome.artifact is None
        assert outcome.messages[0].startswith("swap.map: ")

    def test_parse_failure(self) -> None:
        config = RunConfig(command="decompose", inputs=["junk.map"])
        outcome = process(config, "junk.map", "this is not a map\n")
        assert outcome.code == EXIT_IO

    def test_missing_file(self, tmp_path: Path) -> None:
        missing = str(tmp_path / "nope.map")
        outcome = process(RunConfig(command="info", inputs=[missing]), missing, None)
        assert outcome.code == EXIT_IO


class TestCommands:
    def test_decompose(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["decompose", FIG8]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("# input: 1 vertices, 2 edges, size 5\n")
        assert "# terminal homeomorphism g2" in out

    def test_triangulate_to_file(self, tmp_path: Path) -> None:
        target = tmp_path / "fig8.tg"
        assert run(["triangulate", FIG8, "-o", str(target)]) == EXIT_OK
        text = target.read_text()
        assert text.startswith("// fig8\nT ")

    def test_triangulate_snappea(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["triangulate", FIG8, "--format", "snappea"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == MAGIC
        assert lines[1] == "fig8"

    def test_triangulate_from_stdin(
        self, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
    ) -> None:
        monkeypatch.setattr("sys.stdin", io.StringIO((FIXTURES_DIR / "fig8.map").read_text()))
        assert run(["triangulate", "-"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("// stdin\n")

    def test_convert(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["convert", M004]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[:2] == [MAGIC, "m004"]
        assert "torus 0.0 0.0" in lines

    def test_verify_tg(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["verify", M004]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == [
            "2 tetrahedra, 1 torus cusp",
            "edge orbits: 2",
            "H1: Z",
        ]

    def test_verify_map(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["verify", FIG8]) == EXIT_OK
        out = capsys.readouterr().out
        assert "sizes: 5 3 2" in out
        assert "H1: Z\n" in out

    def test_group(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["group", FIG8]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == [
            "presentation: <a, b, t | ~t a t ~a ~b, ~t b t ~a ~b ~b>",
            "simplified: <a, t | ~t a t ~a ~a t a ~t ~a>",
            "H1: Z",
        ]

    def test_info(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["info", FIG8]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[:3] == ["vertices: 1", "edges: 2", "genus: 1"]
        assert "size: 5" in lines
        assert any(line.startswith("bound: ") and line.endswith("<= 240") for line in lines)

    def test_info_identity_bound_not_applicable(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["info", ROSE1]) == EXIT_OK
        assert "(not applicable: no folds)" in capsys.readouterr().out

    def test_info_two_vertex_map(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["info", THETA]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[:3] == ["vertices: 2", "edges: 3", "genus: 1"]
        assert "folds: 3 (1 partial, 2 full)" in lines
        assert "bound: 336 (not applicable: map is not tight)" in lines


class TestBatch:
    def test_output_directory(self, tmp_path: Path) -> None:
        out = tmp_path / "reports"
        assert run(["info", FIG8, ROSE1, "-o", str(out)]) == EXIT_OK
        assert sorted(p.name for p in out.iterdir()) == ["fig8.txt", "rose1_identity.txt"]

    def test_worst_exit_code_wins(
        self, tmp_path: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        bad = tmp_path / "swap.map"
        bad.write_text(SWAP_MAP)
        out = tmp_path / "out"
        code = run(["triangulate", FIG8, str(bad), str(tmp_path / "missing.map"), "-o", str(out)])
        assert code == EXIT_IO
        assert (out / "fig8.tg").exists()
        assert not (out / "swap.tg").exists()
        assert f"mtorus: {bad}: " in capsys.readouterr().err

    def test_invalid_input_exit_code(self, tmp_path: Path) -> None:
        bad = tmp_path / "swap.map"
        bad.write_text(SWAP_MAP)
        assert run(["triangulate", str(bad)]) == EXIT_INVALID

    def test_stdout_with_several_inputs(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["info", FIG8, ROSE1, "-o", "-"]) == EXIT_IO
        assert "output directory" in capsys.readouterr().err


class TestArguments:
    def test_help(self) -> None:
        assert run(["--help"]) == EXIT_OK

    def test_missing_command(self) -> None:
        assert run([]) == EXIT_IO

    def test_jobs_from_environment(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("MTORUS_JOBS", "3")
        assert _default_jobs() == 3
        monkeypatch.setenv("MTORUS_JOBS", "many")
        assert _default_jobs() == 1
        monkeypatch.delenv("MTORUS_JOBS")
        assert _default_jobs() == 1
