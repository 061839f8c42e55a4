"""Command-line front end: ``mtorus <command> INPUT... [-o OUTPUT]``.

Artifacts go to the output path (or standard output), diagnostics to standard error. Exit
status is 0 on success, 1 when an input fails validation and 2 on I/O or parse errors.
"""

import argparse
import logging
import os
import sys
import tempfile
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Literal, Self

from pydantic import BaseModel, ValidationError, model_validator

from mtorus.core.models import MarkedMap
from mtorus.core.protocols import TriangulationWriter
from mtorus.folding import DecompositionError, FoldError, decompose, format_trace
from mtorus.graphs import (
    GenusError,
    InvalidMarkedMapError,
    MarkedMapParseError,
    PathError,
    genus,
    map_size,
    parse_marked_map,
)
from mtorus.groups import (
    PresentationError,
    abelianization,
    pi1_presentation,
    tietze_simplify,
)
from mtorus.snappea import SnapPeaError, SnapPeaParseError, SnapPeaWriter, read_snappea
from mtorus.snappea.models import MAGIC
from mtorus.surface import SurfaceError
from mtorus.tg import TgEmitError, TgParseError, TgRealizeError, TgWriter, parse_tg, realize
from mtorus.triangulation import (
    PipelineConfig,
    PipelineError,
    Triangulation3,
    TriangulationError,
    build_mapping_torus,
    edge_cycles,
    edge_orbits,
    first_homology,
    triangulation_presentation,
    vertex_links,
)

logger = logging.getLogger(__name__)

Command = Literal["decompose", "triangulate", "convert", "verify", "group", "info"]
InputKind = Literal["marked-map", "tg", "snappea"]

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2
STDIO = "-"
JOBS_ENV = "MTORUS_JOBS"

EXTENSIONS: dict[Command, str] = {
    "decompose": "trace",
    "triangulate": "tg",
    "convert": "tri",
    "verify": "txt",
    "group": "txt",
    "info": "txt",
}

PARSE_ERRORS = (MarkedMapParseError, TgParseError, SnapPeaParseError, OSError, UnicodeDecodeError)
VALIDATION_ERRORS = (
    InvalidMarkedMapError,
    GenusError,
    PathError,
    DecompositionError,
    FoldError,
    SurfaceError,
    TriangulationError,
    PipelineError,
    TgRealizeError,
    TgEmitError,
    SnapPeaError,
    PresentationError,
)


class RunConfig(BaseModel):
    """One CLI invocation."""

    command: Command
    inputs: list[str]
    output: str | None = None
    format: Literal["tg", "snappea"] = "tg"
    verification: Literal["basic", "full"] = "basic"
    verbose: bool = False
    jobs: int = 1

    @model_validator(mode="after")
    def _check_paths(self) -> Self:
        if not self.inputs:
            msg = "at least one input is required"
            raise ValueError(msg)
        if self.inputs.count(STDIO) > 1:
            msg = "standard input can be read only once"
            raise ValueError(msg)
        if self.jobs < 1:
            msg = "jobs must be at least 1"
            raise ValueError(msg)
        if len(self.inputs) > 1 and self.output == STDIO:
            msg = "several inputs need an output directory, not standard output"
            raise ValueError(msg)
        return self

    @property
    def extension(self) -> str:
        if self.command == "triangulate" and self.format == "snappea":
            return "tri"
        return EXTENSIONS[self.command]


class Outcome(BaseModel):
    """Result of one input: an artifact to write, messages for standard error, an exit code."""

    source: str
    code: int = EXIT_OK
    artifact: str | None = None
    messages: list[str] = []


def setup_logging(verbose: bool = False) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def detect_kind(text: str) -> InputKind:
    """Guess the input format from its first meaningful line."""
    for raw in text.splitlines():
        if raw.strip() == MAGIC:
            return "snappea"
        line = raw.split("//", 1)[0].split("#", 1)[0].strip()
        if not line:
            continue
        if line.split()[0] in ("T", "G"):
            return "tg"
        return "marked-map"
    return "marked-map"


def _stem(source: str) -> str:
    return "stdin" if source == STDIO else Path(source).stem


def _load_triangulation(text: str, source: str) -> Triangulation3:
    if detect_kind(text) == "snappea":
        return read_snappea(text).to_triangulation()
    return realize(parse_tg(text, source))


def _writer(config: RunConfig) -> TriangulationWriter:
    return SnapPeaWriter() if config.format == "snappea" else TgWriter()


def _triangulation_report(t: Triangulation3) -> list[str]:
    edge_cycles(t)
    links = vertex_links(t)
    return [
        f"{t.size} tetrahedra, {links.summary()}",
        f"edge orbits: {len(edge_orbits(t))}",
        f"H1: {first_homology(t)}",
    ]


def _map_report(mm: MarkedMap, verification: Literal["basic", "full"]) -> list[str]:
    result = build_mapping_torus(mm, PipelineConfig(verification=verification))
    d = result.diagnostics
    bound = d.bound
    bound_text = (
        f"{d.tetrahedra} {'<=' if d.within_bound else '>'} {bound.bound}"
        if bound.applicable
        else f"{bound.bound} (not applicable: {bound.reason})"
    )
    lines = [
        f"{d.tetrahedra} tetrahedra, {d.links}",
        f"genus: {d.genus}",
        f"size: {map_size(mm.map)}",
        f"sizes: {' '.join(str(s) for s in d.sizes)}",
        f"folds: {d.folds} ({d.partial_folds} partial, {d.full_folds} full)",
        f"annulus triangles: {' '.join(str(n) for n in d.annulus_triangles)}",
        f"edge orbits: {d.edge_orbits}",
        f"vertex orbits: {d.vertex_orbits}",
        f"bound: {bound_text}",
    ]
    if d.homology is not None:
        lines.append(f"H1: {d.homology}")
    return lines


def _execute(config: RunConfig, source: str, text: str) -> str:
    """Run ``config.command`` on one input and return its artifact."""
    name = _stem(source)
    label = None if source == STDIO else source
    command = config.command
    if command == "decompose":
        return format_trace(decompose(parse_marked_map(text, label)))
    if command == "triangulate":
        mm = parse_marked_map(text, label)
        result = build_mapping_torus(mm, PipelineConfig(verification=config.verification))
        logger.info("%s: %s", source, result.diagnostics.links)
        return _writer(config).write(result.triangulation, name)
    if command == "convert":
        return SnapPeaWriter().write(_load_triangulation(text, source), name)

    kind = detect_kind(text)
    if command == "verify":
        if kind == "marked-map":
            return "\n".join(_map_report(parse_marked_map(text, label), "full")) + "\n"
        return "\n".join(_triangulation_report(_load_triangulation(text, source))) + "\n"
    if command == "group":
        if kind == "marked-map":
            presentation = pi1_presentation(parse_marked_map(text, label))
        else:
            presentation = triangulation_presentation(_load_triangulation(text, source))
        simplified = tietze_simplify(presentation)
        return (
            f"presentation: {presentation}\n"
            f"simplified: {simplified}\n"
            f"H1: {abelianization(simplified)}\n"
        )
    if kind != "marked-map":
        return "\n".join(_triangulation_report(_load_triangulation(text, source))) + "\n"
    mm = parse_marked_map(text, label)
    header = [
        f"vertices: {mm.graph.num_vertices}",
        f"edges: {mm.graph.num_edges}",
        f"genus: {genus(mm.graph)}",
    ]
    return "\n".join(header + _map_report(mm, config.verification)) + "\n"


def process(config: RunConfig, source: str, text: str | None) -> Outcome:
    """Run one input to an Outcome; never raises for domain errors."""
    try:
        if text is None:
            text = Path(source).read_text(encoding="utf-8")
        artifact = _execute(config, source, text)
    except PARSE_ERRORS as exc:
        return Outcome(source=source, code=EXIT_IO, messages=[f"{source}: {exc}"])
    except VALIDATION_ERRORS as exc:
        return Outcome(source=source, code=EXIT_INVALID, messages=[f"{source}: {exc}"])
    return Outcome(source=source, artifact=artifact)


def write_atomic(path: Path, text: str) -> None:
    """Write through a temporary file in the target directory, then rename over ``path``."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with tempfile.NamedTemporaryFile(
        "w", encoding="utf-8", dir=path.parent, prefix=f".{path.name}.", delete=False
    ) as handle:
        handle.write(text)
        temporary = handle.name
    os.replace(temporary, path)


def _destination(config: RunConfig, source: str) -> Path | None:
    if config.output is None or config.output == STDIO:
        return None
    target = Path(config.output)
    if len(config.inputs) > 1 or target.is_dir():
        return target / f"{_stem(source)}.{config.extension}"
    return target


def _emit(config: RunConfig, outcome: Outcome) -> int:
    for message in outcome.messages:
        print(f"mtorus: {message}", file=sys.stderr)
    if outcome.artifact is None:
        return outcome.code
    destination = _destination(config, outcome.source)
    if destination is None:
        sys.stdout.write(outcome.artifact)
        return outcome.code
    try:
        write_atomic(destination, outcome.artifact)
    except OSError as exc:
        print(f"mtorus: {destination}: {exc}", file=sys.stderr)
        return EXIT_IO
    return outcome.code


def execute(config: RunConfig) -> int:
    """Process every input, in parallel when ``jobs`` > 1, and return the worst exit code."""
    stdin_text = sys.stdin.read() if STDIO in config.inputs else None
    texts = [stdin_text if source == STDIO else None for source in config.inputs]
    if config.jobs > 1 and len(config.inputs) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            outcomes = list(
                pool.map(process, [config] * len(config.inputs), config.inputs, texts)
            )
    else:
        outcomes = [
            process(config, source, text)
            for source, text in zip(config.inputs, texts, strict=True)
        ]
    return max((_emit(config, outcome) for outcome in outcomes), default=EXIT_OK)


def _default_jobs() -> int:
    value = os.environ.get(JOBS_ENV, "1")
    try:
        return max(1, int(value))
    except ValueError:
        logger.warning("ignoring %s=%r, not an integer", JOBS_ENV, value)
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mtorus",
        description="Triangulate mapping tori of punctured-surface homeomorphisms.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  mtorus decompose fig8.map                 Print the fold sequence
  mtorus triangulate fig8.map -o fig8.tg    Write a T/G triangulation
  mtorus triangulate fig8.map | mtorus convert - -o fig8.tri
  mtorus verify m004.tg                     Check links, edges and homology
  mtorus group fig8.map                     HNN presentation and H1
  mtorus info maps/*.map -o reports -j 4    Batch statistics
        """,
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("inputs", nargs="+", help="input files, '-' for standard input")
    common.add_argument("-o", "--output", help="output file or directory, '-' for stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    common.add_argument(
        "-j",
        "--jobs",
        type=int,
        default=None,
        help=f"parallel jobs for several inputs (default: ${JOBS_ENV} or 1)",
    )
    common.add_argument(
        "--verify",
        dest="verification",
        choices=["basic", "full"],
        default="basic",
        help="pipeline verification level",
    )

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("decompose", parents=[common], help="print the fold sequence")
    triangulate = sub.add_parser(
        "triangulate", parents=[common], help="marked map to triangulation"
    )
    triangulate.add_argument("--format", choices=["tg", "snappea"], default="tg")
    sub.add_parser("convert", parents=[common], help="T/G to SnapPea")
    sub.add_parser("verify", parents=[common], help="run every check on any input kind")
    sub.add_parser("group", parents=[common], help="presentations and first homology")
    sub.add_parser("info", parents=[common], help="counts, folds and the tetrahedron bound")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_IO
    setup_logging(args.verbose)
    try:
        config = RunConfig(
            command=args.command,
            inputs=args.inputs,
            output=args.output,
            format=getattr(args, "format", "tg"),
            verification=args.verification,
            verbose=args.verbose,
            jobs=args.jobs if args.jobs is not None else _default_jobs(),
        )
    except ValidationError as exc:
        for error in exc.errors():
            print(f"mtorus: {error['msg']}", file=sys.stderr)
        return EXIT_IO
    return execute(config)


def main() -> None:
    sys.exit(run())
