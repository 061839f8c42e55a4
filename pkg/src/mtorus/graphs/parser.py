"""Reader and writer for the line-oriented marked-map file format.

Example (the figure-eight monodromy)::

    # one vertex, two loops
    vertices: 0
    edge a 0 0
    edge b 0 0
    map a = b a
    map b = b b a
    boundary = a ~b ~a b

``vertex <v> = <w>`` lines fix vertex images explicitly; otherwise each vertex image is read
off the first step of an image of an edge leaving it.
"""

from pydantic import ValidationError

from mtorus.core.edges import edge_label, is_valid_label, parse_steps, reverse_edge
from mtorus.core.models import CyclicPath, EdgePath, Graph, GraphMap, MarkedMap
from mtorus.graphs.errors import MarkedMapParseError


def _parse_vertex(token: str, line: int, source: str | None) -> int:
    try:
        value = int(token)
    except ValueError:
        raise MarkedMapParseError(f"vertex id {token!r} is not an integer", line, source) from None
    if value < 0:
        raise MarkedMapParseError(f"vertex id {value} is negative", line, source)
    return value


def parse_marked_map(text: str, source: str | None = None) -> MarkedMap:
    """Parse marked-map text; every error carries the line number."""
    vertices: list[int] | None = None
    edges: dict[str, tuple[int, int]] = {}
    edge_lines: dict[str, int] = {}
    images: dict[str, tuple[str, ...]] = {}
    image_lines: dict[str, int] = {}
    explicit_vertex_map: dict[int, int] = {}
    boundary: tuple[str, ...] | None = None

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword = line.split()[0]

        if keyword in ("vertices:", "vertices"):
            if vertices is not None:
                raise MarkedMapParseError("duplicate vertices line", number, source)
            tokens = line.split()[1:]
            vertices = [_parse_vertex(t, number, source) for t in tokens]
            if len(set(vertices)) != len(vertices):
                raise MarkedMapParseError("duplicate vertex id", number, source)

        elif keyword == "edge":
            tokens = line.split()
            if len(tokens) != 4:
                raise MarkedMapParseError(
                    "expected 'edge <name> <initial> <terminal>'", number, source
                )
            label = tokens[1]
            if not is_valid_label(label):
                raise MarkedMapParseError(f"invalid edge name {label!r}", number, source)
            if label in edges:
                raise MarkedMapParseError(f"duplicate edge {label}", number, source)
            if vertices is None:
                raise MarkedMapParseError("edge declared before vertices", number, source)
            initial = _parse_vertex(tokens[2], number, source)
            terminal = _parse_vertex(tokens[3], number, source)
            for v in (initial, terminal):
                if v not in vertices:
                    raise MarkedMapParseError(f"undeclared vertex {v}", number, source)
            edges[label] = (initial, terminal)
            edge_lines[label] = number

        elif keyword == "map":
            head, sep, tail = line[len("map") :].partition("=")
            label = head.strip()
            if not sep or not label or len(label.split()) != 1:
                raise MarkedMapParseError("expected 'map <name> = <edge path>'", number, source)
            if label in images:
                raise MarkedMapParseError(f"duplicate map line for {label}", number, source)
            images[label] = parse_steps(tail)
            image_lines[label] = number

        elif keyword == "vertex":
            head, sep, tail = line[len("vertex") :].partition("=")
            if not sep or len(head.split()) != 1 or len(tail.split()) != 1:
                raise MarkedMapParseError("expected 'vertex <v> = <w>'", number, source)
            v = _parse_vertex(head.strip(), number, source)
            explicit_vertex_map[v] = _parse_vertex(tail.strip(), number, source)

        elif keyword in ("boundary", "boundary:", "boundary="):
            if boundary is not None:
                raise MarkedMapParseError("duplicate boundary line", number, source)
            _, sep, tail = line.partition("=")
            if not sep:
                raise MarkedMapParseError("expected 'boundary = <edge path>'", number, source)
            boundary = parse_steps(tail)

        else:
            raise MarkedMapParseError(f"unknown line type {keyword!r}", number, source)

    if vertices is None:
        raise MarkedMapParseError("missing vertices line", None, source)
    if boundary is None:
        raise MarkedMapParseError("missing boundary line", None, source)
    for label in edges:
        if label not in images:
            raise MarkedMapParseError(f"missing map line for {label}", edge_lines[label], source)
    for label, steps in images.items():
        if label not in edges:
            msg = f"map for undeclared edge {label}"
            raise MarkedMapParseError(msg, image_lines[label], source)
        for d in steps:
            if edge_label(d) not in edges:
                raise MarkedMapParseError(
                    f"image of {label} uses unknown edge {d}", image_lines[label], source
                )
    for d in boundary:
        if edge_label(d) not in edges:
            raise MarkedMapParseError(f"boundary uses unknown edge {d}", None, source)

    graph = Graph(vertices=tuple(vertices), edges=edges)
    vertex_map = _vertex_images(graph, images, explicit_vertex_map, source)
    try:
        graph_map = GraphMap(
            domain=graph,
            range=graph,
            vertex_map=vertex_map,
            edge_map={label: EdgePath(steps=images[label]) for label in edges},
        )
    except ValidationError as exc:
        raise MarkedMapParseError(str(exc), None, source) from exc
    return MarkedMap(map=graph_map, boundary=CyclicPath(steps=boundary))


def _vertex_images(
    graph: Graph,
    images: dict[str, tuple[str, ...]],
    explicit: dict[int, int],
    source: str | None,
) -> dict[int, int]:
    vertex_map = dict(explicit)
    for v in graph.vertices:
        if v in vertex_map:
            continue
        for d in graph.outgoing(v):
            steps = images[edge_label(d)]
            if steps:
                first = steps[0] if d == edge_label(d) else reverse_edge(steps[-1])
                vertex_map[v] = graph.initial(first)
                break
        else:
            raise MarkedMapParseError(
                f"cannot infer the image of vertex {v}; add a 'vertex {v} = <w>' line",
                None,
                source,
            )
    return vertex_map


def format_marked_map(mm: MarkedMap) -> str:
    """Render a marked map in the input grammar (explicit vertex images included)."""
    graph = mm.graph
    lines = ["vertices: " + " ".join(str(v) for v in graph.vertices)]
    lines += [f"edge {label} {i} {t}" for label, (i, t) in graph.edges.items()]
    lines += [f"map {label} = {path}" for label, path in mm.map.edge_map.items()]
    lines += [f"vertex {v} = {w}" for v, w in mm.map.vertex_map.items()]
    lines.append(f"boundary = {mm.boundary}")
    return "\n".join(lines) + "\n"
