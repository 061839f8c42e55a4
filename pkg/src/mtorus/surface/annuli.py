"""Triangulated annuli between consecutive circles of K, with their pairing fragments.

Every annulus is drawn with its lower circle at the bottom, read left to right, and its upper
circle on top. The cell over a lower interval spans the run of upper intervals that interval
is sent to. A cell over a forward edge is fanned from its lower-left corner and the cell over
the reversed edge is its mirror image, fanned from the lower-right corner, so pairing the two
cells triangle by triangle reverses orientation.
"""

import logging
from collections.abc import Sequence

from mtorus.core.edges import edge_label, is_forward, reverse_edge
from mtorus.core.models import CyclicPath, GraphMap
from mtorus.folding.models import FoldStep, SubdivisionStep
from mtorus.surface.errors import SurfaceError
from mtorus.surface.models import (
    AnnulusPiece,
    CellKind,
    CircleSpelling,
    Triangle,
    TrianglePair,
)

logger = logging.getLogger(__name__)

MIRROR = (1, 0, 2)


def _vertical(annulus: int, j: int, n: int) -> str:
    return f"a{annulus}.v{j % n}"


def _cell(
    lower: CircleSpelling,
    upper: CircleSpelling,
    annulus: int,
    j: int,
    start: int,
    width: int,
    fan_left: bool,
    cell: CellKind,
) -> list[Triangle]:
    """Triangulate the cell over lower interval ``j`` and upper intervals from ``start``."""
    n = len(lower)
    a, b = lower.vertex(j), lower.vertex(j + 1)
    up = [upper.vertex(start + t) for t in range(width + 1)]
    top = [upper.edge(start + t) for t in range(width)]
    bottom = lower.edge(j)
    left, right = _vertical(annulus, j, n), _vertical(annulus, j + 1, n)
    label = lower.steps[j % n]

    def tri(corners: tuple[int, int, int], sides: tuple[str, str, str]) -> Triangle:
        return Triangle(
            corners=corners, sides=sides, annulus=annulus, cell=cell, label=label, position=j % n
        )

    out: list[Triangle] = []
    if fan_left:

        def diag(t: int) -> str:
            return left if t == 0 else f"a{annulus}.{j % n}.d{t}"

        out.append(tri((a, b, up[width]), (right, diag(width), bottom)))
        for t in range(width, 0, -1):
            out.append(tri((a, up[t], up[t - 1]), (top[t - 1], diag(t - 1), diag(t))))
    else:

        def diag(t: int) -> str:
            return right if t == width else f"a{annulus}.{j % n}.d{t}"

        out.append(tri((a, b, up[0]), (diag(0), left, bottom)))
        for s in range(width):
            out.append(tri((up[s], b, up[s + 1]), (diag(s + 1), top[s], diag(s))))
    return out


def _pair_cells(first: Sequence[int], second: Sequence[int]) -> list[TrianglePair]:
    return [
        TrianglePair(first=x, second=y, corners=MIRROR)
        for x, y in zip(first, second, strict=True)
    ]


def _mirror_pairs(
    lower: CircleSpelling, cells: dict[int, list[int]], annulus: int
) -> list[TrianglePair]:
    """Pair the cell over each forward edge with the cell over its reverse."""
    position = {d: j for d, j in lower.intervals if j in cells}
    pairs: list[TrianglePair] = []
    for d, j in lower.intervals:
        if j not in cells or not is_forward(d):
            continue
        k = position.get(reverse_edge(d))
        if k is None:
            raise SurfaceError(f"edge {d} is not traversed in both directions", annulus)
        pairs += _pair_cells(cells[j], cells[k])
    return pairs


def _place(piece: list[Triangle], triangles: list[Triangle]) -> list[int]:
    first = len(triangles)
    triangles.extend(piece)
    return list(range(first, len(triangles)))


def build_subdivision_annulus(
    step: SubdivisionStep, lower: CircleSpelling, upper: CircleSpelling, index: int = 0
) -> AnnulusPiece:
    """Rectangles over unchanged edges and pentagons over subdivided ones."""
    triangles: list[Triangle] = []
    cells: dict[int, list[int]] = {}
    start = 0
    for d, j in lower.intervals:
        run = step.s.image(d)
        if tuple(upper.steps[start : start + len(run)]) != run:
            raise SurfaceError(
                f"upper circle does not spell {' '.join(run)} above interval {j}", index
            )
        kind: CellKind = "pentagon" if len(run) == 2 else "rectangle"
        cells[j] = _place(
            _cell(lower, upper, index, j, start, len(run), is_forward(d), kind), triangles
        )
        start += len(run)
    if start != len(upper):
        raise SurfaceError("upper circle is longer than the subdivided lower circle", index)
    pairs = _mirror_pairs(lower, cells, index)
    logger.debug("subdivision annulus %d: %d triangles", index, len(triangles))
    return AnnulusPiece(kind="subdivision", triangles=triangles, pairs=pairs)


def _cone(lower: CircleSpelling, annulus: int, j: int, apex: int) -> Triangle:
    """Triangle over lower interval ``j`` with its third corner on the upper circle."""
    n = len(lower)
    return Triangle(
        corners=(lower.vertex(j), lower.vertex(j + 1), apex),
        sides=(_vertical(annulus, j + 1, n), _vertical(annulus, j, n), lower.edge(j)),
        annulus=annulus,
        cell="fold",
        label=lower.steps[j % n],
        position=j % n,
    )


def build_fold_annulus(
    step: FoldStep, lower: CircleSpelling, upper: CircleSpelling, index: int = 0
) -> AnnulusPiece:
    """Annulus across a fold of ``a`` and ``b`` at their common terminal vertex.

    With ``d1`` folded onto ``d2``, ``a = ~d1`` and ``b = ~d2``, and the lower circle contains
    a subpath ``a ~b u ~a`` or ``a ~b u b`` where ``u`` avoids both edges. The corner ``a ~b``
    cancels: Δ0 over ``a`` and Δ1 over ``~b`` are coned to the upper vertex where it vanishes.
    Δ0 is paired with Δ0′, the lower triangle of the cell over ``~a``; Δ1 with the lower
    triangle of the cell over ``b``. The cell over ``~a`` is topped by Δ2 under the upper edge
    ``~b'``, which is paired with the top of the cell over ``b``.

    A collapsed fold reads ``a ~b u b ~a``: the second corner ``b ~a`` cancels as well, so
    the cells over ``b`` and ``~a`` are cones too, Δ0′ and Δ1′, and the upper circle is four
    intervals shorter.
    """
    d1, d2 = step.identified
    a, b = reverse_edge(d1), reverse_edge(d2)
    n, m = len(lower), len(upper)
    steps = lower.steps

    def corners(x: str, y: str) -> list[int]:
        return [j for j in range(n) if steps[j] == x and steps[(j + 1) % n] == y]

    opening, closing = corners(a, d2), corners(b, d1)
    if len(opening) != 1 or bool(closing) != step.collapsed:
        msg = f"lower circle has no subpath of either normal form for {a} {d2}"
        raise SurfaceError(msg, index)
    p = opening[0]
    cancelled = {p, (p + 1) % n}
    if closing:
        cancelled |= {closing[0], (closing[0] + 1) % n}
    order = [(p + 2 + t) % n for t in range(n) if (p + 2 + t) % n not in cancelled]
    expected = tuple(step.p.image(steps[j])[0] for j in order)
    shift = (
        CyclicPath(steps=upper.steps).rotation_offset(CyclicPath(steps=expected))
        if m == len(order)
        else None
    )
    if shift is None:
        raise SurfaceError("upper circle is not the lower circle with the fold cancelled", index)
    upper_start = {j: shift + t for t, j in enumerate(order)}

    triangles: list[Triangle] = []
    star = upper.vertex(shift)
    delta0, delta1 = _place(
        [_cone(lower, index, p, star), _cone(lower, index, p + 1, star)], triangles
    )
    if closing:
        c = closing[0]
        other = upper.vertex(shift + (c - p - 2) % n)
        delta1_prime, delta0_prime = _place(
            [_cone(lower, index, c, other), _cone(lower, index, c + 1, other)], triangles
        )
        pairs = [
            TrianglePair(first=delta0, second=delta0_prime, corners=MIRROR),
            TrianglePair(first=delta1, second=delta1_prime, corners=MIRROR),
        ]
    else:
        q, r = steps.index(d1), steps.index(b)
        delta0_prime, delta2 = _place(
            _cell(lower, upper, index, q, upper_start[q], 1, True, "fold"), triangles
        )
        under_b, over_b = _place(
            _cell(lower, upper, index, r, upper_start[r], 1, False, "fold"), triangles
        )
        pairs = [
            TrianglePair(first=delta0, second=delta0_prime, corners=MIRROR),
            TrianglePair(first=delta1, second=under_b, corners=MIRROR),
            TrianglePair(first=delta2, second=over_b, corners=MIRROR),
        ]

    folded = {edge_label(d1), edge_label(d2)}
    rest: dict[int, list[int]] = {}
    for d, j in lower.intervals:
        if edge_label(d) in folded:
            continue
        rest[j] = _place(
            _cell(lower, upper, index, j, upper_start[j], 1, is_forward(d), "rectangle"),
            triangles,
        )
    pairs += _mirror_pairs(lower, rest, index)
    logger.debug("fold annulus %d: %d triangles, cone at %d", index, len(triangles), p)
    return AnnulusPiece(kind="fold", triangles=triangles, pairs=pairs)


def build_homeomorphism_annulus(
    g: GraphMap, lower: CircleSpelling, upper: CircleSpelling, index: int = 0
) -> AnnulusPiece:
    """Product annulus from sigma_2n up to its image under the terminal homeomorphism."""
    triangles: list[Triangle] = []
    cells: dict[int, list[int]] = {}
    for d, j in lower.intervals:
        image = g.image(d)
        if len(image) != 1 or upper.steps[j] != image[0]:
            raise SurfaceError(f"interval {j} is not sent to the edge above it", index)
        cells[j] = _place(
            _cell(lower, upper, index, j, j, 1, is_forward(d), "rectangle"), triangles
        )
    pairs = _mirror_pairs(lower, cells, index)
    logger.debug("final annulus %d: %d triangles", index, len(triangles))
    return AnnulusPiece(kind="final", triangles=triangles, pairs=pairs)
