"""Stacking the annuli of a fold sequence into the torus K."""

import logging

from mtorus.core.models import CyclicPath
from mtorus.folding.models import FoldSequence, SubdivisionStep
from mtorus.surface.annuli import (
    build_fold_annulus,
    build_homeomorphism_annulus,
    build_subdivision_annulus,
)
from mtorus.surface.checks import check_surface
from mtorus.surface.errors import SurfaceError
from mtorus.surface.models import (
    Annulus,
    AnnulusPiece,
    CircleSpelling,
    SurfaceComplex,
    Triangle,
    TrianglePair,
)

logger = logging.getLogger(__name__)


def spell_circles(seq: FoldSequence) -> list[CircleSpelling]:
    """Circles for sigma_0 .. sigma_2n plus the top copy of sigma_0 spelled through g_n."""
    circles: list[CircleSpelling] = []
    offset = 0
    for stage in seq.stages:
        if not stage.sigma.steps:
            raise SurfaceError(f"sigma{stage.index} is empty")
        circles.append(CircleSpelling(index=stage.index, offset=offset, steps=stage.sigma.steps))
        offset += len(stage.sigma)

    last = seq.stages[-1].sigma.steps
    top = tuple(seq.terminal.image(d)[0] for d in last)
    shift = CyclicPath(steps=seq.stages[0].sigma.steps).rotation_offset(CyclicPath(steps=top))
    if shift is None:
        raise SurfaceError("the terminal homeomorphism does not carry sigma to a rotation of it")
    circles.append(
        CircleSpelling(index=len(seq.stages), offset=offset, steps=top, alias=0, shift=shift)
    )
    return circles


def assemble_torus(seq: FoldSequence) -> SurfaceComplex:
    """Glue one annulus per step and the final annulus into K, then check K."""
    circles = spell_circles(seq)
    pieces: list[AnnulusPiece] = []
    for i, step in enumerate(seq.steps):
        lower, upper = circles[i], circles[i + 1]
        if isinstance(step, SubdivisionStep):
            pieces.append(build_subdivision_annulus(step, lower, upper, i))
        else:
            pieces.append(build_fold_annulus(step, lower, upper, i))
    final = len(seq.steps)
    pieces.append(build_homeomorphism_annulus(seq.terminal, circles[final], circles[-1], final))

    triangles: list[Triangle] = []
    pairs: list[TrianglePair] = []
    annuli: list[Annulus] = []
    for i, piece in enumerate(pieces):
        base = len(triangles)
        triangles.extend(piece.triangles)
        pairs.extend(
            TrianglePair(first=p.first + base, second=p.second + base, corners=p.corners)
            for p in piece.pairs
        )
        annuli.append(
            Annulus(
                index=i, kind=piece.kind, lower=i, upper=i + 1, start=base, stop=len(triangles)
            )
        )

    top, first = circles[-1], circles[0]
    canonical = {c.vertex(j): c.vertex(j) for c in circles[:-1] for j in range(len(c))}
    canonical.update({top.vertex(j): first.vertex(j + top.shift) for j in range(len(top))})

    surface = SurfaceComplex(
        circles=circles, triangles=triangles, annuli=annuli, pairs=pairs, canonical=canonical
    )
    report = check_surface(surface)
    if not report.ok:
        raise SurfaceError(f"K is not a paired torus: {report}")
    logger.info(
        "assembled K: %d annuli, %d triangles, chi %d",
        len(annuli),
        len(triangles),
        report.euler_characteristic,
    )
    return surface
