"""The HNN presentation of the fundamental group of a mapping torus."""

from mtorus.core.edges import invert, reverse_edge
from mtorus.core.models import MarkedMap
from mtorus.graphs.trees import induced_generator_images
from mtorus.groups.presentation import Presentation


def stable_letter(taken: set[str]) -> str:
    """``t``, or ``t1``, ``t2``, ... if the graph already uses that label."""
    name, k = "t", 0
    while name in taken:
        k += 1
        name = f"t{k}"
    return name


def pi1_presentation(mm: MarkedMap) -> Presentation:
    """<x_1 .. x_k, t | ~t x t = f(x)> over the non-tree edges x of the graph.

    Generators follow the graph's edge order; the spanning tree is breadth-first from the
    lowest-index vertex.
    """
    images = induced_generator_images(mm.map)
    t = stable_letter(set(mm.map.domain.edges))
    relators = tuple((reverse_edge(t), x, t, *invert(image)) for x, image in images.items())
    return Presentation(generators=(*images, t), relators=relators).normalized()
