"""Greedy Tietze simplification of a presentation."""

import logging

from mtorus.core.edges import edge_label, format_steps, invert, is_forward
from mtorus.groups.config import TietzeConfig
from mtorus.groups.presentation import Presentation
from mtorus.groups.words import Word

logger = logging.getLogger(__name__)


def _ordered(p: Presentation) -> Presentation:
    normal = p.normalized()
    relators = sorted(normal.relators, key=lambda r: (len(r), format_steps(r)))
    return Presentation(generators=normal.generators, relators=tuple(relators))


def _isolated(relator: Word) -> str | None:
    """The least generator occurring exactly once in ``relator``."""
    counts: dict[str, int] = {}
    for x in relator:
        counts[edge_label(x)] = counts.get(edge_label(x), 0) + 1
    once = sorted(x for x, n in counts.items() if n == 1)
    return once[0] if once else None


def solve_for(relator: Word, generator: str) -> Word:
    """The word equal to ``generator`` when ``relator`` is trivial."""
    k = next(i for i, x in enumerate(relator) if edge_label(x) == generator)
    rotated = relator[k:] + relator[:k]
    rest = rotated[1:]
    # x w = 1 gives x = ~w; ~x w = 1 gives x = w
    return invert(rest) if is_forward(rotated[0]) else rest


def substitute_generator(word: Word, generator: str, value: Word) -> Word:
    out: list[str] = []
    for x in word:
        if edge_label(x) != generator:
            out.append(x)
        else:
            out.extend(value if is_forward(x) else invert(value))
    return tuple(out)


def eliminate(p: Presentation, relator_index: int, generator: str) -> Presentation:
    """Drop ``generator`` using relator ``relator_index`` to express it in the others."""
    value = solve_for(p.relators[relator_index], generator)
    relators = tuple(
        substitute_generator(r, generator, value)
        for i, r in enumerate(p.relators)
        if i != relator_index
    )
    generators = tuple(x for x in p.generators if x != generator)
    return Presentation(generators=generators, relators=relators).normalized()


def tietze_simplify(p: Presentation, config: TietzeConfig | None = None) -> Presentation:
    """Repeatedly eliminate a generator that a relator isolates.

    Relators are scanned shortest first with a lexicographic tie-break; within a relator the
    least isolated generator is removed. Stops when nothing is isolated or after
    ``max_moves`` eliminations.
    """
    if config is None:
        config = TietzeConfig()
    current = _ordered(p)
    for moves in range(config.max_moves):
        choice = next(
            (
                (i, x)
                for i, r in enumerate(current.relators)
                if (x := _isolated(r)) is not None
            ),
            None,
        )
        if choice is None:
            logger.debug("tietze: stopped after %d eliminations at %s", moves, current)
            break
        i, generator = choice
        current = _ordered(eliminate(current, i, generator))
    else:
        logger.warning("tietze: move cap %d reached", config.max_moves)
    return current
