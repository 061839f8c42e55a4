"""Whitehead normalization: comparing presentations up to automorphisms of the free group.

Relators are first shortened greedily by elementary Whitehead automorphisms
(``x -> x m``, ``x -> ~m x``, ``x -> ~m x m``), then the length-preserving moves are explored
breadth-first. Every presentation met is keyed by a form invariant under rotation, inversion
and signed renaming of generators.
"""

import logging
from collections import deque
from collections.abc import Iterator
from itertools import permutations, product

from mtorus.core.edges import edge_label, is_forward, reverse_edge
from mtorus.groups.config import WhiteheadConfig
from mtorus.groups.errors import PresentationError
from mtorus.groups.presentation import Presentation
from mtorus.groups.tietze import substitute_generator

logger = logging.getLogger(__name__)

Key = tuple[tuple[int, ...], ...]


def _least_rotation(word: tuple[int, ...]) -> tuple[int, ...]:
    inverse = tuple(-x for x in reversed(word))
    return min(w[k:] + w[:k] for w in (word, inverse) for k in range(len(w)))


def canonical_key(p: Presentation) -> Key:
    """Least encoding of the relators over all signed generator permutations."""
    index = {x: i for i, x in enumerate(p.generators)}
    n = len(p.generators)
    best: Key | None = None
    for order in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            relators = []
            for relator in p.relators:
                encoded = []
                for x in relator:
                    i = index[edge_label(x)]
                    value = signs[i] * order[i]
                    encoded.append(value if is_forward(x) else -value)
                relators.append(_least_rotation(tuple(encoded)) if encoded else ())
            key = tuple(sorted(relators))
            if best is None or key < best:
                best = key
    return best or ()


def _from_key(p: Presentation, key: Key) -> Presentation:
    def letter(v: int) -> str:
        x = p.generators[abs(v) - 1]
        return x if v > 0 else reverse_edge(x)

    return Presentation(
        generators=p.generators, relators=tuple(tuple(letter(v) for v in r) for r in key)
    )


def whitehead_moves(p: Presentation) -> Iterator[Presentation]:
    """Every elementary Whitehead automorphism applied to all relators at once."""
    for x in p.generators:
        for m_label in p.generators:
            if m_label == x:
                continue
            for m in (m_label, reverse_edge(m_label)):
                for value in ((x, m), (reverse_edge(m), x), (reverse_edge(m), x, m)):
                    relators = tuple(substitute_generator(r, x, value) for r in p.relators)
                    yield Presentation(generators=p.generators, relators=relators).normalized()


def shorten(p: Presentation) -> Presentation:
    """Apply length-reducing moves until none is left."""
    current = p.normalized()
    improved = True
    while improved:
        improved = False
        for candidate in whitehead_moves(current):
            if candidate.total_length < current.total_length:
                current, improved = candidate, True
                break
    return current


def minimal_orbit(
    p: Presentation, config: WhiteheadConfig | None = None
) -> dict[Key, Presentation]:
    """Presentations of minimal total length reachable from ``p``, keyed canonically."""
    if config is None:
        config = WhiteheadConfig()
    if len(p.generators) > config.max_generators:
        raise PresentationError(
            f"{len(p.generators)} generators exceed the Whitehead limit of {config.max_generators}"
        )
    current = shorten(p)
    while True:
        seen = {canonical_key(current): current}
        queue = deque([current])
        shorter: Presentation | None = None
        while queue and shorter is None and len(seen) < config.orbit_cap:
            q = queue.popleft()
            for candidate in whitehead_moves(q):
                if candidate.total_length < q.total_length:
                    shorter = candidate
                    break
                if candidate.total_length == q.total_length:
                    key = canonical_key(candidate)
                    if key not in seen:
                        seen[key] = candidate
                        queue.append(candidate)
        if shorter is None:
            if queue:
                logger.warning("whitehead: orbit cap %d reached", config.orbit_cap)
            return seen
        current = shorten(shorter)


def whitehead_normal_form(
    p: Presentation, config: WhiteheadConfig | None = None
) -> Presentation:
    """The canonically least minimal-length presentation in the automorphism orbit of ``p``.

    Relators are rewritten over ``p``'s own generator names.
    """
    orbit = minimal_orbit(p, config)
    return _from_key(p, min(orbit))


def presentations_related(
    first: Presentation, second: Presentation, config: WhiteheadConfig | None = None
) -> bool:
    """True if an automorphism of the free group carries one relator set onto the other.

    Presentations are compared as given; run tietze_simplify first to compare groups.
    """
    a, b = first.normalized(), second.normalized()
    if len(a.generators) != len(b.generators) or len(a.relators) != len(b.relators):
        return False
    return not minimal_orbit(a, config).keys().isdisjoint(minimal_orbit(b, config).keys())
