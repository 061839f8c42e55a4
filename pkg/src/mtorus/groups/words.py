"""Words in free groups, compared up to rotation, inversion and generator renaming."""

from collections.abc import Mapping, Sequence
from itertools import permutations, product

from mtorus.core.edges import cyclic_reduce, edge_label, invert, is_forward, reverse_edge

Word = tuple[str, ...]


def letters(word: Sequence[str]) -> list[str]:
    """Generators occurring in ``word``, in order of first appearance."""
    seen: dict[str, None] = {}
    for x in word:
        seen.setdefault(edge_label(x), None)
    return list(seen)


def rename(word: Sequence[str], renaming: Mapping[str, str]) -> Word:
    """Replace each generator by its image; an image may itself be inverted, e.g. ``"~y"``."""
    out: list[str] = []
    for x in word:
        image = renaming.get(edge_label(x), edge_label(x))
        out.append(image if is_forward(x) else reverse_edge(image))
    return tuple(out)


def cyclic_forms(word: Sequence[str]) -> list[Word]:
    """Every rotation of the cyclic reduction of ``word`` and of its inverse."""
    reduced = cyclic_reduce(word)
    out: list[Word] = []
    for w in (reduced, invert(reduced)):
        out.extend(w[k:] + w[:k] for k in range(len(w)))
    return out or [()]


def words_cyclically_equal(
    first: Sequence[str], second: Sequence[str], renaming: Mapping[str, str] | None = None
) -> bool:
    """True if the cyclic reductions agree up to rotation and inversion.

    ``renaming`` is applied to ``first`` before comparing.
    """
    source = rename(first, renaming) if renaming else tuple(first)
    target = cyclic_reduce(second)
    return target in cyclic_forms(source)


def find_renaming(first: Sequence[str], second: Sequence[str]) -> dict[str, str] | None:
    """A signed bijection of generators under which the two words are cyclically equal."""
    reduced_first, reduced_second = cyclic_reduce(first), cyclic_reduce(second)
    source, target = letters(reduced_first), letters(reduced_second)
    if len(source) != len(target) or len(reduced_first) != len(reduced_second):
        return None
    for order in permutations(target):
        for signs in product((False, True), repeat=len(order)):
            renaming = {
                x: reverse_edge(y) if flip else y
                for x, y, flip in zip(source, order, signs, strict=True)
            }
            if words_cyclically_equal(first, second, renaming):
                return renaming
    return None
