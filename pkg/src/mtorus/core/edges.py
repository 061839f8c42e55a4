"""Directed edges and letters as plain strings.

A directed edge (or a group letter) is written ``x`` for the chosen direction of the
unoriented edge ``x`` and ``~x`` for its reverse. Paths and words are tuples of such strings.
"""

from collections.abc import Iterable, Sequence

INVERSE_PREFIX = "~"


def reverse_edge(d: str) -> str:
    """Return the reverse of a directed edge (or the inverse of a letter)."""
    if d.startswith(INVERSE_PREFIX):
        return d[1:]
    return INVERSE_PREFIX + d


def edge_label(d: str) -> str:
    """Return the unoriented label underlying a directed edge."""
    return d[1:] if d.startswith(INVERSE_PREFIX) else d


def is_forward(d: str) -> bool:
    return not d.startswith(INVERSE_PREFIX)


def invert(steps: Sequence[str]) -> tuple[str, ...]:
    """Reverse a path (or invert a word)."""
    return tuple(reverse_edge(d) for d in reversed(steps))


def free_reduce(steps: Iterable[str]) -> tuple[str, ...]:
    """Cancel every adjacent ``d ~d`` pair until none remains."""
    stack: list[str] = []
    for d in steps:
        if stack and stack[-1] == reverse_edge(d):
            stack.pop()
        else:
            stack.append(d)
    return tuple(stack)


def cyclic_reduce(steps: Iterable[str]) -> tuple[str, ...]:
    """Free reduction followed by cancellation across the wrap-around."""
    reduced = free_reduce(steps)
    start, end = 0, len(reduced)
    while end - start >= 2 and reduced[start] == reverse_edge(reduced[end - 1]):
        start += 1
        end -= 1
    return reduced[start:end]


def parse_steps(text: str) -> tuple[str, ...]:
    """Split whitespace-separated directed edges, e.g. ``"a ~b c"``."""
    return tuple(text.split())


def format_steps(steps: Sequence[str]) -> str:
    return " ".join(steps)


def is_valid_label(label: str) -> bool:
    """Labels are non-empty, whitespace-free and do not start with the inverse prefix."""
    return bool(label) and not label.startswith(INVERSE_PREFIX) and not any(
        ch.isspace() for ch in label
    )
