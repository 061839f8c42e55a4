"""Permutations of the four vertices of a tetrahedron, as tuples of images."""

from itertools import permutations

from mtorus.core.orientation import permutation_sign

Perm = tuple[int, int, int, int]

IDENTITY: Perm = (0, 1, 2, 3)
ALL_PERMS: tuple[Perm, ...] = tuple(permutations(range(4)))  # type: ignore[arg-type]


def compose(outer: Perm, inner: Perm) -> Perm:
    """``outer`` after ``inner``."""
    return (outer[inner[0]], outer[inner[1]], outer[inner[2]], outer[inner[3]])


def inverse(p: Perm) -> Perm:
    out = [0, 0, 0, 0]
    for v, image in enumerate(p):
        out[image] = v
    return (out[0], out[1], out[2], out[3])


def sign(p: Perm) -> int:
    return permutation_sign(p)


def encode(p: Perm) -> str:
    """Digits of the images of 0, 1, 2, 3, e.g. ``"1023"``."""
    return "".join(str(v) for v in p)


def decode(text: str) -> Perm:
    if len(text) != 4 or sorted(text) != ["0", "1", "2", "3"]:
        msg = f"not a permutation of 0123: {text!r}"
        raise ValueError(msg)
    return (int(text[0]), int(text[1]), int(text[2]), int(text[3]))


def is_perm(values: tuple[int, ...]) -> bool:
    return sorted(values) == [0, 1, 2, 3]
