"""Integer matrices, Smith normal form and finitely generated abelian groups.

Sparse matrices are first reduced by eliminating unit pivots; whatever is left goes through
sympy's Smith normal form over ZZ.
"""

from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict
from sympy import ZZ, Matrix, factorint
from sympy.matrices.normalforms import smith_normal_form


class IntegerMatrix(BaseModel):
    """A sparse integer matrix; absent entries are zero."""

    rows: int
    cols: int
    entries: dict[tuple[int, int], int] = {}

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        entries = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v}
        return cls(rows=len(rows), cols=width, entries=entries)

    def add(self, i: int, j: int, value: int) -> None:
        total = self.entries.get((i, j), 0) + value
        if total:
            self.entries[(i, j)] = total
        else:
            self.entries.pop((i, j), None)

    def to_rows(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out


class SmithForm(BaseModel):
    """Nonzero invariant factors d_1 | d_2 | ... of a matrix."""

    model_config = ConfigDict(frozen=True)

    invariants: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariants)


class AbelianGroup(BaseModel):
    """Z^rank plus cyclic factors of the given orders (each dividing the next)."""

    model_config = ConfigDict(frozen=True)

    rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        if self.rank == 1:
            parts.insert(0, "Z")
        elif self.rank > 1:
            parts.insert(0, f"Z^{self.rank}")
        return " + ".join(parts) if parts else "0"


def _eliminate_units(matrix: IntegerMatrix) -> tuple[int, list[dict[int, int]]]:
    """Remove unit pivots; return their count and the remaining rows."""
    rows: dict[int, dict[int, int]] = {}
    by_col: dict[int, set[int]] = {}
    for (i, j), v in matrix.entries.items():
        rows.setdefault(i, {})[j] = v
        by_col.setdefault(j, set()).add(i)

    units = 0
    while True:
        pivot = None
        for i in sorted(rows, key=lambda r: len(rows[r])):
            j = next((c for c, v in rows[i].items() if abs(v) == 1), None)
            if j is not None:
                pivot = (i, j)
                break
        if pivot is None:
            break
        i, j = pivot
        row = rows.pop(i)
        unit = row[j]
        for c in row:
            by_col[c].discard(i)
        for other in list(by_col.get(j, ())):
            target = rows[other]
            factor = target[j] * unit
            for c, v in row.items():
                value = target.get(c, 0) - factor * v
                if value:
                    if c not in target:
                        by_col.setdefault(c, set()).add(other)
                    target[c] = value
                else:
                    target.pop(c, None)
                    by_col[c].discard(other)
            if not target:
                del rows[other]
        units += 1
    return units, list(rows.values())


def _invariant_chain(values: Sequence[int]) -> tuple[int, ...]:
    """Rebuild a divisibility chain from arbitrary nonzero diagonal entries."""
    count = len(values)
    primes: dict[int, list[int]] = {}
    for v in values:
        for prime, power in factorint(abs(v)).items():
            primes.setdefault(prime, []).append(prime**power)
    chain = [1] * count
    for powers in primes.values():
        for k, q in enumerate(sorted(powers, reverse=True)):
            chain[count - 1 - k] *= q
    return tuple(chain)


def smith_form(matrix: IntegerMatrix) -> SmithForm:
    units, rest = _eliminate_units(matrix)
    diagonal: list[int] = []
    if rest:
        cols = sorted({c for row in rest for c in row})
        index = {c: k for k, c in enumerate(cols)}
        dense = [[0] * len(cols) for _ in rest]
        for r, row in enumerate(rest):
            for c, v in row.items():
                dense[r][index[c]] = v
        snf = smith_normal_form(Matrix(dense), domain=ZZ)
        diagonal = [int(snf[k, k]) for k in range(min(snf.shape)) if snf[k, k] != 0]
    return SmithForm(invariants=_invariant_chain([1] * units + diagonal))


def cokernel(matrix: IntegerMatrix) -> AbelianGroup:
    """Z^rows modulo the column span of ``matrix``."""
    form = smith_form(matrix)
    return AbelianGroup(
        rank=matrix.rows - form.rank, torsion=tuple(d for d in form.invariants if d > 1)
    )


def chain_homology(boundary_in: IntegerMatrix, boundary_out: IntegerMatrix) -> AbelianGroup:
    """Homology at the middle term of C_{k+1} -> C_k -> C_{k-1}.

    ``boundary_in`` maps C_{k+1} into C_k (rows = dim C_k) and ``boundary_out`` maps C_k into
    C_{k-1} (columns = dim C_k).
    """
    image = smith_form(boundary_in)
    rank = boundary_out.cols - smith_form(boundary_out).rank - image.rank
    return AbelianGroup(rank=rank, torsion=tuple(d for d in image.invariants if d > 1))
