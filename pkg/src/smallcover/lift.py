"""Integer characteristic matrices and bounded search for lifts of Z2 matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ._linalg import bareiss_det
from .combinatorics import SimplePolytope
from .errors import DimensionMismatch, InputNotCharacteristic, InvalidParameters, WrongArity
from .gf2 import CharMatrixZ2, det_gf2, is_characteristic_z2

DEFAULT_BOUND = 2


def det_int(cols: Sequence[Sequence[int]], n: int | None = None) -> int:
    """Exact determinant of the square integer matrix with the given columns."""
    if n is None:
        n = len(cols)
    if len(cols) != n or any(len(c) != n for c in cols):
        raise WrongArity(f"expected {n} columns of length {n}")
    return bareiss_det(cols)  # det(A^T) = det(A)


@dataclass(frozen=True)
class CharMatrixZ:
    n: int
    m: int
    entries: tuple[tuple[int, ...], ...]  # row-major

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        if len(rows) != self.n or any(len(r) != self.m for r in rows):
            raise DimensionMismatch(f"expected a {self.n}x{self.m} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "CharMatrixZ":
        return cls(len(rows), len(rows[0]), tuple(tuple(r) for r in rows))

    @classmethod
    def from_z2(cls, lam: CharMatrixZ2) -> "CharMatrixZ":
        return cls.from_rows(lam.rows)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def reduce_mod2(self) -> CharMatrixZ2:
        return CharMatrixZ2.from_rows([[x % 2 for x in r] for r in self.entries])

    def to_text(self) -> str:
        width = max(len(str(x)) for r in self.entries for x in r)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.entries)


def vertex_minors(lam: CharMatrixZ, p: SimplePolytope) -> dict[tuple[int, ...], int]:
    if lam.n != p.dim or lam.m != p.num_facets:
        raise DimensionMismatch(
            f"matrix is {lam.n}x{lam.m} but polytope has dim {p.dim} and {p.num_facets} facets"
        )
    cols = [lam.column(j) for j in range(lam.m)]
    return {v: det_int([cols[i] for i in v]) for v in p.vertices}


def is_characteristic_z(lam: CharMatrixZ, p: SimplePolytope) -> bool:
    return all(abs(d) == 1 for d in vertex_minors(lam, p).values())


def entry_values(parity: int, bound: int) -> list[int]:
    """Candidates of the given parity with |x| <= bound: 1, -1, 3, -3, ... or 0, 2, -2, ..."""
    if parity:
        out = []
        for k in range(1, bound + 1, 2):
            out += [k, -k]
        return out
    out = [0]
    for k in range(2, bound + 1, 2):
        out += [k, -k]
    return out


def find_lift(lam2: CharMatrixZ2, p: SimplePolytope, bound: int = DEFAULT_BOUND) -> CharMatrixZ | None:
    """First integer characteristic matrix reducing to lam2 mod 2, or None.

    The first n columns are fixed to the integer identity.  Free entries are
    chosen column by column, top to bottom, from :func:`entry_values`; after
    a column is complete every vertex whose largest facet is that column
    must have a minor of +-1.  None means no lift exists within the bound,
    not that no lift exists.
    """
    if bound < 1:
        raise InvalidParameters("bound must be >= 1")
    if not lam2.canonical:
        raise InputNotCharacteristic("matrix is not in (I | *) form")
    if not is_characteristic_z2(lam2, p):
        raise InputNotCharacteristic("matrix is not characteristic over the polytope")

    n, m = p.dim, p.num_facets
    parity = lam2.rows
    cols: list[list[int]] = [[int(r == j) for r in range(n)] for j in range(n)] + [[0] * n for _ in range(n, m)]
    by_last: list[list[tuple[int, ...]]] = [[] for _ in range(m)]
    for v in p.vertices:
        by_last[v[-1]].append(v)
    choices = [[entry_values(parity[r][j], bound) for r in range(n)] for j in range(m)]

    def column_ok(j: int) -> bool:
        return all(abs(det_int([cols[i] for i in v])) == 1 for v in by_last[j])

    def fill(j: int, r: int) -> bool:
        if j == m:
            return True
        if r == n:
            return column_ok(j) and fill(j + 1, 0)
        for x in choices[j][r]:
            cols[j][r] = x
            if fill(j, r + 1):
                return True
        return False

    if not all(column_ok(j) for j in range(n)) or not fill(n, 0):
        return None
    return CharMatrixZ.from_rows([[cols[j][r] for j in range(m)] for r in range(n)])


def det_parity_agrees(cols: Sequence[Sequence[int]]) -> bool:
    """det over Z reduced mod 2 equals det over GF(2) of the reduced columns."""
    n = len(cols)
    masks = [sum((x & 1) << r for r, x in enumerate(c)) for c in cols]
    return det_int(cols) % 2 == det_gf2(masks, n)
