"""Bit-packed GF(2) linear algebra and enumeration of Z2 characteristic matrices.

Columns are stored as integers with row r in bit r (row 0 least significant).
A characteristic matrix over a simple polytope assigns a nonzero column to
each facet such that the n columns at every vertex form a basis of Z2^n.
"""

from __future__ import annotations

import enum
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .combinatorics import SimplePolytope, is_k_neighborly
from .errors import DimensionMismatch, MissingBaseVertex, SingularPrefix, WrongArity


def gf2_rank(cols: Iterable[int]) -> int:
    basis: list[int] = []  # kept reduced so each element has a distinct top bit
    for c in cols:
        for b in basis:
            c = min(c, c ^ b)
        if c:
            basis.append(c)
            basis.sort(reverse=True)
    return len(basis)


def det_gf2(cols: Sequence[int], n: int | None = None) -> int:
    """Determinant over GF(2) of the square matrix with the given columns."""
    if n is None:
        n = len(cols)
    if len(cols) != n:
        raise WrongArity(f"expected {n} columns, got {len(cols)}")
    if any(c >> n for c in cols):
        raise WrongArity(f"column has entries beyond row {n - 1}")
    return 1 if gf2_rank(cols) == n else 0


@dataclass(frozen=True, order=False)
class CharMatrixZ2:
    n: int
    m: int
    columns: tuple[int, ...]

    def __post_init__(self) -> None:
        cols = tuple(int(c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        if len(cols) != self.m:
            raise DimensionMismatch(f"expected {self.m} columns, got {len(cols)}")
        if any(c < 0 or c >> self.n for c in cols):
            raise DimensionMismatch(f"column value out of range for {self.n} rows")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "CharMatrixZ2":
        n, m = len(rows), len(rows[0])
        if any(len(r) != m for r in rows):
            raise DimensionMismatch("ragged matrix rows")
        cols = tuple(sum((rows[r][j] & 1) << r for r in range(n)) for j in range(m))
        return cls(n, m, cols)

    @property
    def rows(self) -> list[list[int]]:
        return [[(c >> r) & 1 for c in self.columns] for r in range(self.n)]

    @property
    def canonical(self) -> bool:
        return self.columns[: self.n] == tuple(1 << i for i in range(self.n))

    def sort_key(self) -> str:
        """Concatenated row-major bit string."""
        return "".join(str(b) for row in self.rows for b in row)

    def __lt__(self, other: "CharMatrixZ2") -> bool:
        return (self.n, self.m, self.sort_key()) < (other.n, other.m, other.sort_key())

    def to_text(self) -> str:
        return "\n".join(" ".join(str(b) for b in row) for row in self.rows)

    def left_multiply(self, g: Sequence[int]) -> "CharMatrixZ2":
        """G * Lambda for G given by its columns (bit r of g[k] is G[r][k])."""
        out = []
        for c in self.columns:
            v = 0
            k = 0
            while c:
                if c & 1:
                    v ^= g[k]
                c >>= 1
                k += 1
            out.append(v)
        return CharMatrixZ2(self.n, self.m, tuple(out))

    def permute_columns(self, images: Sequence[int]) -> "CharMatrixZ2":
        """Matrix whose column j is this matrix's column images[j]."""
        return CharMatrixZ2(self.n, self.m, tuple(self.columns[i] for i in images))


def is_characteristic_z2(lam: CharMatrixZ2, p: SimplePolytope) -> bool:
    if lam.n != p.dim or lam.m != p.num_facets:
        raise DimensionMismatch(
            f"matrix is {lam.n}x{lam.m} but polytope has dim {p.dim} and {p.num_facets} facets"
        )
    cols = lam.columns
    return all(gf2_rank(cols[i] for i in v) == lam.n for v in p.vertices)


def canonicalize(lam: CharMatrixZ2) -> CharMatrixZ2:
    """The (I | *) representative of the GL(n, Z2)-orbit of lam.

    Gauss-Jordan elimination on rows, pivoting on columns 0..n-1; this is the
    same as left-multiplying by the inverse of the leading n x n block.
    """
    n, m = lam.n, lam.m
    rows = [sum(((c >> r) & 1) << j for j, c in enumerate(lam.columns)) for r in range(n)]
    for col in range(n):
        bit = 1 << col
        pivot = next((r for r in range(col, n) if rows[r] & bit), None)
        if pivot is None:
            raise SingularPrefix(f"leading {n} columns are linearly dependent")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(n):
            if r != col and rows[r] & bit:
                rows[r] ^= rows[col]
    cols = tuple(sum(((rows[r] >> j) & 1) << r for r in range(n)) for j in range(m))
    return CharMatrixZ2(n, m, cols)


# ---------------------------------------------------------------------------
# enumeration


@dataclass(frozen=True)
class EnumerationReport:
    polytope: str
    count: int
    matrices: tuple[CharMatrixZ2, ...]
    nodes_explored: int
    wall_time: float = field(default=0.0, compare=False)


class Verdict(enum.Enum):
    BLOCKED = "blocked"
    UNKNOWN = "unknown"


def quick_obstruction(p: SimplePolytope) -> Verdict:
    """BLOCKED when p is 2-neighborly with at least 2^n facets.

    Such a polytope needs m distinct colors, more than the 2^n - 1 nonzero
    vectors of Z2^n.
    """
    if p.dim >= 2 and p.num_facets >= 2**p.dim and is_k_neighborly(p, 2):
        return Verdict.BLOCKED
    return Verdict.UNKNOWN


def _constraints_by_last_column(p: SimplePolytope) -> list[list[tuple[int, ...]]]:
    """For each column c, the other facets of the vertices whose largest facet is c."""
    by_last: list[list[tuple[int, ...]]] = [[] for _ in range(p.num_facets)]
    for v in p.vertices:
        by_last[v[-1]].append(v[:-1])
    return by_last


def _search(p: SimplePolytope, first_values: Sequence[int]) -> tuple[list[tuple[int, ...]], int]:
    """Depth-first search with the first free column restricted to first_values."""
    n, m = p.dim, p.num_facets
    full = n
    by_last = _constraints_by_last_column(p)
    cols = [1 << i for i in range(n)] + [0] * (m - n)
    top = 1 << n
    found: list[tuple[int, ...]] = []
    nodes = 0

    def ok(c: int) -> bool:
        for rest in by_last[c]:
            if gf2_rank(cols[i] for i in rest + (c,)) != full:
                return False
        return True

    def descend(c: int) -> None:
        nonlocal nodes
        if c == m:
            found.append(tuple(cols))
            return
        values = first_values if c == n else range(1, top)
        for v in values:
            nodes += 1
            cols[c] = v
            if ok(c):
                descend(c + 1)
        cols[c] = 0

    if m == n:
        found.append(tuple(cols))
    else:
        descend(n)
    return found, nodes


def _search_job(args: tuple[SimplePolytope, tuple[int, ...]]) -> tuple[list[tuple[int, ...]], int]:
    return _search(*args)


def enumerate_char_maps(p: SimplePolytope, workers: int = 1) -> EnumerationReport:
    """All canonical Z2 characteristic matrices over p, one per GL(n, Z2)-orbit.

    Free columns n..m-1 are filled left to right with values 1..2^n-1 in
    ascending order, and each vertex is checked as soon as its largest facet
    receives a value.  With ``workers > 1`` the values of the first free
    column are dealt round-robin to worker processes; the merged result is
    identical to the serial one.
    """
    if not p.has_base_vertex:
        raise MissingBaseVertex(f"facets 0..{p.dim - 1} of {p.name or 'polytope'} do not meet at a vertex")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    start = time.perf_counter()
    values = tuple(range(1, 1 << p.dim))
    if workers == 1 or p.num_facets == p.dim:
        found, nodes = _search(p, values)
    else:
        slices = [(p, values[k::workers]) for k in range(workers) if values[k::workers]]
        with ProcessPoolExecutor(max_workers=len(slices)) as pool:
            parts = list(pool.map(_search_job, slices))
        found = [cols for part, _ in parts for cols in part]
        nodes = sum(count for _, count in parts)
    matrices = sorted(CharMatrixZ2(p.dim, p.num_facets, cols) for cols in found)
    return EnumerationReport(
        polytope=p.name,
        count=len(matrices),
        matrices=tuple(matrices),
        nodes_explored=nodes,
        wall_time=time.perf_counter() - start,
    )


def coloring_matrix(colors: Sequence[int], n: int) -> CharMatrixZ2:
    """Characteristic matrix e_{c(i)} of an n-coloring of the facets."""
    return CharMatrixZ2(n, len(colors), tuple(1 << c for c in colors))
