"""Facet colorings, Stanley-Reisner data and Betti numbers of a simple polytope."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .combinatorics import (
    SimplePolytope,
    f_vector,
    h_vector,
    indices_of,
    neighborliness,
    product,
)
from .errors import NotCharacteristic, TooLarge
from .gf2 import CharMatrixZ2, is_characteristic_z2
from .lift import CharMatrixZ, is_characteristic_z

MAX_CHROMATIC_NODES = 20


@dataclass(frozen=True)
class AdjacencyGraph:
    num_nodes: int
    edges: frozenset[tuple[int, int]]

    @property
    def adjacency(self) -> list[int]:
        adj = [0] * self.num_nodes
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return adj

    def is_complete(self) -> bool:
        return len(self.edges) == self.num_nodes * (self.num_nodes - 1) // 2


def facet_adjacency(p: SimplePolytope) -> AdjacencyGraph:
    edges = set()
    for v in p.vertices:
        edges.update(combinations(v, 2))
    return AdjacencyGraph(p.num_facets, frozenset(edges))


def _greedy_clique(adj: list[int]) -> int:
    best = 0
    for start in range(len(adj)):
        clique, cand = 1, adj[start]
        while cand:
            # pick the candidate with most neighbours among remaining candidates
            v = max(indices_of(cand), key=lambda u: (adj[u] & cand).bit_count())
            clique += 1
            cand &= adj[v]
        best = max(best, clique)
    return best


def chromatic_number(g: AdjacencyGraph) -> int:
    """Exact chromatic number by DSATUR branch and bound."""
    n = g.num_nodes
    if n > MAX_CHROMATIC_NODES:
        raise TooLarge(f"exact coloring limited to {MAX_CHROMATIC_NODES} nodes, got {n}")
    if n == 0:
        return 0
    adj = g.adjacency
    lower = _greedy_clique(adj)
    best = n + 1
    colors = [-1] * n

    def pick() -> int:
        chosen, key = -1, (-1, -1)
        for v in range(n):
            if colors[v] >= 0:
                continue
            sat = {colors[u] for u in indices_of(adj[v]) if colors[u] >= 0}
            k = (len(sat), adj[v].bit_count())
            if k > key:
                chosen, key = v, k
        return chosen

    def search(done: int, used: int) -> bool:
        nonlocal best
        if used >= best:
            return False
        if done == n:
            best = used
            return best == lower
        v = pick()
        forbidden = {colors[u] for u in indices_of(adj[v])}
        for c in range(min(used + 1, best - 1)):
            if c in forbidden:
                continue
            colors[v] = c
            if search(done + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    search(0, 0)
    return best


def polytope_chromatic_number(p: SimplePolytope) -> int:
    return chromatic_number(facet_adjacency(p))


def chi_additivity_check(p: SimplePolytope, q: SimplePolytope) -> bool:
    return polytope_chromatic_number(product(p, q)) == polytope_chromatic_number(p) + polytope_chromatic_number(q)


def minimal_nonfaces(p: SimplePolytope) -> list[tuple[int, ...]]:
    """Inclusion-minimal facet sets with empty intersection, by size then lexicographically.

    Every facet is a face, so generators have size >= 2.  Size-k candidates
    are a (k-1)-face plus one larger facet label; a candidate is a generator
    when it is not a face but all of its (k-1)-subsets are.  Since faces have
    at most n facets, no generator is larger than n + 1.
    """
    faces = p.faces
    out: list[tuple[int, ...]] = []
    for k in range(2, p.dim + 2):
        candidates = set()
        for f in faces:
            if f.bit_count() == k - 1:
                for i in range(f.bit_length(), p.num_facets):
                    candidates.add(f | (1 << i))
        found = [
            s for s in candidates
            if s not in faces and all((s ^ (1 << i)) in faces for i in indices_of(s))
        ]
        out.extend(sorted(indices_of(s) for s in found))
    return out


@dataclass(frozen=True)
class SRPresentation:
    nonface_generators: tuple[tuple[int, ...], ...]
    linear_forms: tuple[tuple[int, ...], ...]
    betti: tuple[int, ...]

    def monomials(self) -> list[str]:
        return ["*".join(f"v{i}" for i in s) for s in self.nonface_generators]

    def forms(self) -> list[str]:
        out = []
        for row in self.linear_forms:
            terms = []
            for j, c in enumerate(row):
                if c == 0:
                    continue
                coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
                terms.append(f"{coef}v{j}")
            out.append(" + ".join(terms).replace("+ -", "- ") or "0")
        return out


def presentation(p: SimplePolytope, lam: CharMatrixZ2 | CharMatrixZ) -> SRPresentation:
    """Generators of the Stanley-Reisner ideal, the linear forms and the Betti numbers."""
    if isinstance(lam, CharMatrixZ2):
        ok = is_characteristic_z2(lam, p)
        rows = tuple(tuple(r) for r in lam.rows)
    else:
        ok = is_characteristic_z(lam, p)
        rows = lam.entries
    if not ok:
        raise NotCharacteristic("matrix fails the non-singularity condition")
    return SRPresentation(
        nonface_generators=tuple(minimal_nonfaces(p)),
        linear_forms=rows,
        betti=h_vector(f_vector(p)),
    )


def invariant_report(p: SimplePolytope) -> dict:
    f = f_vector(p)
    chi = polytope_chromatic_number(p) if p.num_facets <= MAX_CHROMATIC_NODES else None
    return {
        "f": list(f),
        "h": list(h_vector(f)),
        "neighborly_k": neighborliness(p),
        "chi": chi,
        "obstruction_2n": chi is not None and chi > 2**p.dim - 1,
        "sr_generators": [list(s) for s in minimal_nonfaces(p)],
        "betti": list(h_vector(f)),
    }


def block_diagonal(a: CharMatrixZ2, b: CharMatrixZ2) -> CharMatrixZ2:
    """Characteristic matrix of a product from matrices of its factors."""
    cols = tuple(a.columns) + tuple(c << a.n for c in b.columns)
    return CharMatrixZ2(a.n + b.n, a.m + b.m, cols)


def is_coloring(g: AdjacencyGraph, colors: Sequence[int]) -> bool:
    return all(colors[i] != colors[j] for i, j in g.edges)

