"""Combinatorial automorphisms of a simple polytope and their action on Z2 matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .combinatorics import SimplePolytope, mask_of
from .errors import ActionLeavesSet, InvalidParameters
from .gf2 import CharMatrixZ2, EnumerationReport, canonicalize


@dataclass(frozen=True)
class FacetPermutation:
    """Facet i is sent to images[i]."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise InvalidParameters(f"{list(images)} is not a permutation")

    @classmethod
    def identity(cls, m: int) -> "FacetPermutation":
        return cls(tuple(range(m)))

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: "FacetPermutation") -> "FacetPermutation":
        """self after other."""
        return FacetPermutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "FacetPermutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return FacetPermutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(len(self.images)))

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity():
            p = p.compose(self)
            k += 1
        return k


@dataclass(frozen=True)
class AutGroup:
    generators: tuple[FacetPermutation, ...]
    elements: tuple[FacetPermutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: FacetPermutation) -> bool:
        return g in set(self.elements)


def closure(gens: Iterable[FacetPermutation], m: int) -> set[FacetPermutation]:
    """The finite group generated by gens."""
    gens = list(gens)
    group = {FacetPermutation.identity(m)}
    frontier = list(group)
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s.compose(g)
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return group


def is_automorphism(p: SimplePolytope, images: Sequence[int]) -> bool:
    verts = set(p.vertex_masks)
    return all(mask_of(images[i] for i in v) in verts for v in p.vertices)


def facet_signatures(p: SimplePolytope) -> list[tuple]:
    """Per facet: its vertex count and the sorted sizes of its 2-faces.

    The size of the 2-face F_i cap F_j is the number of vertices containing
    both facets (0 when they do not meet).
    """
    m = p.num_facets
    counts = [[0] * m for _ in range(m)]
    degree = [0] * m
    for v in p.vertices:
        for i in v:
            degree[i] += 1
            for j in v:
                if i != j:
                    counts[i][j] += 1
    return [(degree[i], tuple(sorted(counts[i][j] for j in range(m) if j != i))) for i in range(m)]


def _ridge_sizes(p: SimplePolytope) -> list[list[int]]:
    m = p.num_facets
    counts = [[0] * m for _ in range(m)]
    for v in p.vertices:
        for i in v:
            for j in v:
                counts[i][j] += 1
    return counts


def automorphisms(p: SimplePolytope) -> AutGroup:
    """All facet permutations preserving the vertex family.

    Backtracking assigns images facet by facet.  A facet may only go to a
    facet with the same signature, pairwise 2-face sizes must be preserved,
    and each vertex is checked once all its facets have images.
    """
    m = p.num_facets
    sig = facet_signatures(p)
    ridge = _ridge_sizes(p)
    verts = set(p.vertex_masks)
    by_last: list[list[tuple[int, ...]]] = [[] for _ in range(m)]
    for v in p.vertices:
        by_last[v[-1]].append(v)
    candidates = [[j for j in range(m) if sig[j] == sig[i]] for i in range(m)]

    images = [-1] * m
    used = [False] * m
    found: list[tuple[int, ...]] = []

    def extend(i: int) -> None:
        if i == m:
            found.append(tuple(images))
            return
        for j in candidates[i]:
            if used[j]:
                continue
            if any(ridge[i][k] != ridge[j][images[k]] for k in range(i)):
                continue
            images[i] = j
            if all(mask_of(images[f] for f in v) in verts for v in by_last[i]):
                used[j] = True
                extend(i + 1)
                used[j] = False
        images[i] = -1

    extend(0)
    elements = tuple(FacetPermutation(t) for t in sorted(found))
    return AutGroup(_generators(elements, m), elements)


def _generators(elements: Sequence[FacetPermutation], m: int) -> tuple[FacetPermutation, ...]:
    """A small generating set: greedily take elements of largest order first."""
    target = len(elements)
    ranked = sorted(elements, key=lambda g: (-g.order(), g.images))
    gens: list[FacetPermutation] = []
    span = {FacetPermutation.identity(m)}
    for g in ranked:
        if len(span) == target:
            break
        if g not in span:
            gens.append(g)
            span = closure(gens, m)
    return tuple(gens)


def act(lam: CharMatrixZ2, pi: FacetPermutation) -> CharMatrixZ2:
    """The automorphism pi applied to a canonical matrix.

    The new matrix has column j equal to the old column pi(j), i.e. the
    characteristic function is precomposed with pi; the result is brought
    back to (I | *) form.
    """
    if len(pi) != lam.m:
        raise InvalidParameters(f"permutation of {len(pi)} facets applied to a matrix with {lam.m} columns")
    return canonicalize(lam.permute_columns(pi.images))


@dataclass(frozen=True)
class OrbitClassification:
    orbits: tuple[tuple[int, ...], ...]
    representatives: tuple[CharMatrixZ2, ...]

    def __len__(self) -> int:
        return len(self.orbits)


def orbit_classify(report: EnumerationReport, group: AutGroup) -> OrbitClassification:
    """Partition the enumerated matrices into Aut(P)-orbits.

    Orbits are listed by smallest index; each representative is the
    lexicographically smallest matrix of its orbit.
    """
    index = {lam: i for i, lam in enumerate(report.matrices)}
    parent = list(range(len(report.matrices)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    gens = group.generators or group.elements
    for i, lam in enumerate(report.matrices):
        for g in gens:
            image = act(lam, g)
            j = index.get(image)
            if j is None:
                raise ActionLeavesSet(f"automorphism {list(g.images)} maps matrix {i} outside the report")
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)

    groups: dict[int, list[int]] = {}
    for i in range(len(report.matrices)):
        groups.setdefault(find(i), []).append(i)
    orbits = tuple(tuple(members) for _, members in sorted(groups.items()))
    reps = tuple(min(report.matrices[i] for i in o) for o in orbits)
    return OrbitClassification(orbits, reps)
