"""Simple polytopes as vertex/facet incidence, exact hulls, and face-count vectors.

A simple n-polytope with m facets is stored purely combinatorially: each
vertex is the sorted n-tuple of facet labels meeting there.  Point data
enters only through :func:`facets_from_points`, which works over exact
rationals, and :func:`dualize`, which turns the facets of a simplicial
polytope into the vertices of its simple dual.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from ._linalg import bareiss_det, homogenize, rational_rank
from .errors import (
    InteriorPoint,
    InvalidParameters,
    InvalidPolytope,
    NotFullDimensional,
    NotSimplicial,
)

Rational = Fraction
FVector = tuple[int, ...]
HVector = tuple[int, ...]


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a reduced Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParameters(f"not a rational number: {text!r}") from exc


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


# ---------------------------------------------------------------------------
# data types


@dataclass(frozen=True)
class PointSet:
    dim: int
    points: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise InvalidParameters("dimension must be positive")
        pts = tuple(tuple(parse_rational(x) for x in p) for p in self.points)
        object.__setattr__(self, "points", pts)
        for i, p in enumerate(pts):
            if len(p) != self.dim:
                raise InvalidParameters(f"point {i} has {len(p)} coordinates, expected {self.dim}")
        if len(set(pts)) != len(pts):
            raise InvalidParameters("points are not distinct")

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class SimplicialFacets:
    dim: int
    num_points: int
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        facets = tuple(sorted(tuple(sorted(f)) for f in self.facets))
        object.__setattr__(self, "facets", facets)
        if len(set(facets)) != len(facets):
            raise InvalidPolytope("duplicate facet")
        ridge_count: dict[tuple[int, ...], int] = {}
        used: set[int] = set()
        for f in facets:
            if len(f) != self.dim or any(not 0 <= i < self.num_points for i in f):
                raise InvalidPolytope(f"facet {f} is not a {self.dim}-subset of 0..{self.num_points - 1}")
            used.update(f)
            for ridge in combinations(f, self.dim - 1):
                ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
        bad = [r for r, c in ridge_count.items() if c != 2]
        if bad:
            raise InvalidPolytope(f"not a pseudomanifold: ridge {bad[0]} lies in {ridge_count[bad[0]]} facets")
        if len(used) != self.num_points:
            missing = sorted(set(range(self.num_points)) - used)
            raise InvalidPolytope(f"points {missing} lie on no facet")


@dataclass(frozen=True)
class SimplePolytope:
    """A simple polytope given by the facet sets of its vertices.

    ``relabel`` records a normalization applied at load time: ``relabel[i]``
    is the new label of the facet that was originally labeled ``i``.
    """

    dim: int
    num_facets: int
    vertices: tuple[tuple[int, ...], ...]
    name: str = ""
    relabel: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        n, m = self.dim, self.num_facets
        if n < 1 or m < n + 1:
            raise InvalidPolytope(f"need dim >= 1 and more than dim facets, got dim={n}, facets={m}")
        verts = [tuple(sorted(v)) for v in self.vertices]
        seen: set[tuple[int, ...]] = set()
        for v in verts:
            if v in seen:
                raise InvalidPolytope(f"duplicate vertex {list(v)}")
            seen.add(v)
            if len(v) != n or len(set(v)) != n:
                raise InvalidPolytope(f"vertex {list(v)} does not have exactly {n} distinct facets")
            if v[0] < 0 or v[-1] >= m:
                raise InvalidPolytope(f"vertex {list(v)} uses a facet outside 0..{m - 1}")
        used = set().union(*verts) if verts else set()
        if len(used) != m:
            raise InvalidPolytope(f"facets {sorted(set(range(m)) - used)} contain no vertex")
        object.__setattr__(self, "vertices", tuple(sorted(verts)))
        if self.relabel is not None:
            object.__setattr__(self, "relabel", tuple(self.relabel))

    @classmethod
    def from_vertices(
        cls,
        vertices: Iterable[Iterable[int]],
        dim: int | None = None,
        num_facets: int | None = None,
        name: str = "",
        normalize: bool = True,
    ) -> "SimplePolytope":
        verts = [tuple(sorted(v)) for v in vertices]
        if not verts:
            raise InvalidPolytope("no vertices")
        if dim is None:
            dim = len(verts[0])
        if num_facets is None:
            num_facets = max(max(v) for v in verts) + 1
        p = cls(dim, num_facets, tuple(verts), name)
        return p.normalized() if normalize else p

    # -- derived data -------------------------------------------------------

    @cached_property
    def vertex_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(v) for v in self.vertices)

    @cached_property
    def faces(self) -> frozenset[int]:
        """Every nonempty face as the bitmask of facets containing it.

        For a simple polytope any subset of a vertex's facets cuts out a face,
        so this is the downward closure of the vertex masks (the empty set,
        i.e. the whole polytope, excluded).
        """
        seen: set[int] = set()
        stack = list(self.vertex_masks)
        while stack:
            mask = stack.pop()
            if mask in seen:
                continue
            seen.add(mask)
            rest = mask
            while rest:
                low = rest & -rest
                rest ^= low
                sub = mask ^ low
                if sub and sub not in seen:
                    stack.append(sub)
        return frozenset(seen)

    @property
    def base_vertex(self) -> tuple[int, ...]:
        return tuple(range(self.dim))

    @property
    def has_base_vertex(self) -> bool:
        return (1 << self.dim) - 1 in set(self.vertex_masks)

    def is_face(self, facets: Iterable[int]) -> bool:
        return mask_of(facets) in self.faces

    # -- relabeling ---------------------------------------------------------

    def relabeled(self, images: Sequence[int], name: str | None = None) -> "SimplePolytope":
        """Rename facet ``i`` to ``images[i]``; the recorded relabel is composed."""
        images = tuple(images)
        if sorted(images) != list(range(self.num_facets)):
            raise InvalidParameters("relabeling is not a permutation of the facets")
        verts = tuple(tuple(sorted(images[i] for i in v)) for v in self.vertices)
        prior = self.relabel or tuple(range(self.num_facets))
        composed = tuple(images[prior[i]] for i in range(self.num_facets))
        return SimplePolytope(
            self.dim,
            self.num_facets,
            verts,
            self.name if name is None else name,
            None if composed == tuple(range(self.num_facets)) else composed,
        )

    def normalized(self) -> "SimplePolytope":
        """Relabel so that facets 0..n-1 meet at a vertex.

        The facets of the lexicographically smallest vertex become 0..n-1 in
        order and the remaining facets keep their relative order.
        """
        if self.has_base_vertex:
            return self
        first = self.vertices[0]
        rest = [i for i in range(self.num_facets) if i not in first]
        images = [0] * self.num_facets
        for new, old in enumerate(list(first) + rest):
            images[old] = new
        return self.relabeled(images)


# ---------------------------------------------------------------------------
# hull and duality


def _hyperplane(hpts: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Integer normal of the hyperplane through d homogeneous points in R^(d+1).

    Entry k is the signed maximal minor with column k deleted, so that the
    dot product with a homogeneous point q equals det([hpts; q]).
    """
    d1 = len(hpts[0])
    last = len(hpts)  # row index q will take in the bordered determinant
    normal = []
    for k in range(d1):
        minor = [[row[c] for c in range(d1) if c != k] for row in hpts]
        normal.append((-1) ** (last + k) * bareiss_det(minor))
    return tuple(normal)


def facets_from_points(pts: PointSet) -> SimplicialFacets:
    """Facets of the convex hull of a point set in general enough position.

    Every d-subset of points is tested: it spans a facet when it is affinely
    independent and all remaining points lie strictly on one side of its
    hyperplane.  All arithmetic is over the integers after homogenizing.
    """
    d, m = pts.dim, len(pts)
    if m < d + 1:
        raise NotFullDimensional(f"{m} points cannot span R^{d}")
    base = pts.points[0]
    diffs = [[x - y for x, y in zip(p, base)] for p in pts.points[1:]]
    if rational_rank(diffs) < d:
        raise NotFullDimensional("points lie in a proper affine subspace")

    hpts = [homogenize(p) for p in pts.points]
    facets = []
    for subset in combinations(range(m), d):
        normal = _hyperplane([hpts[i] for i in subset])
        if not any(normal):
            continue
        chosen = set(subset)
        pos = neg = zero = 0
        for j in range(m):
            if j in chosen:
                continue
            s = sum(a * b for a, b in zip(normal, hpts[j]))
            if s > 0:
                pos += 1
            elif s < 0:
                neg += 1
            else:
                zero += 1
            if pos and neg:
                break
        if pos and neg:
            continue
        if zero:
            raise NotSimplicial(f"supporting hyperplane through points {list(subset)} contains further points")
        facets.append(subset)

    covered = set().union(*facets) if facets else set()
    missing = sorted(set(range(m)) - covered)
    if missing:
        raise InteriorPoint(f"points {missing} lie on no facet")
    return SimplicialFacets(d, m, tuple(facets))


def dualize(sf: SimplicialFacets, name: str = "") -> SimplePolytope:
    """The simple polytope dual to a simplicial one: point i becomes facet i."""
    return SimplePolytope.from_vertices(sf.facets, sf.dim, sf.num_points, name)


def moment_curve(dim: int, params: Sequence[int | Fraction]) -> PointSet:
    return PointSet(dim, tuple(tuple(Fraction(t) ** k for k in range(1, dim + 1)) for t in params))


def cyclic_polytope(n: int, m: int) -> SimplicialFacets:
    """Facets of the cyclic polytope C^n(m) via Gale's evenness condition."""
    if not (isinstance(n, int) and isinstance(m, int)) or n < 2 or m <= n:
        raise InvalidParameters(f"cyclic polytope needs m > n >= 2, got n={n}, m={m}")
    facets = []
    for subset in combinations(range(m), n):
        members = set(subset)
        outside = [i for i in range(m) if i not in members]
        # checking consecutive non-members suffices: counts add over gaps
        if all(sum(1 for k in subset if i < k < j) % 2 == 0 for i, j in zip(outside, outside[1:])):
            facets.append(subset)
    return SimplicialFacets(n, m, tuple(facets))


# ---------------------------------------------------------------------------
# standard polytopes


def simplex(n: int) -> SimplePolytope:
    return SimplePolytope.from_vertices(combinations(range(n + 1), n), n, n + 1, f"simplex{n}")


def cube(n: int) -> SimplePolytope:
    """n-cube with facet i opposite facet i+n."""
    verts = []
    for bits in range(1 << n):
        verts.append(tuple(i + n * ((bits >> i) & 1) for i in range(n)))
    return SimplePolytope.from_vertices(verts, n, 2 * n, f"cube{n}")


def polygon(m: int) -> SimplePolytope:
    return dualize(cyclic_polytope(2, m), f"polygon{m}")


def dual_cyclic(n: int, m: int) -> SimplePolytope:
    return dualize(cyclic_polytope(n, m), f"C{n}({m})*")


def product(p: SimplePolytope, q: SimplePolytope, name: str | None = None) -> SimplePolytope:
    """Cartesian product; q's facets are shifted past p's.

    The result keeps this labeling verbatim and is not normalized.
    """
    shift = p.num_facets
    verts = [vp + tuple(j + shift for j in vq) for vp in p.vertices for vq in q.vertices]
    return SimplePolytope(
        p.dim + q.dim,
        p.num_facets + q.num_facets,
        tuple(verts),
        f"{p.name}x{q.name}" if name is None else name,
    )


# ---------------------------------------------------------------------------
# f- and h-vectors


def f_vector(p: SimplePolytope) -> FVector:
    """f-vector of the dual simplicial polytope, (f_-1, f_0, ..., f_{n-1}).

    f_{k-1} counts k-subsets of facets with nonempty intersection.
    """
    counts = [0] * (p.dim + 1)
    for face in p.faces:
        counts[face.bit_count()] += 1
    counts[0] = 1
    return tuple(counts)


def h_vector(f: Sequence[int]) -> HVector:
    n = len(f) - 1
    return tuple(
        sum((-1) ** (k - i) * comb(n - i, n - k) * f[i] for i in range(k + 1))
        for k in range(n + 1)
    )


def f_from_h(h: Sequence[int]) -> FVector:
    """Inverse of :func:`h_vector`: f_{n-k-1} = sum_{j>=k} C(j, k) h_{n-j}."""
    n = len(h) - 1
    f = [0] * (n + 1)
    for k in range(n + 1):
        f[n - k] = sum(comb(j, k) * h[n - j] for j in range(k, n + 1))
    return tuple(f)


def is_k_neighborly(p: SimplePolytope, k: int) -> bool:
    """True iff every k facets have a common vertex."""
    if not 1 <= k <= p.dim:
        raise InvalidParameters(f"k must lie in 1..{p.dim}, got {k}")
    faces = p.faces
    return all(mask_of(s) in faces for s in combinations(range(p.num_facets), k))


def neighborliness(p: SimplePolytope) -> int:
    """Largest k such that p is k-neighborly (every simple polytope is 1-neighborly)."""
    k = 1
    while k < p.dim and is_k_neighborly(p, k + 1):
        k += 1
    return k


def check_dehn_sommerville(h: Sequence[int]) -> bool:
    return tuple(h) == tuple(reversed(h))


def binomial_expansion(a: int, i: int) -> list[tuple[int, int]]:
    """The binomial i-expansion a = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j).

    Returned as ``[(a_i, i), (a_{i-1}, i-1), ...]`` with a_i > a_{i-1} > ... >= j >= 1.
    """
    if a < 0 or i < 1:
        raise InvalidParameters("binomial expansion needs a >= 0 and i >= 1")
    terms = []
    k = i
    while a > 0 and k >= 1:
        top = k
        while comb(top + 1, k) <= a:
            top += 1
        terms.append((top, k))
        a -= comb(top, k)
        k -= 1
    return terms


def pseudo_power(a: int, i: int) -> int:
    """Macaulay pseudo-power a^<i>."""
    return sum(comb(top + 1, k + 1) for top, k in binomial_expansion(a, i))


def gtheorem_valid(h: Sequence[int]) -> bool:
    """McMullen's conditions on an h-vector of a simple n-polytope."""
    h = list(h)
    n = len(h) - 1
    if n < 0 or h[0] != 1 or not check_dehn_sommerville(h):
        return False
    half = n // 2
    if any(h[i] > h[i + 1] for i in range(half)):
        return False
    g = [h[0]] + [h[i] - h[i - 1] for i in range(1, half + 1)]
    return all(g[i + 1] <= pseudo_power(g[i], i) for i in range(1, half))


def upper_bound_h(n: int, m: int) -> tuple[int, ...]:
    """h_i bound C(m-n+i-1, i) for i <= n/2, attained by neighborly polytopes."""
    return tuple(comb(m - n + i - 1, i) for i in range(n // 2 + 1))
