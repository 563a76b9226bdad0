"""Finite abstract simplicial complexes and standard constructions.

A simplex is a strictly increasing tuple of non-negative integer vertex
labels; the sorted tuple is the identity used for equality and hashing.
A complex stores *all* of its simplices (not just the maximal ones), so
face/coface lookups downstream are plain set membership tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import networkx as nx

from .errors import DomainError, MalformedInputError

Simplex = tuple[int, ...]


def make_simplex(vertices: Iterable[int]) -> Simplex:
    """Canonicalize a vertex collection into a simplex tuple."""
    vs = tuple(sorted(vertices))
    if not vs:
        raise MalformedInputError("empty simplex is not allowed")
    if len(set(vs)) != len(vs):
        raise MalformedInputError(f"duplicate vertex in simplex {vs}")
    if any((not isinstance(v, int)) or v < 0 for v in vs):
        raise MalformedInputError(f"vertex labels must be non-negative integers: {vs}")
    return vs


def simplex_dim(s: Simplex) -> int:
    return len(s) - 1


def skey(s: Simplex) -> tuple[int, Simplex]:
    """Canonical sort key: by dimension, then lexicographically."""
    return (len(s), s)


def boundary_faces(s: Simplex) -> Iterator[Simplex]:
    """The codimension-1 faces of a simplex, in canonical order."""
    for i in range(len(s)):
        f = s[:i] + s[i + 1 :]
        if f:
            yield f


def proper_faces(s: Simplex) -> Iterator[Simplex]:
    """All non-empty proper faces of a simplex."""
    for k in range(1, len(s)):
        yield from itertools.combinations(s, k)


def is_face(a: Simplex, b: Simplex) -> bool:
    """Whether a is a (not necessarily proper) face of b."""
    return set(a) <= set(b)


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite abstract simplicial complex, closed under taking faces.

    The empty complex is representable; its dimension is the sentinel -1.
    Instances are immutable after construction and safe to share between
    threads.
    """

    simplices: frozenset[Simplex]

    @cached_property
    def dim(self) -> int:
        if not self.simplices:
            return -1
        return max(len(s) for s in self.simplices) - 1

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        """Counts of k-simplices for k = 0..dim."""
        counts = [0] * (self.dim + 1)
        for s in self.simplices:
            counts[len(s) - 1] += 1
        return tuple(counts)

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for s in self.simplices for v in s}))

    def __contains__(self, s: Simplex) -> bool:
        return s in self.simplices

    def __len__(self) -> int:
        return len(self.simplices)

    def simplices_of_dim(self, k: int) -> list[Simplex]:
        return sorted((s for s in self.simplices if len(s) == k + 1), key=skey)

    def sorted_simplices(self) -> list[Simplex]:
        return sorted(self.simplices, key=skey)

    def maximal_simplices(self) -> list[Simplex]:
        by_size = sorted(self.simplices, key=len, reverse=True)
        maximal: list[Simplex] = []
        for s in by_size:
            if not any(is_face(s, m) for m in maximal):
                maximal.append(s)
        return sorted(maximal)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.f_vector))

    def check_closure(self) -> None:
        """Assert downward closure; raises if a codimension-1 face is missing."""
        for s in self.simplices:
            for f in boundary_faces(s):
                if f not in self.simplices:
                    raise DomainError(f"complex not closed under faces: {s} lacks {f}")


EMPTY_COMPLEX = SimplicialComplex(frozenset())


def from_simplices(simplices: Iterable[Simplex]) -> SimplicialComplex:
    """Build a complex from an already face-closed simplex collection."""
    return SimplicialComplex(frozenset(simplices))


def from_maximal(maximal: Iterable[Sequence[int]]) -> SimplicialComplex:
    """Downward closure of the given simplices.

    Duplicate vertices within one input sequence are rejected; an empty
    input collection yields the empty complex.
    """
    closed: set[Simplex] = set()
    for raw in maximal:
        top = make_simplex(raw)
        for k in range(1, len(top) + 1):
            closed.update(itertools.combinations(top, k))
    return SimplicialComplex(frozenset(closed))


# ---------------------------------------------------------------------------
# Generator families


def full_simplex(n: int) -> SimplicialComplex:
    if n < 0:
        raise DomainError(f"simplex dimension must be >= 0, got {n}")
    return from_maximal([tuple(range(n + 1))])


def boundary_simplex(n: int) -> SimplicialComplex:
    if n < 1:
        raise DomainError(f"boundary simplex needs n >= 1, got {n}")
    top = tuple(range(n + 1))
    return from_maximal(itertools.combinations(top, n))


def hyperoctahedron(n: int) -> SimplicialComplex:
    """Boundary of the (n+1)-dimensional cross polytope, an n-sphere.

    Vertex pair (2i, 2i+1) is the i-th antipodal pair; simplices are the
    vertex sets containing at most one vertex from each pair.
    """
    if n < 0:
        raise DomainError(f"hyperoctahedron needs n >= 0, got {n}")
    maximal = itertools.product(*[(2 * i, 2 * i + 1) for i in range(n + 1)])
    return from_maximal(list(maximal))


_ICOSAHEDRON_FACES: list[tuple[int, int, int]] = []
for _k in range(5):
    _u, _un = 1 + _k, 1 + (_k + 1) % 5
    _l, _ln = 6 + _k, 6 + (_k + 1) % 5
    _ICOSAHEDRON_FACES += [(0, _u, _un), (11, _l, _ln), (_u, _un, _l), (_un, _l, _ln)]


def icosahedron_boundary() -> SimplicialComplex:
    """The boundary of the icosahedron: 12 vertices, 30 edges, 20 triangles."""
    return from_maximal(_ICOSAHEDRON_FACES)


def complete_graph(n: int) -> SimplicialComplex:
    if n < 1:
        raise DomainError(f"complete graph needs n >= 1, got {n}")
    if n == 1:
        return from_maximal([(0,)])
    return from_maximal(itertools.combinations(range(n), 2))


def complete_bipartite(p: int, q: int) -> SimplicialComplex:
    if p < 1 or q < 1:
        raise DomainError(f"complete bipartite graph needs p, q >= 1, got ({p}, {q})")
    return from_maximal([(i, p + j) for i in range(p) for j in range(q)])


def cycle_graph(n: int) -> SimplicialComplex:
    if n < 3:
        raise DomainError(f"cycle graph needs n >= 3, got {n}")
    return from_maximal([(i, (i + 1) % n) for i in range(n)])


def path_graph(n_edges: int) -> SimplicialComplex:
    if n_edges < 1:
        raise DomainError(f"path graph needs >= 1 edge, got {n_edges}")
    return from_maximal([(i, i + 1) for i in range(n_edges)])


def hypercube_graph(n: int) -> SimplicialComplex:
    """1-skeleton of the n-cube on vertex labels 0..2^n - 1 (bit flips)."""
    if n < 1:
        raise DomainError(f"hypercube graph needs n >= 1, got {n}")
    edges = [
        (v, v | (1 << b))
        for v in range(1 << n)
        for b in range(n)
        if not v & (1 << b)
    ]
    return from_maximal(edges)


GENERATORS = {
    "simplex": full_simplex,
    "boundary-simplex": boundary_simplex,
    "hyperoctahedron": hyperoctahedron,
    "icosahedron": icosahedron_boundary,
    "complete": complete_graph,
    "bipartite": complete_bipartite,
    "cycle": cycle_graph,
    "path": path_graph,
    "hypercube": hypercube_graph,
}


def generate(family: str, *params: int) -> SimplicialComplex:
    """Dispatch to a named generator family with deterministic vertex labels."""
    if family not in GENERATORS:
        raise DomainError(f"unknown family {family!r}; known: {sorted(GENERATORS)}")
    return GENERATORS[family](*params)


# ---------------------------------------------------------------------------
# Constructions


def subdivision_vertex_order(K: SimplicialComplex) -> list[Simplex]:
    """Canonical ordering of K's simplices used as subdivision vertex labels."""
    return K.sorted_simplices()


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    """Barycentric subdivision: vertices are simplices of K, simplices are
    chains of K-simplices under strict face inclusion."""
    if not K.simplices:
        raise DomainError("barycentric subdivision of the empty complex")
    order = subdivision_vertex_order(K)
    index = {s: i for i, s in enumerate(order)}
    chains: set[Simplex] = set()

    # chains ending at s = {s} plus every chain ending at a proper face, extended
    ending: dict[Simplex, list[tuple[int, ...]]] = {}
    for s in order:  # sorted by dimension, so faces are processed first
        here = [(index[s],)]
        for f in proper_faces(s):
            if f in K.simplices:
                for ch in ending[f]:
                    here.append(ch + (index[s],))
        ending[s] = here
        chains.update(here)
    return SimplicialComplex(frozenset(chains))


def skeleton(K: SimplicialComplex, k: int) -> SimplicialComplex:
    if k < 0:
        raise DomainError(f"skeleton dimension must be >= 0, got {k}")
    return SimplicialComplex(frozenset(s for s in K.simplices if len(s) <= k + 1))


def relabeled(K: SimplicialComplex, offset: int = 0) -> SimplicialComplex:
    """Relabel vertices to offset..offset+|V|-1 following sorted label order."""
    mapping = {v: offset + i for i, v in enumerate(K.vertices)}
    return SimplicialComplex(
        frozenset(tuple(mapping[v] for v in s) for s in K.simplices)
    )


def join(K: SimplicialComplex, L: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join after deterministic disjoint relabeling.

    Simplices are unions of a (possibly empty) simplex of K and a (possibly
    empty) simplex of L, excluding the doubly-empty union.
    """
    Kr = relabeled(K, 0)
    Lr = relabeled(L, len(K.vertices))
    out: set[Simplex] = set(Kr.simplices) | set(Lr.simplices)
    for a in Kr.simplices:
        for b in Lr.simplices:
            out.add(a + b)
    return SimplicialComplex(frozenset(out))


def full_subcomplex(K: SimplicialComplex, keep: Iterable[int]) -> SimplicialComplex:
    """Full subcomplex spanned by the given vertex labels."""
    kept = set(keep)
    return SimplicialComplex(
        frozenset(s for s in K.simplices if all(v in kept for v in s))
    )


# ---------------------------------------------------------------------------
# Isomorphism (test/verification utility)


def _face_poset_digraph(K: SimplicialComplex) -> nx.DiGraph:
    g = nx.DiGraph()
    for s in K.simplices:
        g.add_node(s, dim=len(s) - 1)
        for f in boundary_faces(s):
            g.add_edge(f, s)
    return g


def are_isomorphic(K: SimplicialComplex, L: SimplicialComplex) -> bool:
    """Simplicial isomorphism via the graded face posets (exact, small inputs)."""
    if K.f_vector != L.f_vector:
        return False
    if not K.simplices:
        return True
    matcher = nx.algorithms.isomorphism.DiGraphMatcher(
        _face_poset_digraph(K),
        _face_poset_digraph(L),
        node_match=lambda a, b: a["dim"] == b["dim"],
    )
    return matcher.is_isomorphic()
