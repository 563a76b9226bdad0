"""Construction of generalized Morse complexes, Morse complexes, and generic
matching complexes as SimplicialComplex values.

A matching complex's vertices are the edges of the input graph in canonical
sorted order, so isomorphic inputs yield identical outputs.  Enumeration is
ordered backtracking with an occupancy set over graph nodes; a hard simplex
budget makes exponential blowup fail loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .complexes import SimplicialComplex, Simplex
from .errors import BudgetExceededError
from .hasse import HasseDiagram, build_hasse
from .vector_fields import DiscreteVectorField, Pair, is_acyclic

DEFAULT_SIMPLEX_BUDGET = 5_000_000

GraphEdge = tuple[Hashable, Hashable]


@dataclass(frozen=True)
class MatchingComplexResult:
    """A matching complex plus the dictionary decoding its vertex labels."""

    complex: SimplicialComplex
    vertex_dictionary: tuple  # index -> graph edge (Pair for Morse-type results)

    @property
    def simplex_counts(self) -> tuple[int, ...]:
        return self.complex.f_vector

    def matching_of(self, simplex: Simplex) -> tuple:
        """Decode a simplex of the result into the underlying edge set."""
        return tuple(self.vertex_dictionary[i] for i in simplex)


def _canonical_edges(edges: Iterable[GraphEdge]) -> list[GraphEdge]:
    seen = set()
    out = []
    for u, v in edges:
        e = (u, v) if u <= v else (v, u)
        if e not in seen:
            seen.add(e)
            out.append(e)
    return sorted(out)


def _enumerate_matchings(
    edges: Sequence[GraphEdge], budget: int, prune=None
) -> list[Simplex]:
    """All non-empty matchings as sorted index tuples, in DFS (lexicographic)
    order.  `prune` may reject a matching and cut its entire superset subtree
    (sound whenever the rejected property is inherited by supersets)."""
    n = len(edges)
    out: list[Simplex] = []
    used: set[Hashable] = set()
    current: list[int] = []

    def rec(start: int) -> None:
        for i in range(start, n):
            u, v = edges[i]
            if u in used or v in used:
                continue
            current.append(i)
            if prune is not None and prune(current):
                current.pop()
                continue
            out.append(tuple(current))
            if len(out) > budget:
                raise BudgetExceededError("matching enumeration", len(out), budget)
            used.add(u)
            used.add(v)
            rec(i + 1)
            used.discard(u)
            used.discard(v)
            current.pop()

    rec(0)
    return out


def matching_complex(
    edges: Iterable[GraphEdge], budget: int = DEFAULT_SIMPLEX_BUDGET
) -> MatchingComplexResult:
    """The matching complex of a simple graph given by its edge list.

    Vertices are the graph's edges (canonically sorted); simplices are the
    non-empty matchings.  The result is flag over the compatibility graph of
    the edges by construction.
    """
    canon = _canonical_edges(edges)
    simplices = _enumerate_matchings(canon, budget)
    return MatchingComplexResult(
        complex=SimplicialComplex(frozenset(simplices)),
        vertex_dictionary=tuple(canon),
    )


def compatibility_graph(result: MatchingComplexResult) -> list[tuple[int, int]]:
    """The 1-skeleton of a matching complex as index pairs."""
    return [s for s in result.complex.sorted_simplices() if len(s) == 2]


def _hasse_to_pairs(H: HasseDiagram) -> list[Pair]:
    """Hasse edges as primitive pairs, in the canonical matching-complex
    vertex order, so the result is label-identical to matching_complex."""
    pairs = []
    for a, b in _canonical_edges(H.edges):
        sigma, tau = (a, b) if len(a) < len(b) else (b, a)
        pairs.append(Pair(sigma, tau))
    return pairs


def generalized_morse_complex(
    K: SimplicialComplex,
    omega: Iterable[Simplex] = frozenset(),
    budget: int = DEFAULT_SIMPLEX_BUDGET,
) -> MatchingComplexResult:
    """GM(K, omega): the matching complex of the relative Hasse diagram, with
    the vertex dictionary in primitive-vector-field terms."""
    H = build_hasse(K, omega)
    pairs = _hasse_to_pairs(H)
    simplices = _enumerate_matchings(
        [(p.sigma, p.tau) for p in pairs], budget
    )
    return MatchingComplexResult(
        complex=SimplicialComplex(frozenset(simplices)),
        vertex_dictionary=tuple(pairs),
    )


def morse_complex(
    K: SimplicialComplex,
    omega: Iterable[Simplex] = frozenset(),
    budget: int = DEFAULT_SIMPLEX_BUDGET,
) -> MatchingComplexResult:
    """M(K, omega): the subcomplex of GM(K, omega) of acyclic matchings.

    Cyclic matchings are pruned together with their whole superset subtree,
    since adding pairs never destroys a cycle.  Vertex indices agree with
    those of generalized_morse_complex on the same input.
    """
    H = build_hasse(K, omega)
    pairs = _hasse_to_pairs(H)

    def cyclic(current: list[int]) -> bool:
        V = DiscreteVectorField(pairs[i] for i in current)
        return not is_acyclic(V)

    simplices = _enumerate_matchings(
        [(p.sigma, p.tau) for p in pairs], budget, prune=cyclic
    )
    return MatchingComplexResult(
        complex=SimplicialComplex(frozenset(simplices)),
        vertex_dictionary=tuple(pairs),
    )


def hexagon_with_pendants(n_pendants: int) -> list[tuple[int, int]]:
    """Edge list of a hexagon whose six vertices each carry `n_pendants`
    pendant edges; used as a Hasse-diagram-shaped matching fixture."""
    edges = [(i, (i + 1) % 6) for i in range(6)]
    nxt = 6
    for v in range(6):
        for _ in range(n_pendants):
            edges.append((v, nxt))
            nxt += 1
    return _canonical_edges(edges)


def hexagon_fixture_report(n_pendants: int) -> dict:
    """Brute-force h and d of the hexagon-with-pendants fixture.

    Reported alongside two candidate closed forms (6N+6 and 6N-6) rather
    than assuming either; the max degree closed form N+2 is also checked.
    """
    edges = hexagon_with_pendants(n_pendants)
    degree: dict[int, int] = {}
    for u, v in edges:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    return {
        "n_pendants": n_pendants,
        "h_measured": len(edges),
        "h_candidate_plus": 6 * n_pendants + 6,
        "h_candidate_minus": 6 * n_pendants - 6,
        "d_measured": max(degree.values()),
        "d_candidate": n_pendants + 2,
    }
