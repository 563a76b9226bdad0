"""(Relative) Hasse diagrams, the measurements h and d, and maximum matchings.

The Hasse diagram of a complex has a node per simplex outside the exclusion
set and an edge for each codimension-1 face relation between surviving
nodes.  It is bipartite under dimension parity, which is what makes the
Hopcroft-Karp maximum matching applicable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable

from .complexes import Simplex, SimplicialComplex, boundary_faces, skey
from .errors import DomainError

ExclusionSet = FrozenSet[Simplex]

HasseEdge = tuple[Simplex, Simplex]  # (sigma, tau) with dim(tau) = dim(sigma) + 1


@dataclass(frozen=True)
class HasseMetrics:
    h: int  # number of edges
    d: int  # maximum node degree (0 for an edgeless diagram)


@dataclass(frozen=True)
class HasseDiagram:
    """Codimension-1 incidence graph of a complex minus an exclusion set."""

    nodes: tuple[Simplex, ...]
    edges: tuple[HasseEdge, ...]
    adjacency: dict[Simplex, tuple[Simplex, ...]] = field(compare=False, repr=False)

    def degree(self, node: Simplex) -> int:
        return len(self.adjacency[node])

    @property
    def metrics(self) -> HasseMetrics:
        d = max((len(nbrs) for nbrs in self.adjacency.values()), default=0)
        return HasseMetrics(h=len(self.edges), d=d)


def build_hasse(
    K: SimplicialComplex, omega: Iterable[Simplex] = frozenset()
) -> HasseDiagram:
    """Construct the relative Hasse diagram of K with exclusion set omega.

    Omega members must be simplices of K; violations are reported, not
    silently dropped.  An empty omega yields the absolute Hasse diagram.
    """
    omega = frozenset(omega)
    offenders = sorted((s for s in omega if s not in K.simplices), key=skey)
    if offenders:
        raise DomainError(f"exclusion set members not in complex: {offenders}")
    nodes = tuple(s for s in K.sorted_simplices() if s not in omega)
    node_set = set(nodes)
    edges: list[HasseEdge] = []
    adjacency: dict[Simplex, list[Simplex]] = {n: [] for n in nodes}
    for tau in nodes:
        if len(tau) < 2:
            continue
        for sigma in boundary_faces(tau):
            if sigma in node_set:
                edges.append((sigma, tau))
                adjacency[sigma].append(tau)
                adjacency[tau].append(sigma)
    edges.sort()  # deterministic plain tuple order
    frozen_adj = {n: tuple(sorted(v, key=skey)) for n, v in adjacency.items()}
    return HasseDiagram(nodes=nodes, edges=tuple(edges), adjacency=frozen_adj)


def metrics(H: HasseDiagram) -> HasseMetrics:
    return H.metrics


@dataclass(frozen=True)
class ObservationReport:
    """Cross-check of h against the f-vector formula and of d against the
    degrees of the 0- and 1-simplices alone (the maximum degree is always
    achieved in the 1-skeleton, with cofaces still counted in the ambient
    complex).  A mismatch would indicate an implementation bug, so `ok`
    doubles as a self-test flag."""

    h_direct: int
    h_formula: int
    d_direct: int
    d_skeleton: int

    @property
    def ok(self) -> bool:
        return self.h_direct == self.h_formula and self.d_direct == self.d_skeleton


def verify_h_d_observation(K: SimplicialComplex) -> ObservationReport:
    if not K.simplices:
        raise DomainError("observation check requires a non-empty complex")
    H = build_hasse(K)
    direct = H.metrics
    f = K.f_vector
    h_formula = sum(f[k] * (k + 1) for k in range(1, len(f)))
    d_skeleton = max(
        (len(H.adjacency[n]) for n in H.nodes if len(n) <= 2), default=0
    )
    return ObservationReport(
        h_direct=direct.h,
        h_formula=h_formula,
        d_direct=direct.d,
        d_skeleton=d_skeleton,
    )


def max_matching_size(H: HasseDiagram) -> int:
    """Maximum matching size via Hopcroft-Karp layered augmentation.

    The bipartition is by dimension parity, which every Hasse diagram
    satisfies by construction.
    """
    left = [n for n in H.nodes if (len(n) - 1) % 2 == 0]
    matched_left: dict[Simplex, Simplex] = {}
    matched_right: dict[Simplex, Simplex] = {}
    INF = float("inf")
    dist: dict[Simplex, float] = {}

    def bfs() -> bool:
        queue: deque[Simplex] = deque()
        dist.clear()
        for u in left:
            if u not in matched_left:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for v in H.adjacency[u]:
                w = matched_right.get(v)
                if w is None:
                    found = True
                elif dist.get(w, INF) == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: Simplex) -> bool:
        for v in H.adjacency[u]:
            w = matched_right.get(v)
            if w is None or (dist.get(w, INF) == dist[u] + 1 and dfs(w)):
                matched_left[u] = v
                matched_right[v] = u
                return True
        dist[u] = INF
        return False

    size = 0
    while bfs():
        for u in left:
            if u not in matched_left and dfs(u):
                size += 1
    return size
