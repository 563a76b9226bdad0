"""Discrete vector fields: compatibility, V-paths, cycle counting, acyclicity,
and the round trip with Forman discrete Morse functions.

A discrete vector field is a matching on the Hasse diagram.  Its V-paths of
dimension p are walks in a "flow digraph" whose nodes are the matched
p-simplices; simple V-cycles, counted up to cyclic rotation, are exactly the
directed simple cycles of these digraphs.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Mapping, NamedTuple

from .complexes import (
    Simplex,
    SimplicialComplex,
    boundary_faces,
    is_face,
    skey,
)
from .errors import BudgetExceededError, DomainError, FormanValidationError

DEFAULT_CYCLE_BUDGET = 1_000_000


class Pair(NamedTuple):
    """A primitive discrete vector field (sigma, tau), sigma a codim-1 face."""

    sigma: Simplex
    tau: Simplex


def make_pair(sigma: Iterable[int], tau: Iterable[int]) -> Pair:
    s, t = tuple(sorted(sigma)), tuple(sorted(tau))
    if len(t) != len(s) + 1 or not is_face(s, t):
        raise DomainError(f"{s} is not a codimension-1 face of {t}")
    return Pair(s, t)


def pair_key(p: Pair) -> tuple:
    return (skey(p.sigma), skey(p.tau))


def compatible(a: Pair, b: Pair) -> bool:
    """True iff the two primitive vector fields share no simplex."""
    return not ({a.sigma, a.tau} & {b.sigma, b.tau})


class DiscreteVectorField:
    """An immutable matching on the Hasse diagram.

    Validates the matching condition at construction: each simplex appears
    in at most one pair.
    """

    __slots__ = ("pairs", "used", "_hash")

    def __init__(self, pairs: Iterable[Pair] = ()):
        canon = tuple(sorted({Pair(*p) for p in pairs}, key=pair_key))
        used: dict[Simplex, Pair] = {}
        for p in canon:
            if len(p.tau) != len(p.sigma) + 1 or not is_face(p.sigma, p.tau):
                raise DomainError(f"not a primitive vector field: {p}")
            for s in (p.sigma, p.tau):
                if s in used:
                    raise DomainError(f"simplex {s} used by two pairs")
                used[s] = p
        self.pairs = canon
        self.used = used
        self._hash = hash(canon)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __contains__(self, p: Pair) -> bool:
        return p in self.used.values()

    def __eq__(self, other) -> bool:
        return isinstance(other, DiscreteVectorField) and self.pairs == other.pairs

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"DiscreteVectorField({list(self.pairs)})"

    def restricted(self, pairs: Iterable[Pair]) -> "DiscreteVectorField":
        return DiscreteVectorField(pairs)

    def dims(self) -> list[int]:
        return sorted({len(p.sigma) - 1 for p in self.pairs})


class VCycle(NamedTuple):
    """A simple V-cycle in canonical rotation (lexicographically least sigma
    first).  V-cycles are directed, so no reflection identification applies."""

    sigmas: tuple[Simplex, ...]
    taus: tuple[Simplex, ...]


def flow_digraph(V: DiscreteVectorField, p: int) -> dict[Simplex, tuple[Simplex, ...]]:
    """Directed graph on matched p-simplices: sigma -> sigma' iff sigma' is a
    codimension-1 face of V(sigma) other than sigma itself."""
    matched = {
        pr.sigma: pr.tau for pr in V.pairs if len(pr.sigma) == p + 1
    }
    adj: dict[Simplex, tuple[Simplex, ...]] = {}
    for sigma, tau in matched.items():
        succ = [f for f in boundary_faces(tau) if f != sigma and f in matched]
        adj[sigma] = tuple(sorted(succ, key=skey))
    return adj


def _johnson_cycles(
    adj: Mapping[Simplex, tuple[Simplex, ...]],
    budget: int,
    found_so_far: int,
) -> list[tuple[Simplex, ...]]:
    """All directed simple cycles, one per cyclic rotation class.

    Johnson-style backtracking with blocking; each cycle is emitted rooted at
    its least node, so the output is already in canonical rotation.
    """
    nodes = sorted(adj, key=skey)
    order = {v: i for i, v in enumerate(nodes)}
    cycles: list[tuple[Simplex, ...]] = []

    for root in nodes:
        blocked: set[Simplex] = set()
        block_list: dict[Simplex, set[Simplex]] = {}
        path: list[Simplex] = []

        def unblock(v: Simplex) -> None:
            stack = [v]
            while stack:
                u = stack.pop()
                if u in blocked:
                    blocked.discard(u)
                    stack.extend(block_list.pop(u, ()))

        def circuit(v: Simplex) -> bool:
            closed = False
            path.append(v)
            blocked.add(v)
            for w in adj[v]:
                if order[w] < order[root]:
                    continue
                if w == root:
                    cycles.append(tuple(path))
                    if found_so_far + len(cycles) > budget:
                        raise BudgetExceededError(
                            "cycle enumeration", found_so_far + len(cycles), budget
                        )
                    closed = True
                elif w not in blocked:
                    if circuit(w):
                        closed = True
            if closed:
                unblock(v)
            else:
                for w in adj[v]:
                    if order[w] >= order[root]:
                        block_list.setdefault(w, set()).add(v)
            path.pop()
            return closed

        circuit(root)
    return cycles


def simple_cycles(
    V: DiscreteVectorField, budget: int = DEFAULT_CYCLE_BUDGET
) -> list[VCycle]:
    """All simple V-cycles, each reported once up to cyclic permutation.

    Deterministic order: by dimension, then canonical rotation anchors.
    """
    out: list[VCycle] = []
    for p in V.dims():
        adj = flow_digraph(V, p)
        for sigmas in _johnson_cycles(adj, budget, len(out)):
            taus = tuple(V.used[s].tau for s in sigmas)
            out.append(VCycle(sigmas=sigmas, taus=taus))
    return out


def phi(V: DiscreteVectorField, budget: int = DEFAULT_CYCLE_BUDGET) -> int:
    """The number of simple V-cycles."""
    return len(simple_cycles(V, budget))


def is_acyclic(V: DiscreteVectorField) -> bool:
    """True iff every flow digraph is a DAG (iterative three-color DFS)."""
    for p in V.dims():
        adj = flow_digraph(V, p)
        state: dict[Simplex, int] = {}  # 1 = on stack, 2 = done
        for start in adj:
            if state.get(start):
                continue
            stack: list[tuple[Simplex, int]] = [(start, 0)]
            state[start] = 1
            while stack:
                node, i = stack.pop()
                if i < len(adj[node]):
                    stack.append((node, i + 1))
                    nxt = adj[node][i]
                    st = state.get(nxt, 0)
                    if st == 1:
                        return False
                    if st == 0:
                        state[nxt] = 1
                        stack.append((nxt, 0))
                else:
                    state[node] = 2
    return True


# ---------------------------------------------------------------------------
# Forman discrete Morse functions


def _codim1_cofaces(K: SimplicialComplex, s: Simplex) -> list[Simplex]:
    extra = [v for v in K.vertices if v not in s]
    out = []
    for v in extra:
        t = tuple(sorted(s + (v,)))
        if t in K.simplices:
            out.append(t)
    return out


def validate_forman(K: SimplicialComplex, f: Mapping[Simplex, float]) -> None:
    """Check both quantified conditions of the Forman definition; raises
    FormanValidationError naming the violating simplex."""
    missing = [s for s in K.simplices if s not in f]
    if missing:
        raise FormanValidationError(
            f"function not defined on simplex {sorted(missing, key=skey)[0]}",
            sorted(missing, key=skey)[0],
        )
    for s in K.sorted_simplices():
        ups = sum(1 for t in _codim1_cofaces(K, s) if f[t] <= f[s])
        if ups > 1:
            raise FormanValidationError(
                f"{ups} cofaces of {s} do not increase the function", s
            )
        if len(s) >= 2:
            downs = sum(1 for g in boundary_faces(s) if f[g] >= f[s])
            if downs > 1:
                raise FormanValidationError(
                    f"{downs} faces of {s} do not decrease the function", s
                )


def gradient_vector_field(
    K: SimplicialComplex, f: Mapping[Simplex, float]
) -> DiscreteVectorField:
    """The gradient vector field of a Forman discrete Morse function: all
    pairs (sigma, tau) with tau a codim-1 coface and f(tau) <= f(sigma)."""
    validate_forman(K, f)
    pairs = []
    for s in K.sorted_simplices():
        for t in _codim1_cofaces(K, s):
            if f[t] <= f[s]:
                pairs.append(Pair(s, t))
    return DiscreteVectorField(pairs)


def forman_function_from_acyclic(
    K: SimplicialComplex, V: DiscreteVectorField
) -> dict[Simplex, int]:
    """A Forman function whose gradient is exactly V.

    Built from a linear extension of the modified face order: every Hasse
    edge is directed from coface down to face, except matched pairs which
    are reversed.  V must be acyclic, otherwise no linear extension exists.
    """
    if not is_acyclic(V):
        raise DomainError("vector field is cyclic; no Forman function exists")
    for p in V.pairs:
        if p.sigma not in K.simplices or p.tau not in K.simplices:
            raise DomainError(f"pair {p} not supported on the complex")

    nodes = K.sorted_simplices()
    succ: dict[Simplex, list[Simplex]] = {n: [] for n in nodes}
    indeg: dict[Simplex, int] = {n: 0 for n in nodes}
    for tau in nodes:
        for sigma in boundary_faces(tau):
            if V.used.get(sigma) == V.used.get(tau) and sigma in V.used:
                src, dst = sigma, tau  # matched: value must drop from face to coface
            else:
                src, dst = tau, sigma
            succ[src].append(dst)
            indeg[dst] += 1

    # deterministic Kahn topological sort; assign strictly decreasing values
    heap = [skey(n) for n in nodes if indeg[n] == 0]
    heapq.heapify(heap)
    f: dict[Simplex, int] = {}
    value = len(nodes)
    while heap:
        _, node = heapq.heappop(heap)
        f[node] = value
        value -= 1
        for nxt in succ[node]:
            indeg[nxt] -= 1
            if indeg[nxt] == 0:
                heapq.heappush(heap, skey(nxt))
    if len(f) != len(nodes):
        raise DomainError("modified face order is cyclic; vector field invalid")
    return f
