"""Sublevel complexes and descending links of the cycle-counting height
function on the subdivided generalized Morse complex.

The height on a vertex of GM' (i.e. a matching V) is the lexicographic pair
(number of simple V-cycles, -dim).  Sublevel complexes interpolate from the
subdivided Morse complex (height 0) to all of GM'; descending links split as
the join of a face part and a coface part, and this module both materializes
them and mechanically re-checks the structural facts the bounds rely on.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .complexes import (
    SimplicialComplex,
    Simplex,
    boundary_simplex,
    join,
    proper_faces,
    skey,
)
from .errors import DomainError
from .hasse import build_hasse
from .morse_complexes import (
    DEFAULT_SIMPLEX_BUDGET,
    MatchingComplexResult,
    _enumerate_matchings,
    generalized_morse_complex,
    morse_complex,
)
from .vector_fields import (
    DEFAULT_CYCLE_BUDGET,
    DiscreteVectorField,
    Pair,
    pair_key,
    simple_cycles,
)

INFINITY = float("inf")


def _map_ordered(fn: Callable, items: list, threads: int) -> list:
    """Apply fn preserving input order; results are merged deterministically
    regardless of worker count."""
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class SubdivisionVertex:
    """A vertex of GM': a matching, its cycle count, and its GM dimension."""

    matching: DiscreteVectorField
    phi: int
    dim: int


def _matching_key(V: DiscreteVectorField) -> tuple:
    return (len(V.pairs), tuple(pair_key(p) for p in V.pairs))


def _order_complex(
    elements: list[DiscreteVectorField],
) -> tuple[SimplicialComplex, tuple[DiscreteVectorField, ...]]:
    """Order complex of matchings under inclusion: vertices in canonical
    order, simplices are the inclusion chains."""
    order = sorted(elements, key=_matching_key)
    index = {V: i for i, V in enumerate(order)}
    sets = {V: frozenset(V.pairs) for V in order}
    chains: set[Simplex] = set()
    ending: dict[DiscreteVectorField, list[Simplex]] = {}
    for V in order:  # sorted by size, so proper subsets come first
        here: list[Simplex] = [(index[V],)]
        for W in order:
            if len(W) >= len(V):
                break
            if sets[W] < sets[V]:
                for ch in ending[W]:
                    here.append(ch + (index[V],))
        ending[V] = here
        chains.update(here)
    return SimplicialComplex(frozenset(chains)), tuple(order)


def phi_table(
    gm: MatchingComplexResult,
    cycle_budget: int = DEFAULT_CYCLE_BUDGET,
    threads: int = 1,
) -> dict[Simplex, int]:
    """Cycle count for every simplex of a generalized Morse complex."""
    simplices = gm.complex.sorted_simplices()

    def count(s: Simplex) -> int:
        V = DiscreteVectorField(gm.vertex_dictionary[i] for i in s)
        return len(simple_cycles(V, cycle_budget))

    values = _map_ordered(count, simplices, threads)
    return dict(zip(simplices, values))


def sublevel_complex(
    K: SimplicialComplex,
    omega: Iterable[Simplex] = frozenset(),
    t: float = INFINITY,
    budget: int = DEFAULT_SIMPLEX_BUDGET,
    cycle_budget: int = DEFAULT_CYCLE_BUDGET,
    threads: int = 1,
) -> SimplicialComplex:
    """The full subcomplex of GM(K, omega)' spanned by matchings with cycle
    count at most t.  Vertex labels index the canonical ordering of all GM
    simplices, so sublevels for different t live in one label space."""
    if t != INFINITY and t < 0:
        raise DomainError(f"sublevel threshold must be >= 0 or infinity, got {t}")
    gm = generalized_morse_complex(K, omega, budget)
    table = phi_table(gm, cycle_budget, threads)
    order = gm.complex.sorted_simplices()
    index = {s: i for i, s in enumerate(order)}
    kept = [s for s in order if table[s] <= t]
    keptset = set(kept)

    chains: set[Simplex] = set()
    ending: dict[Simplex, list[Simplex]] = {}
    for s in sorted(kept, key=skey):
        here: list[Simplex] = [(index[s],)]
        for f in proper_faces(s):
            if f in keptset:
                for ch in ending[f]:
                    here.append(ch + (index[s],))
        ending[s] = here
        chains.update(here)
    return SimplicialComplex(frozenset(chains))


@dataclass(frozen=True)
class DescendingLinkReport:
    """Descending face and coface links of a vertex of GM', materialized as
    order complexes, plus the cone/sphere classification."""

    vertex: SubdivisionVertex
    face_vertices: tuple[DiscreteVectorField, ...]
    coface_vertices: tuple[DiscreteVectorField, ...]
    face_link: SimplicialComplex
    coface_link: SimplicialComplex
    classification: str  # "cone_contractible" or "boundary_sphere"
    sphere_dim: Optional[int]

    @property
    def full_link(self) -> SimplicialComplex:
        """The whole descending link: the join of face and coface parts."""
        return join(self.face_link, self.coface_link)


def descending_links(
    K: SimplicialComplex,
    omega: Iterable[Simplex],
    V: DiscreteVectorField,
    budget: int = DEFAULT_SIMPLEX_BUDGET,
    cycle_budget: int = DEFAULT_CYCLE_BUDGET,
) -> DescendingLinkReport:
    """Materialize the descending face/coface links of V in GM(K, omega)'.

    Faces are the proper sub-matchings with strictly smaller cycle count;
    cofaces are the proper super-matchings with no larger cycle count.
    Only vertices with positive cycle count are analyzed.
    """
    omega = frozenset(omega)
    H = build_hasse(K, omega)
    hasse_edges = set(H.edges)
    for p in V.pairs:
        if (p.sigma, p.tau) not in hasse_edges:
            raise DomainError(f"pair {p} is not available in the relative Hasse diagram")

    cycles = simple_cycles(V, cycle_budget)
    phi_v = len(cycles)
    if phi_v == 0:
        raise DomainError("descending links are only analyzed at positive cycle count")

    def phi_of(pairs: Iterable[Pair]) -> int:
        return len(simple_cycles(DiscreteVectorField(pairs), cycle_budget))

    # descending faces: proper sub-matchings losing at least one cycle
    face_vertices = []
    for sub in proper_faces(tuple(range(len(V.pairs)))):
        pairs = [V.pairs[i] for i in sub]
        if phi_of(pairs) < phi_v:
            face_vertices.append(DiscreteVectorField(pairs))

    # descending cofaces: extensions by matchings on the untouched Hasse nodes
    used = set(V.used)
    free_edges = [
        (sigma, tau)
        for sigma, tau in H.edges
        if sigma not in used and tau not in used
    ]
    coface_vertices = []
    for idx in _enumerate_matchings(free_edges, budget):
        extension = [Pair(*free_edges[i]) for i in idx]
        combined = V.pairs + tuple(extension)
        if phi_of(combined) <= phi_v:
            coface_vertices.append(DiscreteVectorField(combined))

    face_link, face_order = _order_complex(face_vertices)
    coface_link, coface_order = _order_complex(coface_vertices)

    in_cycles = {Pair(s, t) for c in cycles for s, t in zip(c.sigmas, c.taus)}
    if all(p in in_cycles for p in V.pairs):
        classification, sphere_dim = "boundary_sphere", len(V.pairs) - 2
    else:
        classification, sphere_dim = "cone_contractible", None

    return DescendingLinkReport(
        vertex=SubdivisionVertex(matching=V, phi=phi_v, dim=len(V.pairs) - 1),
        face_vertices=face_order,
        coface_vertices=coface_order,
        face_link=face_link,
        coface_link=coface_link,
        classification=classification,
        sphere_dim=sphere_dim,
    )


@dataclass
class LemmaSweepReport:
    """Result of sweeping every positive-cycle-count matching and checking
    the structural facts about its descending links."""

    vertices_swept: int = 0
    case1_count: int = 0
    case2_count: int = 0
    iso_checks: int = 0
    one_cycle_checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _check_coface_model(
    K: SimplicialComplex,
    omega: frozenset[Simplex],
    V: DiscreteVectorField,
    report_obj: DescendingLinkReport,
    budget: int,
    failures: list[str],
) -> None:
    """For a graph, the descending coface link must be isomorphic to the
    subdivided Morse complex relative to omega plus the simplices V uses,
    via the explicit vertex bijection (V joined with W) <-> W."""
    upsilon = frozenset(V.used)
    m_rel = morse_complex(K, omega | upsilon, budget)
    rel_vertices = [
        DiscreteVectorField(m_rel.vertex_dictionary[i] for i in s)
        for s in m_rel.complex.sorted_simplices()
    ]
    rel_link, rel_order = _order_complex(rel_vertices)

    v_pairs = frozenset(V.pairs)
    image = {DiscreteVectorField(frozenset(c.pairs) - v_pairs) for c in report_obj.coface_vertices}
    if image != set(rel_order):
        failures.append(
            f"coface model vertex sets differ for V={list(V.pairs)}: "
            f"{len(image)} vs {len(rel_order)}"
        )
        return

    # check the induced label map is simplicial in both directions
    rel_index = {W: i for i, W in enumerate(rel_order)}
    label_map = {
        i: rel_index[DiscreteVectorField(frozenset(c.pairs) - v_pairs)]
        for i, c in enumerate(report_obj.coface_vertices)
    }
    forward = {
        tuple(sorted(label_map[i] for i in s))
        for s in report_obj.coface_link.simplices
    }
    if forward != set(rel_link.simplices):
        failures.append(f"coface model is not simplicial for V={list(V.pairs)}")


def verify_descending_link_lemmas(
    K: SimplicialComplex,
    omega: Iterable[Simplex] = frozenset(),
    budget: int = DEFAULT_SIMPLEX_BUDGET,
    cycle_budget: int = DEFAULT_CYCLE_BUDGET,
    threads: int = 1,
) -> LemmaSweepReport:
    """Sweep all matchings with positive cycle count and assert:

    - cone case: a cycle-free pair exists and the face link is closed under
      adding it (the cone certificate), or
    - sphere case: every proper sub-matching is a descending face, and the
      descending faces counted by dimension match the simplex boundary;
    - for graphs: the coface link is isomorphic to the relative subdivided
      Morse complex, and every pair lies in at most one simple cycle.

    Any failure is recorded as a detailed counterexample (it would falsify
    the implementation, not the theory).
    """
    omega = frozenset(omega)
    gm = generalized_morse_complex(K, omega, budget)
    table = phi_table(gm, cycle_budget, threads)
    report = LemmaSweepReport()
    is_graph = K.dim <= 1

    for s in gm.complex.sorted_simplices():
        if table[s] == 0:
            continue
        V = DiscreteVectorField(gm.vertex_dictionary[i] for i in s)
        dl = descending_links(K, omega, V, budget, cycle_budget)
        report.vertices_swept += 1
        face_sets = {frozenset(W.pairs) for W in dl.face_vertices}

        if dl.classification == "cone_contractible":
            report.case1_count += 1
            cycles = simple_cycles(V, cycle_budget)
            in_cycles = {Pair(a, b) for c in cycles for a, b in zip(c.sigmas, c.taus)}
            apex = sorted((p for p in V.pairs if p not in in_cycles), key=pair_key)[0]
            for W in dl.face_vertices:
                enlarged = frozenset(W.pairs) | {apex}
                if enlarged != frozenset(V.pairs) and enlarged not in face_sets:
                    report.failures.append(
                        f"cone certificate fails: V={list(V.pairs)}, W={list(W.pairs)}"
                    )
        else:
            report.case2_count += 1
            k = len(V.pairs) - 1
            expected = {
                frozenset(V.pairs[i] for i in sub)
                for sub in proper_faces(tuple(range(k + 1)))
            }
            if face_sets != expected:
                report.failures.append(
                    f"sphere case face link is not the full boundary: V={list(V.pairs)}"
                )
            else:
                counts = [0] * k
                for fs in face_sets:
                    counts[len(fs) - 1] += 1
                if tuple(counts) != boundary_simplex(k).f_vector:
                    report.failures.append(
                        f"sphere case face counts mismatch: V={list(V.pairs)}"
                    )
            if is_graph:
                report.iso_checks += 1
                _check_coface_model(K, omega, V, dl, budget, report.failures)

        if is_graph:
            report.one_cycle_checks += 1
            cycles = simple_cycles(V, cycle_budget)
            seen: dict[Pair, int] = {}
            for c in cycles:
                for a, b in zip(c.sigmas, c.taus):
                    seen[Pair(a, b)] = seen.get(Pair(a, b), 0) + 1
            offenders = [p for p, n in seen.items() if n > 1]
            if offenders:
                report.failures.append(
                    f"pair in more than one simple cycle: V={list(V.pairs)}, {offenders}"
                )
    return report


def ground_check(
    C: SimplicialComplex, k: int, r: int
) -> tuple[bool, Optional[Simplex]]:
    """Whether C contains a k-simplex every vertex of C fails to be adjacent
    to at most r vertices of (a vertex does not count against itself).
    Returns the first witness in canonical order when one exists."""
    edges = {s for s in C.simplices if len(s) == 2}

    def adjacent(a: int, b: int) -> bool:
        return tuple(sorted((a, b))) in edges

    for candidate in C.simplices_of_dim(k):
        ok = True
        for v in C.vertices:
            misses = sum(1 for w in candidate if w != v and not adjacent(v, w))
            if misses > r:
                ok = False
                break
        if ok:
            return True, candidate
    return False, None
