"""The built-in corpus of example complexes driving the acceptance suite.

Every entry is small enough that its Hasse diagram and measurements are
instantly computable; matching-complex and homology computations on top of
the corpus are budget-guarded by the callers.
"""

from __future__ import annotations

from .complexes import (
    SimplicialComplex,
    barycentric_subdivision,
    boundary_simplex,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    full_simplex,
    hypercube_graph,
    hyperoctahedron,
    icosahedron_boundary,
    path_graph,
)


def corpus_manifest() -> dict[str, SimplicialComplex]:
    """Name -> complex, in a stable order."""
    corpus: dict[str, SimplicialComplex] = {}
    for n in range(1, 5):
        corpus[f"simplex-{n}"] = full_simplex(n)
    for n in range(2, 5):
        corpus[f"boundary-simplex-{n}"] = boundary_simplex(n)
    for n in range(1, 4):
        corpus[f"hyperoctahedron-{n}"] = hyperoctahedron(n)
    corpus["icosahedron"] = icosahedron_boundary()
    for n in range(3, 6):
        corpus[f"complete-{n}"] = complete_graph(n)
    for p in range(2, 5):
        for q in range(p, 5):
            corpus[f"bipartite-{p}-{q}"] = complete_bipartite(p, q)
    for n in range(3, 9):
        corpus[f"cycle-{n}"] = cycle_graph(n)
    for n in range(1, 4):
        corpus[f"hypercube-{n}"] = hypercube_graph(n)
    for n in range(1, 7):
        corpus[f"path-{n}"] = path_graph(n)
    sub = path_graph(1)
    for i in range(1, 4):
        sub = barycentric_subdivision(sub)
        corpus[f"subdivision-{i}"] = sub
    return corpus
