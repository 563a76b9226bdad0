"""Shared fixtures and independent oracles for the test suite.

The oracles here are deliberately naive re-implementations from the
definitions (subset enumeration, dense row reduction, walk enumeration), so
they share no code with the library paths they check.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from morsekit.complexes import SimplicialComplex
from morsekit.vector_fields import DiscreteVectorField


def is_matching(edge_subset) -> bool:
    seen = set()
    for u, v in edge_subset:
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def brute_matchings(edges) -> set[frozenset]:
    """Every non-empty matching of an edge list, by subset enumeration.

    Exponential; intended for graphs with at most ~16 edges.
    """
    edges = list(edges)
    out = set()
    for r in range(1, len(edges) + 1):
        for subset in itertools.combinations(edges, r):
            if is_matching(subset):
                out.add(frozenset(subset))
    return out


def brute_max_matching(edges) -> int:
    edges = list(edges)
    best = 0
    for r in range(len(edges), 0, -1):
        if any(is_matching(c) for c in itertools.combinations(edges, r)):
            best = r
            break
    return best


def brute_simple_cycles(V: DiscreteVectorField) -> set[tuple]:
    """All simple V-cycles up to cyclic rotation, by walk enumeration.

    Walks every closed alternating path of length up to the number of pairs
    and keeps the simple ones; canonicalized by least rotation.  Exponential,
    intended for fields with at most ~8 pairs.
    """
    matched = {p.sigma: p.tau for p in V.pairs}

    def successors(sigma):
        tau = matched[sigma]
        for i in range(len(tau)):
            f = tau[:i] + tau[i + 1 :]
            if f != sigma and f in matched and len(f) == len(sigma):
                yield f

    found = set()

    def walk(start, path):
        for nxt in successors(path[-1]):
            if nxt == start and len(path) >= 2:
                rotations = [
                    tuple(path[i:] + path[:i]) for i in range(len(path))
                ]
                found.add(min(rotations))
            elif nxt not in path and len(path) < len(V.pairs):
                walk(start, path + [nxt])

    for sigma in matched:
        walk(sigma, [sigma])
    return found


def _dense_rank_gf2(matrix: list[list[int]]) -> int:
    m = [row[:] for row in matrix]
    rank = 0
    cols = len(m[0]) if m else 0
    row = 0
    for col in range(cols):
        pivot = next((r for r in range(row, len(m)) if m[r][col] % 2), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        for r in range(len(m)):
            if r != row and m[r][col] % 2:
                m[r] = [(a + b) % 2 for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
    return rank


def _dense_rank_q(matrix: list[list[Fraction]]) -> int:
    m = [row[:] for row in matrix]
    rank = 0
    cols = len(m[0]) if m else 0
    row = 0
    for col in range(cols):
        pivot = next((r for r in range(row, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
    return rank


def naive_reduced_betti(K: SimplicialComplex, field: str) -> tuple[int, ...]:
    """Reduced Betti numbers by dense row reduction straight from the
    definition, including the augmentation map as the 0-th boundary."""
    if not K.simplices:
        return ()
    by_dim = [sorted(s for s in K.simplices if len(s) == k + 1) for k in range(K.dim + 1)]

    def boundary_matrix(k: int) -> list[list[Fraction]]:
        if k == 0:
            return [[Fraction(1)] * len(by_dim[0])]  # augmentation
        rows = {s: i for i, s in enumerate(by_dim[k - 1])}
        matrix = [[Fraction(0)] * len(by_dim[k]) for _ in rows]
        for j, s in enumerate(by_dim[k]):
            for i in range(len(s)):
                face = s[:i] + s[i + 1 :]
                matrix[rows[face]][j] = Fraction((-1) ** i)
        return matrix

    ranks = []
    for k in range(K.dim + 1):
        m = boundary_matrix(k)
        if field == "gf2":
            ranks.append(_dense_rank_gf2([[int(x) for x in row] for row in m]))
        else:
            ranks.append(_dense_rank_q(m))
    ranks.append(0)
    f = K.f_vector
    return tuple(f[k] - ranks[k] - ranks[k + 1] for k in range(K.dim + 1))


def padded(betti: tuple[int, ...], length: int) -> tuple[int, ...]:
    """Right-pad a Betti vector with zeros for fixed-length comparisons."""
    assert len(betti) <= length
    return betti + (0,) * (length - len(betti))


@pytest.fixture(scope="session")
def corpus():
    from morsekit.corpus import corpus_manifest

    return corpus_manifest()
