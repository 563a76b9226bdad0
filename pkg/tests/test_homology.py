"""Exact reduced homology over GF(2) and the rationals."""

from __future__ import annotations

import pytest

from conftest import naive_reduced_betti

from morsekit.complexes import (
    EMPTY_COMPLEX,
    boundary_simplex,
    from_maximal,
    full_simplex,
    hyperoctahedron,
    join,
)
from morsekit.errors import BudgetExceededError, DomainError
from morsekit.homology import (
    GF2,
    RATIONAL,
    boundary_columns,
    euler_characteristic,
    homological_connectivity,
    reduced_betti,
)
from morsekit.morse_complexes import generalized_morse_complex, morse_complex


def test_boundary_of_boundary_is_zero():
    for K in (full_simplex(3), hyperoctahedron(2), boundary_simplex(3)):
        for k in range(2, K.dim + 1):
            rows, cols, columns = boundary_columns(K, k)
            rows_prev, _, columns_prev = boundary_columns(K, k - 1)
            # compose: apply d_{k-1} to each column of d_k and collect entries
            for entries in columns:
                acc: dict[int, int] = {}
                for r, sign in entries:
                    for rr, s2 in columns_prev[r]:
                        acc[rr] = acc.get(rr, 0) + sign * s2
                assert all(v == 0 for v in acc.values())


def test_sphere_betti_numbers():
    for n in (1, 2, 3):
        for field in (GF2, RATIONAL):
            b = reduced_betti(boundary_simplex(n + 1), field).reduced
            assert b == (0,) * n + (1,)


def test_morse_complex_betti_of_the_triangle_boundary():
    m = morse_complex(boundary_simplex(2)).complex
    assert reduced_betti(m, GF2).reduced == (0, 4)
    assert reduced_betti(m, RATIONAL).reduced == (0, 4)
    assert euler_characteristic(m) == -3


def test_gm_betti_of_the_triangle_boundary():
    gm = generalized_morse_complex(boundary_simplex(2)).complex
    assert reduced_betti(gm, GF2).reduced == (0, 2, 0)
    assert reduced_betti(gm, RATIONAL).reduced == (0, 2, 0)
    assert euler_characteristic(gm) == -1


def test_morse_complex_of_k4_is_a_wedge_of_two_spheres():
    from morsekit.complexes import complete_graph

    m = morse_complex(complete_graph(4)).complex
    b2 = reduced_betti(m, GF2).reduced
    bq = reduced_betti(m, RATIONAL).reduced
    assert b2 == bq
    assert b2[0] == b2[1] == 0
    assert b2[2] >= 1


def test_point_and_empty_conventions():
    point = full_simplex(0)
    assert euler_characteristic(point) == 1
    assert reduced_betti(point, GF2).reduced == (0,)
    assert reduced_betti(EMPTY_COMPLEX, GF2).reduced == ()
    assert homological_connectivity(EMPTY_COMPLEX) == -2


def test_disconnected_complex_reports_minus_one():
    s0 = from_maximal([(0,), (1,)])
    assert homological_connectivity(s0) == -1
    assert reduced_betti(s0, GF2).reduced == (1,)


def test_cone_has_full_vanishing_range():
    cone = join(full_simplex(0), boundary_simplex(2))
    assert homological_connectivity(cone) == cone.dim


def test_connectivity_of_spheres():
    assert homological_connectivity(boundary_simplex(3)) == 1
    assert homological_connectivity(boundary_simplex(2)) == 0


def test_unknown_field_is_rejected():
    with pytest.raises(DomainError):
        reduced_betti(full_simplex(1), "gf3")


def test_homology_budget_is_enforced():
    with pytest.raises(BudgetExceededError):
        reduced_betti(full_simplex(3), GF2, max_simplices=3)


def test_euler_identity_holds_by_construction(corpus):
    for K in corpus.values():
        if len(K) > 500:
            continue
        for field in (GF2, RATIONAL):
            bv = reduced_betti(K, field)
            assert bv.euler == K.euler_characteristic()


def test_agreement_with_the_dense_row_reduction_oracle(corpus):
    checked = 0
    for K in corpus.values():
        if not 1 <= len(K) <= 200:
            continue
        for field in (GF2, RATIONAL):
            assert reduced_betti(K, field).reduced == naive_reduced_betti(K, field)
        checked += 1
    assert checked >= 10


def test_oracle_agreement_on_morse_complexes():
    for K in (boundary_simplex(2), full_simplex(2)):
        m = morse_complex(K).complex
        gm = generalized_morse_complex(K).complex
        for C in (m, gm):
            for field in (GF2, RATIONAL):
                assert reduced_betti(C, field).reduced == naive_reduced_betti(C, field)


def test_fields_agree_on_wedge_of_spheres_targets():
    from morsekit.complexes import complete_graph, cycle_graph

    targets = [
        morse_complex(boundary_simplex(2)).complex,
        morse_complex(full_simplex(2)).complex,
        morse_complex(complete_graph(3)).complex,
        morse_complex(complete_graph(4)).complex,
        morse_complex(cycle_graph(5)).complex,
        morse_complex(cycle_graph(6)).complex,
    ]
    for C in targets:
        assert reduced_betti(C, GF2).reduced == reduced_betti(C, RATIONAL).reduced
