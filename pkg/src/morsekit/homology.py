"""Exact reduced simplicial homology over GF(2) and over the rationals.

This is the verification oracle for every connectivity claim in the package:
m-connectedness is only ever certified through its necessary condition, the
vanishing of reduced homology, and every report that uses it says so.

GF(2) ranks use big-integer bitset elimination; rational ranks use sparse
exact Fraction elimination.  Integral Smith normal form is deliberately out
of scope: the verified targets are wedges of spheres, whose homology is free,
and a GF(2)/Q disagreement is surfaced as a torsion signal instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .complexes import Simplex, SimplicialComplex
from .errors import BudgetExceededError, DomainError

GF2 = "gf2"
RATIONAL = "q"

DEFAULT_HOMOLOGY_BUDGET = {GF2: 40_000, RATIONAL: 2_500}


def euler_characteristic(K: SimplicialComplex) -> int:
    return K.euler_characteristic()


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers b~_0..b~_dim over one field, with the Euler
    identity cross-checked at construction time."""

    field: str
    reduced: tuple[int, ...]
    euler: int

    def __post_init__(self):
        if self.reduced:  # non-empty complex: chi = 1 + sum (-1)^k b~_k
            rhs = 1 + sum((-1) ** k * b for k, b in enumerate(self.reduced))
            if rhs != self.euler:
                raise AssertionError(
                    f"Euler identity violated: chi={self.euler}, betti={self.reduced}"
                )


def boundary_columns(
    K: SimplicialComplex, k: int
) -> tuple[list[Simplex], list[Simplex], list[list[tuple[int, int]]]]:
    """The k-th boundary matrix in sparse column form.

    Returns (rows, cols, columns) where columns[j] lists (row_index, sign)
    entries of the boundary of the j-th k-simplex.
    """
    rows = K.simplices_of_dim(k - 1)
    cols = K.simplices_of_dim(k)
    row_index = {s: i for i, s in enumerate(rows)}
    columns = []
    for s in cols:
        entries = []
        for i in range(len(s)):
            f = s[:i] + s[i + 1 :]
            entries.append((row_index[f], (-1) ** i))
        columns.append(entries)
    return rows, cols, columns


def _rank_gf2(columns: Iterable[int]) -> int:
    """Rank over GF(2) of columns given as bitmask integers."""
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        while col:
            low = col & -col
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = col
                rank += 1
                break
            col ^= piv
    return rank


def _rank_rational(columns: list[dict[int, Fraction]]) -> int:
    """Rank over Q by sparse Gaussian elimination with exact fractions."""
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for col in columns:
        col = dict(col)
        while col:
            r = min(col)
            piv = pivots.get(r)
            if piv is None:
                inv = 1 / col[r]
                pivots[r] = {rr: vv * inv for rr, vv in col.items()}
                rank += 1
                break
            factor = col[r]
            for rr, vv in piv.items():
                new = col.get(rr, Fraction(0)) - factor * vv
                if new:
                    col[rr] = new
                else:
                    col.pop(rr, None)
    return rank


def _boundary_rank(K: SimplicialComplex, k: int, field: str) -> int:
    rows, cols, columns = boundary_columns(K, k)
    if not rows or not cols:
        return 0
    if field == GF2:
        bitcols = []
        for entries in columns:
            mask = 0
            for r, _sign in entries:
                mask |= 1 << r
            bitcols.append(mask)
        return _rank_gf2(bitcols)
    return _rank_rational(
        [{r: Fraction(sign) for r, sign in entries} for entries in columns]
    )


def reduced_betti(
    K: SimplicialComplex,
    field: str = GF2,
    max_simplices: int | None = None,
) -> BettiVector:
    """Exact reduced Betti numbers of K over the chosen field.

    b~_k = dim ker(d_k) - rank(d_{k+1}), where d_0 is the augmentation map.
    """
    if field not in (GF2, RATIONAL):
        raise DomainError(f"unknown field {field!r}; use {GF2!r} or {RATIONAL!r}")
    budget = max_simplices if max_simplices is not None else DEFAULT_HOMOLOGY_BUDGET[field]
    if len(K) > budget:
        raise BudgetExceededError("homology matrix", len(K), budget)
    if not K.simplices:
        return BettiVector(field=field, reduced=(), euler=0)

    f = K.f_vector
    ranks = [1]  # rank of the augmentation map (c_0 >= 1 here)
    for k in range(1, K.dim + 1):
        ranks.append(_boundary_rank(K, k, field))
    ranks.append(0)  # d_{dim+1} = 0

    betti = tuple(f[k] - ranks[k] - ranks[k + 1] for k in range(K.dim + 1))
    return BettiVector(field=field, reduced=betti, euler=K.euler_characteristic())


def homological_connectivity(
    K: SimplicialComplex, max_simplices: int | None = None
) -> int:
    """Largest m with b~_i = 0 for all i <= m over both GF(2) and Q.

    Returns -2 for the empty complex and -1 for a disconnected non-empty
    complex.  A return value equal to dim(K) means all computed reduced
    homology vanishes (nothing beyond the top dimension is certified).
    """
    if not K.simplices:
        return -2
    gf2 = reduced_betti(K, GF2, max_simplices).reduced
    rat = reduced_betti(K, RATIONAL, max_simplices).reduced
    m = -1
    for b2, bq in zip(gf2, rat):
        if b2 or bq:
            break
        m += 1
    return m
