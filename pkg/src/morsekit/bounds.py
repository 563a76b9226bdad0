"""Closed-form connectivity bounds driven by the two Hasse measurements
h (edge count) and d (maximum degree), plus the experimental probe for the
higher-connectivity conjecture.

Conventions: "(-1)-connected" is glossed as "non-empty" and "0-connected" as
"connected"; bound functions return None when d = 0 or h = 0, where no bound
is claimed.  Connectivity claims are keyed to the constructive k-simplex
criterion (via maximum matching), not only the threshold arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict
from typing import Iterable, Optional

from .complexes import SimplicialComplex, Simplex
from .errors import BudgetExceededError
from .hasse import build_hasse, max_matching_size
from .homology import GF2, RATIONAL, reduced_betti
from .morse_complexes import DEFAULT_SIMPLEX_BUDGET, morse_complex


def connectivity_gloss(bound: Optional[int]) -> str:
    if bound is None:
        return "no bound claimed"
    if bound < 0:
        return "non-empty"
    if bound == 0:
        return "connected"
    if bound == 1:
        return "simply connected"
    return f"{bound}-connected"


def gm_connectivity_bound(h: int, d: int) -> Optional[int]:
    """floor((h-1)/(2d)) - 1, the generalized-Morse-complex bound; None when
    h = 0 or d = 0 (no statement applies)."""
    if h < 0 or d < 0:
        raise ValueError("h and d must be non-negative")
    if h == 0 or d == 0:
        return None
    return (h - 1) // (2 * d) - 1


def grounded_bound(k: int) -> int:
    """floor(k/2) - 1: connectivity from the existence of a k-simplex."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return k // 2 - 1


def graph_bound(edge_count: int, d: int) -> Optional[int]:
    """floor((|E|-1)/d) - 1 for graphs; agrees with gm_connectivity_bound(2|E|, d)
    by the odd-numerator parity argument."""
    if edge_count < 0 or d < 0:
        raise ValueError("edge count and d must be non-negative")
    if edge_count == 0 or d == 0:
        return None
    return (edge_count - 1) // d - 1


def relative_graph_bound(h: int, d: int) -> Optional[int]:
    """floor((h-1)/(2d)) - 1 for a relative graph Hasse diagram.

    When d = 1 the Morse and generalized Morse complexes coincide, so the
    bound applies to both directly; the formula itself is unchanged.
    """
    return gm_connectivity_bound(h, d)


@dataclass(frozen=True)
class ConnectivityReport:
    complex_id: str
    dim: int
    h: int
    d: int
    edge_count: Optional[int]  # |E| when the input is a graph
    max_matching: int
    gm_top_simplex_dim: Optional[int]
    bound_gm: Optional[int]
    bound_gm_gloss: str
    bound_m_graph: Optional[int]
    bound_m_graph_gloss: str
    connected_claim: bool
    simply_connected_claim: bool
    grounding: Optional[tuple[int, int]]
    special_case: Optional[str]
    morse_complex_empty: bool

    def as_dict(self) -> dict:
        d = asdict(self)
        if d["grounding"] is not None:
            d["grounding"] = list(d["grounding"])
        return d


def _special_case(K: SimplicialComplex) -> Optional[str]:
    # on 3 vertices these f-vectors determine the complex up to isomorphism
    if K.f_vector == (3, 3, 1):
        return "2-simplex"
    if K.f_vector == (3, 3):
        return "boundary-2-simplex"
    return None


def connectivity_report(
    K: SimplicialComplex,
    omega: Iterable[Simplex] = frozenset(),
    complex_id: str = "input",
) -> ConnectivityReport:
    """Evaluate every applicable closed-form bound on one complex.

    Connectivity and simple-connectivity claims are asserted via the
    2-simplex / 4-simplex criteria checked constructively through the
    maximum matching of the Hasse diagram (absolute case), or via the
    relative graph bound when the input is a graph.
    """
    omega = frozenset(omega)
    H = build_hasse(K, omega)
    m = H.metrics
    mm = max_matching_size(H)
    is_graph = K.dim <= 1
    edge_count = K.f_vector[1] if is_graph and K.dim == 1 and not omega else None

    bound_gm = gm_connectivity_bound(m.h, m.d)
    bound_m_graph = None
    if is_graph:
        if edge_count is not None:
            bound_m_graph = graph_bound(edge_count, m.d)
        else:
            bound_m_graph = relative_graph_bound(m.h, m.d)

    if not omega:
        connected = mm >= 3  # GM contains a 2-simplex
        simply = mm >= 5  # GM contains a 4-simplex
    elif is_graph:
        rgb = relative_graph_bound(m.h, m.d)
        connected = rgb is not None and rgb >= 0
        simply = rgb is not None and rgb >= 1
    else:
        connected = simply = False  # no proved criterion applies

    grounding = (mm - 1, 2) if mm >= 1 else None

    return ConnectivityReport(
        complex_id=complex_id,
        dim=K.dim,
        h=m.h,
        d=m.d,
        edge_count=edge_count,
        max_matching=mm,
        gm_top_simplex_dim=mm - 1 if mm >= 1 else None,
        bound_gm=bound_gm,
        bound_gm_gloss=connectivity_gloss(bound_gm),
        bound_m_graph=bound_m_graph,
        bound_m_graph_gloss=connectivity_gloss(bound_m_graph),
        connected_claim=connected,
        simply_connected_claim=simply,
        grounding=grounding,
        special_case=_special_case(K),
        morse_complex_empty=m.h == 0,
    )


def conjecture_probe(
    K: SimplicialComplex,
    m: int,
    budget: int = DEFAULT_SIMPLEX_BUDGET,
    homology_budget: Optional[int] = None,
) -> dict:
    """EXPERIMENTAL probe of the higher-connectivity conjecture: does
    h >= 2*m*d + 1 hold, and how far does the reduced homology of the Morse
    complex vanish?  Vanishing homology is necessary-but-not-sufficient
    evidence; this never claims a proof."""
    if m < 1:
        raise ValueError("m must be >= 1")
    metrics = build_hasse(K).metrics
    hypothesis = metrics.d >= 1 and metrics.h >= 2 * m * metrics.d + 1
    out = {
        "m": m,
        "h": metrics.h,
        "d": metrics.d,
        "hypothesis_holds": hypothesis,
        "predicted_connectivity": m - 1 if hypothesis else None,
        "note": (
            "EXPERIMENTAL: vanishing reduced homology over GF(2) and Q is a "
            "necessary condition for connectivity only; no proof is claimed"
        ),
    }
    if not hypothesis:
        out["status"] = "not-applicable"
        return out
    try:
        mc = morse_complex(K, budget=budget).complex
        betti2 = reduced_betti(mc, GF2, homology_budget)
        bettiq = reduced_betti(mc, RATIONAL, homology_budget)
    except BudgetExceededError as exc:
        out["status"] = "budget-exceeded"
        out["budget_detail"] = str(exc)
        return out
    vanish = -1
    for b2, bq in zip(betti2.reduced, bettiq.reduced):
        if b2 or bq:
            break
        vanish += 1
    out["reduced_betti_gf2"] = list(betti2.reduced)
    out["reduced_betti_q"] = list(bettiq.reduced)
    out["measured_vanishing_range"] = vanish
    out["consistent"] = vanish >= m - 1 or len(betti2.reduced) - 1 < m - 1
    out["status"] = "computed"
    return out
