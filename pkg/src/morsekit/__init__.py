"""morsekit: Morse complexes of finite simplicial complexes.

Construction of (relative, generalized) Morse complexes, Hasse-diagram
measurements and the connectivity bounds they drive, descending-link
verification sweeps, and exact reduced homology over GF(2) and Q as the
verification oracle.
"""

__version__ = "0.1.0"

from .bounds import (
    ConnectivityReport,
    connectivity_report,
    conjecture_probe,
    gm_connectivity_bound,
    graph_bound,
    grounded_bound,
    relative_graph_bound,
)
from .complexes import (
    SimplicialComplex,
    Simplex,
    are_isomorphic,
    barycentric_subdivision,
    boundary_simplex,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    from_maximal,
    full_simplex,
    generate,
    hypercube_graph,
    hyperoctahedron,
    icosahedron_boundary,
    join,
    make_simplex,
    path_graph,
    skeleton,
)
from .errors import (
    BudgetExceededError,
    DomainError,
    FormanValidationError,
    MalformedInputError,
    MorsekitError,
    ParseError,
)
from .fileformat import emit_complex, parse_complex
from .hasse import (
    HasseDiagram,
    HasseMetrics,
    build_hasse,
    max_matching_size,
    metrics,
    verify_h_d_observation,
)
from .homology import (
    GF2,
    RATIONAL,
    BettiVector,
    euler_characteristic,
    homological_connectivity,
    reduced_betti,
)
from .morse_complexes import (
    MatchingComplexResult,
    generalized_morse_complex,
    matching_complex,
    morse_complex,
)
from .morse_theory import (
    DescendingLinkReport,
    descending_links,
    ground_check,
    sublevel_complex,
    verify_descending_link_lemmas,
)
from .vector_fields import (
    DiscreteVectorField,
    Pair,
    VCycle,
    compatible,
    flow_digraph,
    forman_function_from_acyclic,
    gradient_vector_field,
    is_acyclic,
    make_pair,
    phi,
    simple_cycles,
)
