"""Graph states from hub cluster operators, checked against a dense state-vector oracle."""
from .errors import CapacityError, CoverError, DomainError, GraphParseError, HubStateError
from .expansion import (
    ExpansionTerm,
    HubExpansion,
    build_state_via_hubs,
    expand_terms,
    reduction_report,
    seed_state,
    verify_theorem,
)
from .graph import (
    Edge,
    Graph,
    NeighborSet,
    incident_edges,
    neighborhood,
    parse_edge_list,
    quotient_edges,
    ring_graph,
    star_graph,
)
from .hubs import HubSet, greedy_cover, min_cover_exact, validate_cover
from .pauli import (
    GeneratorSet,
    PauliString,
    cluster_operator,
    commutes,
    cz_conjugate,
    ghz_generators,
    graph_generators,
    group_elements,
    h_conjugate,
    multiply,
    parse_pauli,
)
from .statevector import (
    StateVector,
    apply_cz,
    apply_h,
    apply_pauli,
    build_graph_state,
    ghz_state,
    is_stabilized,
    plus_state,
    states_equal,
)

__version__ = "0.1.0"
