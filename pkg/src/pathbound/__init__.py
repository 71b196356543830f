"""Connected dominating sets with bounded induced-path structure.

The package has three layers:

- :mod:`pathbound.cds` builds a minimal connected dominating set whose
  induced subgraph contains no long induced path, by repeatedly swapping a
  private neighbor in and a redundant vertex out under a weight order.
- :mod:`pathbound.hypercolor` 2-colors hypergraphs whose incidence graphs
  contain no induced 7-vertex path, returning verified colorings or
  checkable infeasibility certificates.
- :mod:`pathbound.oracle` holds brute-force reference procedures that make
  both guarantees testable on small instances.

File formats, generators, and the command line live in
:mod:`pathbound.formats`, :mod:`pathbound.generate`, and
:mod:`pathbound.cli`; acceptance suites in :mod:`pathbound.corpus`.
"""

from .cds import (
    CdsState,
    NotCdsError,
    RunTrace,
    Substitution,
    TraceRecord,
    bounded_cds,
    cds_state,
    is_induced_path,
    minimal_cds,
    non_cutting,
    poset_less,
    private_neighbor,
    set_weight,
    substitute,
    vertex_weight,
)
from .formats import (
    ParseError,
    load_graph,
    load_hypergraph,
    parse_graph,
    parse_hypergraph,
    render_graph,
    render_hypergraph,
)
from .generate import gen_cycle, gen_gnp, gen_hyper, gen_path, gen_star, generate
from .graphs import (
    CdsStatus,
    DisconnectedGraphError,
    Graph,
    GraphError,
    InternalInvariantError,
    build_graph,
    cds_status,
    induced_subgraph,
)
from .hypercolor import (
    Certificate,
    Colorable,
    ColoringCheck,
    Hypergraph,
    HypergraphError,
    IncidenceView,
    Infeasible,
    PreconditionViolated,
    build_hypergraph,
    clutter_reduce,
    dominating_proper_subset,
    find_universal_edge,
    incidence_graph,
    two_color_p7,
    verify_coloring,
)
from .oracle import (
    CapExceededError,
    CheckReport,
    Counterexample,
    PathWitness,
    Shape,
    brute_2color,
    check_cds_characterization,
    check_minimum_cds_structure,
    enumerate_minimum_cds,
    has_induced_cycle,
    has_induced_path,
    iso_to_path_or_cycle,
    longest_induced_path,
    min_k_pfree,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "CdsState",
    "CdsStatus",
    "Certificate",
    "CheckReport",
    "Colorable",
    "ColoringCheck",
    "Counterexample",
    "DisconnectedGraphError",
    "Graph",
    "GraphError",
    "Hypergraph",
    "HypergraphError",
    "IncidenceView",
    "Infeasible",
    "InternalInvariantError",
    "NotCdsError",
    "ParseError",
    "PathWitness",
    "PreconditionViolated",
    "RunTrace",
    "Shape",
    "Substitution",
    "TraceRecord",
    "bounded_cds",
    "brute_2color",
    "build_graph",
    "build_hypergraph",
    "cds_state",
    "cds_status",
    "check_cds_characterization",
    "check_minimum_cds_structure",
    "clutter_reduce",
    "dominating_proper_subset",
    "enumerate_minimum_cds",
    "find_universal_edge",
    "gen_cycle",
    "gen_gnp",
    "gen_hyper",
    "gen_path",
    "gen_star",
    "generate",
    "has_induced_cycle",
    "has_induced_path",
    "incidence_graph",
    "induced_subgraph",
    "is_induced_path",
    "iso_to_path_or_cycle",
    "load_graph",
    "load_hypergraph",
    "longest_induced_path",
    "min_k_pfree",
    "minimal_cds",
    "non_cutting",
    "parse_graph",
    "parse_hypergraph",
    "poset_less",
    "private_neighbor",
    "render_graph",
    "render_hypergraph",
    "set_weight",
    "substitute",
    "two_color_p7",
    "verify_coloring",
    "vertex_weight",
]
