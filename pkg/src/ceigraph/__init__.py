"""Connective eccentricity index: exact invariants, extremal constructions, exhaustive verification."""

__version__ = "0.1.0"

from .canon import canonical_form
from .constructions import (
    ConstructionParams,
    Family,
    ParameterError,
    build_G_nkd,
    build_H_nkd,
    build_M_ndelta,
    build_S_nalpha,
    enumerate_H_family,
)
from .graph import (
    Graph,
    GraphError,
    add_edge,
    complete_graph,
    copies,
    cycle_graph,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    is_connected,
    join,
    path_graph,
    remove_edge,
    sequential_join,
    star_graph,
)
from .graph6 import Graph6Error
from .graph6 import decode as graph6_decode
from .graph6 import encode as graph6_encode
from .invariants import (
    ClassKind,
    ClassSpec,
    Connectivity,
    InvariantSummary,
    Rational,
    cei,
    degrees,
    diameter,
    eccentricities,
    eci,
    independence_number,
    is_member,
    radius,
    summarize,
    vertex_connectivity,
)
from .search import (
    Lemma1Report,
    SearchReport,
    Theorem,
    VerificationReport,
    Verdict,
    check_lemma1,
    enumerate_class,
    enumerate_connected,
    max_cei_search,
    verify_theorem1,
    verify_theorem2,
    verify_theorem3,
)
