"""Benchmark graphs with a prescribed number of Hamiltonian cycles.

The package builds directed broken crown graphs (5n-9 vertices, exactly k
Hamiltonian cycles for any n >= k >= 1), converts them to undirected
instances by vertex splitting, and ships an exact enumeration oracle that
verifies every construction at desk scale. Wheel and generalized Petersen
fixtures with known counts cross-check the oracle.
"""

from .errors import (
    BrokenCrownError,
    DimensionMismatch,
    InvalidParameter,
    MalformedCycle,
    MissingArc,
    NotContractible,
    ParseError,
    PropertyViolation,
)
from .families import (
    BrokenCrown,
    BrokenCrownSpec,
    Crown,
    CrownAttachment,
    HubRange,
    HubSpec,
    RemovalPolicy,
    attach_hub,
    build_broken_crown,
    build_crown,
    build_gp2,
    build_path_hub,
    build_wheel,
    hub_range,
)
from .formats import (
    Family,
    InstanceMetadata,
    ParsedInstance,
    graph_to_json,
    parse,
    write_directed_arclist,
    write_hcp_tsplib,
)
from .graphs import (
    DirectedGraph,
    SmoothResult,
    UndirectedGraph,
    remove_arcs,
    smooth_pair,
    smoothable,
    underlying_degree,
    underlying_graph,
)
from .hamilton import (
    CycleReport,
    LabelAnalysis,
    analyze_labels,
    count_hc_directed,
    count_hc_undirected,
    with_label_usage,
)
from .karp import KarpMapping, lift_cycle, to_undirected_karp

__version__ = "0.1.0"

__all__ = [
    "BrokenCrown",
    "BrokenCrownError",
    "BrokenCrownSpec",
    "Crown",
    "CrownAttachment",
    "CycleReport",
    "DimensionMismatch",
    "DirectedGraph",
    "Family",
    "HubRange",
    "HubSpec",
    "InstanceMetadata",
    "InvalidParameter",
    "KarpMapping",
    "LabelAnalysis",
    "MalformedCycle",
    "MissingArc",
    "NotContractible",
    "ParseError",
    "ParsedInstance",
    "PropertyViolation",
    "RemovalPolicy",
    "SmoothResult",
    "UndirectedGraph",
    "analyze_labels",
    "attach_hub",
    "build_broken_crown",
    "build_crown",
    "build_gp2",
    "build_path_hub",
    "build_wheel",
    "count_hc_directed",
    "count_hc_undirected",
    "graph_to_json",
    "hub_range",
    "lift_cycle",
    "parse",
    "remove_arcs",
    "smooth_pair",
    "smoothable",
    "to_undirected_karp",
    "underlying_degree",
    "underlying_graph",
    "with_label_usage",
    "write_directed_arclist",
    "write_hcp_tsplib",
]
