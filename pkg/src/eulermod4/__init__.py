"""Mod-4 cycle classification of Euler graphs, theorem checks and a graceful-labeling harness."""

from .classification import (
    ClassCounts,
    EpsilonClass,
    GracefulnessStatus,
    class_counts,
    class_size_congruence,
    classify,
    conjecture_predicate,
    cycle_spectrum,
    epsilon_class,
    rosa_golomb_status,
    verify_size_identity,
)
from .constructions import (
    Planting,
    book,
    build_construction,
    core_graph,
    cycle_graph,
    hypercube,
    parallel_paths,
    parse_construction,
    path_addition,
    plant,
    smallest_eps01,
    triangle_of_squares,
)
from .cycles import (
    Cycle,
    CycleDecomposition,
    count_edge_disjoint_paths,
    decomposition_census,
    edge_cycle_counts,
    edge_cycle_parities,
    enumerate_cycles,
    enumerate_decompositions,
    euler_circuit,
    peel_decomposition,
)
from .errors import EulerMod4Error
from .graceful import Labeling, SearchOutcome, SurveyOptions, search_graceful, survey, verify_graceful
from .graph import Graph, build_graph, is_bipartite, is_connected, is_eulerian, regular_degree
from .graphio import encode_graph6, parse_graph6, read_edge_list, read_graph6_stream
from .structure import (
    BlockProfile,
    CycleIntersection,
    biconnected_two_type_witness,
    blocks,
    combined_residue,
    has_degree_two_node,
    intersect_cycles,
    intersection_parity_report,
    is_planar,
)
from .theorems import SuiteConfig, analyze_graph, check_graph, run_suite

__version__ = "0.1.0"
