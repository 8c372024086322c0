"""Connected coalition numbers of small graphs.

A connected coalition in a connected graph pairs two disjoint vertex sets,
neither a connected dominating set on its own, whose union is one.  The
connected coalition number CC(G) is the largest number of parts in a vertex
partition where every part either is a connected dominating set by itself or
forms a connected coalition with some other part.  This package computes
CC(G) exactly on small graphs, decides CC(G) = n and CC(G) = n - 1 in
polynomial time, tests membership in the peel family characterising
CC(G) = 0, and verifies the structural theorems behind those routines over
exhaustive corpora.
"""

from .domination import (
    PARTITION_GUARD_DEFAULT,
    cds_table,
    connected_domatic_number,
    gamma_c,
    is_connected_dominating_set,
    is_dominating_set,
    shrink_to_minimal_cds,
)
from .errors import (
    CoalitionExpansionError,
    CoalitionsError,
    GraphFormatError,
    GuardExceededError,
    PreconditionError,
)
from .family import PeelTrace, in_family_f, replay_peel_trace
from .graphs import (
    Graph,
    build_graph,
    corona,
    emit_edgelist,
    emit_graph6,
    enumerate_labeled_graphs,
    full_vertices,
    generate,
    induced_subgraph,
    is_connected,
    is_corona_of_k1,
    is_tree,
    iter_graph6_lines,
    join,
    parse_edgelist,
    parse_graph6,
)
from .matrices import (
    Decision,
    EdgeDominationMatrix,
    IncidenceMatrix,
    check_cc_equals_n,
    check_cc_equals_n_minus_1,
    edge_domination_matrix,
    incidence_matrix,
)
from .oracle import (
    CoalitionGraph,
    cc_number,
    cc_partition_search,
    coalition_graph,
    expand_domatic_to_cc_partition,
    forms_connected_coalition,
    is_cc_partition,
)
from .verify import (
    THEOREMS,
    VerifyReport,
    benchmark_check_n_scaling,
    corona_corpus,
    cross_validate,
    default_corpus,
    replay_counterexample,
    run_theorem_suite,
    tree_corpus,
)

__version__ = "0.1.0"

__all__ = [
    "CoalitionExpansionError",
    "CoalitionGraph",
    "CoalitionsError",
    "Decision",
    "EdgeDominationMatrix",
    "Graph",
    "GraphFormatError",
    "GuardExceededError",
    "IncidenceMatrix",
    "PARTITION_GUARD_DEFAULT",
    "PeelTrace",
    "PreconditionError",
    "THEOREMS",
    "VerifyReport",
    "benchmark_check_n_scaling",
    "build_graph",
    "cc_number",
    "cc_partition_search",
    "cds_table",
    "check_cc_equals_n",
    "check_cc_equals_n_minus_1",
    "coalition_graph",
    "connected_domatic_number",
    "corona",
    "corona_corpus",
    "cross_validate",
    "default_corpus",
    "edge_domination_matrix",
    "emit_edgelist",
    "emit_graph6",
    "enumerate_labeled_graphs",
    "expand_domatic_to_cc_partition",
    "forms_connected_coalition",
    "full_vertices",
    "gamma_c",
    "generate",
    "in_family_f",
    "incidence_matrix",
    "induced_subgraph",
    "is_cc_partition",
    "is_connected",
    "is_connected_dominating_set",
    "is_corona_of_k1",
    "is_dominating_set",
    "is_tree",
    "iter_graph6_lines",
    "join",
    "parse_edgelist",
    "parse_graph6",
    "replay_counterexample",
    "replay_peel_trace",
    "run_theorem_suite",
    "shrink_to_minimal_cds",
    "tree_corpus",
]
