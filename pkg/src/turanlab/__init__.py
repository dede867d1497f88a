"""Turan numbers of edge blow-ups of trees.

Library plus CLI for computing the extremal edge counts ex(n, T^{p+1}) of
edge blow-ups of trees, building the conjectured extremal graphs, and
verifying the small cases exhaustively.
"""

from .blowup import BlowupResult, edge_blowup
from .canon import (
    CanonicalForm,
    automorphism_orbits,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    is_isomorphic,
)
from .constructions import ExtremalCandidate, build_candidates, build_h, build_h_prime
from .decomposition import (
    DecompositionFamily,
    FamilyMember,
    ForbiddenFamily,
    contains_family_member,
    decomposition_family,
    forbidden_family,
    vertex_split,
)
from .formulas import (
    Case,
    Prediction,
    classify,
    g_values,
    h_prime,
    h_value,
    predict,
    prediction_report,
    t_count,
)
from .graphio import (
    decode_edge_list,
    decode_graph6,
    encode_edge_list,
    encode_graph6,
    read_graph6_lines,
    to_dot,
)
from .graphs import (
    Graph,
    build_graph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    double_broom,
    empty_graph,
    induced_subgraph,
    join,
    matching_graph,
    path_graph,
    star_graph,
    turan_graph,
    turan_part_sizes,
)
from .search import (
    DEFAULT_NODE_BUDGET,
    SearchReport,
    brute_ex,
    extremal_witnesses,
    is_family_free,
    subgraph_contains,
)
from .trees import (
    Bipartition,
    DegreeStratum,
    TreeAnalysis,
    analyze_tree,
    bipartition,
    covering_number,
    degree_stratum,
    independence_number,
    independent_covering_number,
    matching_number,
)

__version__ = "0.1.0"
