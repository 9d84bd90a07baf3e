"""Perfect elimination orderings of symmetric matrices.

Decide whether a symmetric matrix admits a perfect elimination ordering,
construct one when it does, and extract a self-contained pair of weighted
chordless walks when it does not; plus checkers for the surrounding ordering
classes (ultrametrics, Robinson / interval / cocomparability orderings,
chordal graph powers, distance-preserving orderings).
"""

from .certificates import (
    Certificate,
    CertificateError,
    Forbidden,
    Ordering,
    certificate_is_valid,
    extract_certificate,
    format_certificate,
)
from .classes import (
    OrderingClassReport,
    PowerChordalityReport,
    PowerCorollaryReport,
    brute_force_class_recognition,
    check_power_corollary,
    classify,
    duchet_power_check,
    find_chordless_cycle,
    find_cocomparability_violation,
    find_distance_preservation_failure,
    find_interval_violation,
    find_robinson_violation,
    find_ultrametric_violation,
    is_chordal,
    is_cocomparability_ordering,
    is_distance_preserving_order,
    is_interval_ordering,
    is_robinson_ordering,
    is_ultrametric,
    mcs_order,
)
from .graphs import (
    Graph,
    WeightedGraph,
    bfs_distances,
    connected_components,
    graph_power,
    is_connected,
    weighted_distances,
)
from .matrix import (
    LevelDecomposition,
    MatrixFormatError,
    SymmetricMatrix,
    adjacency_matrix,
    disconnected_sentinel,
    format_value,
    graph_distance_matrix,
    level_decomposition,
    min_offdiag,
    parse_graph,
    parse_matrix,
    parse_value,
    reconstruction_holds,
    serialize_graph,
    serialize_matrix,
    shortest_path_matrix,
)
from .orderings import (
    LinearOrder,
    TripleViolation,
    all_peos_bruteforce,
    every_order_is_peo,
    find_peo_violation,
    find_simplicial,
    find_simplicial_violation,
    greedy_peo,
    is_peo,
    is_simplicial,
    peo_starting_at,
)
from .separation import (
    Separation,
    find_separation,
    minimal_ab_separator,
    property_p_holds,
    property_p_walk,
    separation_is_valid,
)
from .walks import (
    Walk,
    find_chordless_failure,
    find_self_contained_family_bruteforce,
    find_self_contained_pair_bruteforce,
    find_self_contained_walk_bruteforce,
    find_weighted_chordless_cycle,
    is_critical_walk,
    is_rooted,
    is_self_contained_family,
    is_weighted_chordless,
    is_weighted_chordless_cycle,
)

__version__ = "0.1.0"
