"""Exact d-distance p-packing domination on small graphs.

The package computes ``gamma_d^p`` exactly, builds and recognizes the
extremal families (coronas, the zeta_1 trees, the leaf-extension families),
enumerates unlabeled trees and connected bipartite graphs, and runs
exhaustive checks of the extremal bounds over those universes.
"""

from .canon import (
    canonical_graph,
    canonical_tree,
    graph_canonical_form,
    is_isomorphic,
    tree_canonical_form,
    tree_from_code,
)
from .constructions import (
    CoronaDecomposition,
    FamilyTag,
    build,
    complete,
    complete_bipartite,
    corona,
    counterexample_gnkd,
    cycle,
    d_subdivision,
    double_star,
    family_B_d,
    family_F_d,
    family_Fprime_d,
    family_T_d,
    joined_subdivided_stars,
    leafy_corona,
    path,
    star,
    subdivided_star,
    zeta1_members,
)
from .enumeration import (
    EnumerationSpace,
    all_bipartite,
    all_connected_bipartite,
    all_trees,
    shard,
    stream,
)
from .errors import (
    ConfigError,
    GraphDisconnected,
    GraphError,
    NotATree,
    NotBipartite,
    OrderTooLarge,
    OrderTooSmall,
    ParameterOutOfRange,
    ParseError,
)
from .graph import INF, Graph
from .harness import (
    EqualitySetComparison,
    TheoremReport,
    check_conjecture,
    check_cor22,
    check_cor43_44_45,
    check_lemma34,
    check_partition_theorem,
    check_prop32,
    check_section4_intro,
    check_thm33,
    check_thm35,
    check_thm41,
    check_thm42,
    run_suite,
)
from .io import from_edgelist, from_graph6, parse_graph, to_edgelist, to_graph6
from .recognizers import (
    in_B_d,
    in_F_d,
    in_Fprime_d,
    in_T_d,
    in_zeta1,
    is_corona,
    lemma34_check,
    lemma34_hypotheses,
    support_profile,
    verify_corona_decomposition,
)
from .solver import (
    BoundSheet,
    DominationQuery,
    GammaWitness,
    LevelPartition,
    bound_sheet,
    gamma,
    gamma_bruteforce,
    is_d_dominating,
    is_p_packing,
    level_partition,
    verify_partition,
)

__version__ = "0.1.0"
