"""spiderfind: constructive (2,l)-spider search in directed graphs.

Any directed graph with minimum out-degree at least 2l contains l
vertex-disjoint directed 2-paths into a common root (a (2,l)-spider);
`find_spider` constructs one and `verify_spider` checks certificates
independently.  Generators, an exhaustive small-instance oracle, and a
CLI round out the package.
"""
from .digraph import (
    DegreeProfile,
    Digraph,
    degree_profile,
    extract_exact_outdegree_subgraph,
    gen_complete_digraph,
    gen_random_out_regular,
    gen_regular_tournament,
    min_out_degree,
    parse_edge_list,
    write_edge_list,
)
from .edge_coloring import (
    EdgeColoring,
    ExtensionGraph,
    build_extension_graph,
    largest_color_class,
    truncate_for_coloring,
    vizing_color,
)
from .errors import (
    AveragingBoundViolated,
    DegreeBoundViolated,
    EdgeListError,
    EmptyA,
    ExtensionExhausted,
    InstanceTooLarge,
    InsufficientOutDegree,
    InternalInvariantError,
    PreconditionOutDegree,
    QBoundViolated,
    SpiderFormatError,
)
from .extenders import (
    ExtenderPool,
    ExtensionSet,
    extension_set,
    greedy_extend,
    is_i_extender,
    strong_extender_pool,
)
from .oracle import (
    DEFAULT_EXHAUSTIVE_CAP,
    OracleResult,
    SearchOutcome,
    has_spider_bruteforce,
    max_spider_at_root,
    search_spider_free,
)
from .root_selection import (
    ABPartition,
    QPath,
    QPaths,
    RootScore,
    RootScores,
    compute_q_paths,
    partition_by_in_degree,
    score_roots,
    select_root,
)
from .solver import (
    ProofCheck,
    SolveOutcome,
    SolveTrace,
    explain_trace,
    find_spider,
)
from .spider import (
    Spider,
    ViolationKind,
    ViolationReport,
    format_spider,
    parse_spider,
    spider_order,
    verify_spider,
)

__version__ = "0.1.0"
