"""Tutte convex embeddings, greedy and weak greedy routing, and tree-weight bounds."""

from .bounds import (
    BoundsAnalyzer,
    BoundsReport,
    certify_ratio,
    check_chain,
    check_lemma3,
    check_lemma7,
    check_lemma8,
    check_lmstub,
    check_theorem3,
    full_report,
)
from .generators import cube, generate, grid_triangulated, prism, standard_corpus, wheel
from .graph import (
    FaceStructure,
    Graph,
    GraphError,
    dump_graph,
    load_graph,
    validate_faces,
    validate_three_connected,
)
from .routing import (
    BetaProfile,
    BetaProfiler,
    GreedyRouter,
    MonotoneRun,
    RoutePath,
    WeakGreedyTree,
    beta_max,
    beta_s,
    beta_st,
    build_weak_tree,
    decompose_path,
    greedy_route,
    path_bound_evaluator,
    run_bound_evaluators,
    weak_reachable,
    weak_route,
)
from .trees import TreeWeightSummary, embedding_metrics, emst_weight, max_spanning_tree_weight, mst_weight
from .tutte import ConvexityReport, Embedding, TutteEmbedder, energy, tutte_embed, validate_embedding

__version__ = "0.1.0"
