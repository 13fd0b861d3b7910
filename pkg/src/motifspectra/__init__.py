"""Superimposed block-model graphs and higher-order spectral clustering.

The package covers the full pipeline: sampling dyadic + 3-uniform
superimposed graphs, building observed and generative triangle-motif
adjacency matrices, spectral embeddings and k-means, misclustering
evaluation against ground truth, density/weight estimators, and a
reproducible Monte Carlo experiment harness with a CLI.
"""

from .estimators import (
    BlockRateEstimates,
    TradeoffReport,
    estimate_block_params,
    estimate_delta,
    estimate_m,
    tradeoff_decision,
)
from .evaluation import (
    ConcentrationNormalizers,
    concentration_ratio,
    misclustered_count,
    misclustering_rate,
    normalizers,
    spectral_norm,
)
from .generators import (
    GrowthWindowReport,
    ProbabilityProvider,
    block_provider,
    check_growth_window,
    constant_provider,
    gen_balanced_assignment,
    gen_hypergraph_3uniform,
    gen_inhomogeneous,
    gen_nonuniform_hypergraph_sbm,
    gen_sbm,
    gen_supsbm,
    growth_window_report,
)
from .graph_model import (
    BlockParams,
    CommunityAssignment,
    InvalidInputError,
    InvalidParamsError,
    SolverFailureError,
    SuperimposedGraph,
    UndefinedEstimateError,
    degree_vector,
    multiplicity_matrix,
    simple_projection,
)
from .motif import (
    TriangleDecomposition,
    TriangleDiscrepancy,
    decompose_triangles,
    expected_AE2,
    expected_AE3,
    expected_AT2,
    lambda_min_AE3,
    lambda_min_AT2,
    triangle_count_discrepancy,
    triangle_motif_generative,
    triangle_motif_observed,
)
from .spectral import (
    METHOD_NAMES,
    ClusterMethod,
    EigenResult,
    base_matrix,
    cluster,
    cluster_matrix,
    embedding,
    embedding_from_matrix,
    kmeans,
    named_method,
    normalized_laplacian,
    regularized_laplacian,
    row_normalize,
    top_k_abs_eigenpairs,
    weighted_hyperedge_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # model
    "BlockParams",
    "CommunityAssignment",
    "SuperimposedGraph",
    "multiplicity_matrix",
    "simple_projection",
    "degree_vector",
    # errors
    "InvalidInputError",
    "InvalidParamsError",
    "SolverFailureError",
    "UndefinedEstimateError",
    # generators
    "gen_balanced_assignment",
    "gen_sbm",
    "gen_hypergraph_3uniform",
    "gen_supsbm",
    "gen_nonuniform_hypergraph_sbm",
    "gen_inhomogeneous",
    "ProbabilityProvider",
    "constant_provider",
    "block_provider",
    "GrowthWindowReport",
    "growth_window_report",
    "check_growth_window",
    # motif
    "TriangleDecomposition",
    "TriangleDiscrepancy",
    "triangle_motif_observed",
    "triangle_motif_generative",
    "decompose_triangles",
    "triangle_count_discrepancy",
    "expected_AE2",
    "expected_AT2",
    "expected_AE3",
    "lambda_min_AT2",
    "lambda_min_AE3",
    # spectral
    "EigenResult",
    "top_k_abs_eigenpairs",
    "normalized_laplacian",
    "regularized_laplacian",
    "row_normalize",
    "weighted_hyperedge_matrix",
    "kmeans",
    "ClusterMethod",
    "METHOD_NAMES",
    "named_method",
    "base_matrix",
    "embedding",
    "embedding_from_matrix",
    "cluster",
    "cluster_matrix",
    # evaluation
    "misclustering_rate",
    "misclustered_count",
    "spectral_norm",
    "concentration_ratio",
    "ConcentrationNormalizers",
    "normalizers",
    # estimators
    "estimate_delta",
    "estimate_block_params",
    "BlockRateEstimates",
    "estimate_m",
    "TradeoffReport",
    "tradeoff_decision",
]
