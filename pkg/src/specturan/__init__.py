"""specturan: a desk-scale workbench for spectral extremal graph theory.

Builds Turan and complete multipartite graphs, computes the largest
adjacency eigenvalue with certified error intervals, counts cliques,
joints, and books exactly, searches for K_r^+ embeddings, and checks the
hypotheses and conclusions of the spectral saturation theorems over
exhaustive small-graph scans, structured families, and seeded random
models.
"""

from .graph import (
    EdgeListError,
    Graph,
    PartSpec,
    complete_graph,
    graph_from_edge_mask,
    make_complete_multipartite,
    make_kr_plus,
    make_turan,
    make_turan_plus_edge,
    random_gnm,
    read_edge_list,
    read_edge_list_file,
    turan_part_sizes,
    write_edge_list,
    write_edge_list_file,
)
from .harness import (
    ExperimentConfig,
    ExperimentReport,
    run_exhaustive,
    run_experiment,
    run_family_sweep,
    run_random_hunt,
    run_tightness,
)
from .rng import SplitMix64
from .spectral import (
    SpectralComparison,
    SpectralEstimate,
    Verdict,
    compare_mu_exact_multipartite,
    compare_mu_to_threshold,
    compare_mu_to_turan,
    multipartite_mu_at_least,
    multipartite_mu_exact,
    spectral_radius,
    turan_mu_exact,
)
from .subgraph import (
    BookReport,
    CliqueCount,
    ColoringResult,
    Embedding,
    EmbeddingValidationError,
    JointReport,
    SearchResult,
    SearchStatus,
    book_size,
    clique_exists,
    count_cliques,
    find_complete_multipartite,
    find_kr_plus,
    is_r_partite,
    joint_size,
    validate_embedding,
)
from .theorems import (
    StabilityWitness,
    TheoremId,
    TheoremParams,
    TheoremVerdict,
    TriState,
    check_book_remark,
    check_edge_implies_spectral,
    check_fact_lekd,
    check_fact_lenslmm,
    check_fact_thv4,
    check_fact_tsize,
    check_spectral_turan,
    check_stability,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    find_stability_witness,
    floor_c_log_n,
    ceil_n_power,
    turan_edge_count,
)

__version__ = "0.1.0"
