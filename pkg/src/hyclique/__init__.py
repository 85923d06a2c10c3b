"""Exact computational toolkit for n-uniform hypergraph cliques.

Checks structural invariants of pairwise-intersecting uniform families
(chromatic number in {2,3}, covering number at most n, the two tied at
chromatic number 3), certifies restricted-intersection families by exact
polynomial rank, replays the greedy extraction chain with per-step
verification, evaluates the edge-count bound catalog in exact arithmetic,
and runs desk-scale extremal searches.
"""

from .algebra import (
    MultilinearPoly,
    OracleResult,
    RankCertificate,
    evaluation_oracle,
    multilinearize_product,
    rank_certificate,
)
from .bounds import (
    AmplificationResult,
    BoundReport,
    Spectrum,
    Theorem4FiniteResult,
    a_value,
    amplification_check,
    bound_report,
    factorial_sum_lower,
    spectrum,
    subset_bound,
    subset_counting_bound,
    theorem4_finite,
)
from .chi_tau import (
    ColoringResult,
    CoverResult,
    chromatic_number,
    clique_three_coloring,
    covering_number,
    is_proper_coloring,
    vertex_bound_holds,
)
from .core import (
    CliqueVerdict,
    EdgeStats,
    Hypergraph,
    ParseResult,
    edge_stats,
    is_clique,
    parse_hypergraph,
    render_hypergraph,
)
from .errors import HycliqueError, InputError, NotAClique, PropertyViolation
from .extraction import (
    Exhausted,
    ExtractionStep,
    ExtractionTrace,
    HighDegree,
    MinimalK,
    OutsidePair,
    amplification_chain_holds,
    amplify,
    high_degree_or_outside_pair,
    minimal_k,
    run_extraction,
    threshold_rule,
)
from .search import (
    SearchBudget,
    SearchRecord,
    SubsetBoundReport,
    extremal_search,
    verify_subset_bound,
)

__version__ = "0.1.0"
