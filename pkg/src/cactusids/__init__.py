"""Exact counting and verification of independent dominating sets in cactus chains.

Three independent routes compute every count: a brute-force oracle over the
built graphs, integer transfer systems, and rational generating functions.
The verify module cross-checks them against the bundled registry of published
claims and reports every discrepancy with a witness.
"""

from .chains import (
    ChainSpec,
    Family,
    LabeledChain,
    build_chain,
    expected_vertex_count,
    is_cactus,
)
from .genfunc import (
    GFLinearSystem,
    GrowthEstimate,
    NoRealDominantRootError,
    SingularSystemError,
    derived_gf,
    derived_recurrence,
    derived_state_gfs,
    dominant_growth_rate,
    gf_coefficients,
    gf_from_recurrence,
    paper_gf,
    paper_gf_system,
    paper_state_gfs,
    recurrence_from_gf,
    solve_gf_system,
    transfer_gf_system,
)
from .graphs import (
    BoundaryCounts,
    Graph,
    OracleLimitError,
    closed_neighborhood,
    count_boundary_classes,
    count_ids,
    enumerate_mis,
    independent_domination_number,
    is_independent,
    is_independent_dominating,
    is_isomorphic,
    vertex_set,
    vertices_of,
)
from .polynomials import Polynomial, RationalGF, format_gf, poly_arith, poly_gcd
from .recurrences import (
    LinearRecurrence,
    TransferSystem,
    eval_recurrence,
    paper_recurrence,
    paper_transfer_system,
    run_transfer,
    state_trajectory,
)
from .verify import (
    Claim,
    ClaimStatus,
    VerificationReport,
    all_claims,
    check_defect_formula,
    check_gamma_formula,
    cross_check_family,
    errata_report,
    verify_all,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryCounts",
    "ChainSpec",
    "Claim",
    "ClaimStatus",
    "Family",
    "GFLinearSystem",
    "Graph",
    "GrowthEstimate",
    "LabeledChain",
    "LinearRecurrence",
    "NoRealDominantRootError",
    "OracleLimitError",
    "Polynomial",
    "RationalGF",
    "SingularSystemError",
    "TransferSystem",
    "VerificationReport",
    "all_claims",
    "build_chain",
    "check_defect_formula",
    "check_gamma_formula",
    "closed_neighborhood",
    "count_boundary_classes",
    "count_ids",
    "cross_check_family",
    "derived_gf",
    "derived_recurrence",
    "derived_state_gfs",
    "dominant_growth_rate",
    "enumerate_mis",
    "errata_report",
    "eval_recurrence",
    "expected_vertex_count",
    "format_gf",
    "gf_coefficients",
    "gf_from_recurrence",
    "independent_domination_number",
    "is_cactus",
    "is_independent",
    "is_independent_dominating",
    "is_isomorphic",
    "paper_gf",
    "paper_gf_system",
    "paper_recurrence",
    "paper_state_gfs",
    "paper_transfer_system",
    "poly_arith",
    "poly_gcd",
    "recurrence_from_gf",
    "run_transfer",
    "solve_gf_system",
    "state_trajectory",
    "transfer_gf_system",
    "vertex_set",
    "vertices_of",
    "verify_all",
]
