"""Bounds and constructions for dual codes cut out of plane-curve quotients.

The pipeline: a curve preset or config yields a monomial basis and its
product order table; pair classification and budgeted subset searches turn
that table into minimum-distance and generalized-weight bounds; puncturing
by a design value yields improved codes; brute-force oracles keep all of
it honest on small instances.
"""

from .bounds import (
    BoundMethod,
    CodeBound,
    FimResult,
    GhwResult,
    SearchConfig,
    advisory_bound,
    code_bound,
    feng_rao,
    fim_bound,
    fim_ghw_bound,
    ghw_bound,
    improved_code,
    max_mu_set,
)
from .codes import CodeSpec, standard_code
from .curve import CurveConfigError, CurveSpec, load_curve, preset_curve
from .mu import PairStatus, check_mu, classify_pairs, pair_status
from .oracle import (
    Subspace,
    m_of_subspace,
    max_mu_exhaustive,
    support_size,
    true_ghw,
    true_min_distance,
)
from .rho import (
    BasisTriple,
    RhoTable,
    m_of_vector,
    rho_of_vector,
    rho_table_algebraic,
    rho_table_generic,
)
from .search import ExactSearchUnavailable, SearchResult

__version__ = "0.1.0"

__all__ = [
    "BasisTriple",
    "BoundMethod",
    "CodeBound",
    "CodeSpec",
    "CurveConfigError",
    "CurveSpec",
    "ExactSearchUnavailable",
    "FimResult",
    "GhwResult",
    "PairStatus",
    "RhoTable",
    "SearchConfig",
    "SearchResult",
    "Subspace",
    "advisory_bound",
    "check_mu",
    "classify_pairs",
    "code_bound",
    "feng_rao",
    "fim_bound",
    "fim_ghw_bound",
    "ghw_bound",
    "improved_code",
    "load_curve",
    "m_of_subspace",
    "m_of_vector",
    "max_mu_exhaustive",
    "max_mu_set",
    "pair_status",
    "preset_curve",
    "rho_of_vector",
    "rho_table_algebraic",
    "rho_table_generic",
    "standard_code",
    "support_size",
    "true_ghw",
    "true_min_distance",
    "__version__",
]
