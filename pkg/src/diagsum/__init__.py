"""Doubly stochastic matrices with constant restricted diagonal sums.

Exact decision, certification, and construction tools built on Fractions.
"""

from .assignment import (
    DiagonalCertificate,
    certificate_holds,
    diagonal_width,
    extreme_diagonal_sums,
    is_rcds_matrix,
    width_upper_bound,
)
from .constructors import (
    ZigZagSpec,
    class1,
    corner_block,
    derangement_rcds,
    gale_ryser,
    regular_rcds,
    star_rcds,
    tridiagonal_rcds,
    two_by_two_block,
    uniform,
    zigzag,
)
from .matrix import (
    ConvergenceError,
    RatMatrix,
    diagonal_sum,
    format_matrix,
    is_doubly_stochastic,
    parse_matrix,
    sinkhorn_balance,
    support,
)
from .oracle import brute_diagonal_stats, check_symmetric_diagonals, enumerate_diagonals
from .pattern import Pattern, format_pattern, parse_pattern
from .permanent import gray_graph_pattern, hat_matrix, is_cps, permanent
from .potentials import (
    Potentials,
    RcdsDecision,
    build_signless_laplacian,
    decide_rcds_pattern,
    solve_potentials,
    symmetrize_rcds,
)
from .search import SearchConfig, discover, random_pattern
from .structure import (
    NoDiagonalError,
    NotFullyIndecomposableError,
    find_support_diagonal,
    is_fully_indecomposable,
    max_matching,
)

__version__ = "0.1.0"
