"""Macaulay dual spaces, eliminating dual spaces and embedded-point tests
for polynomial ideals at exact or approximate points."""

__version__ = "0.1.0"

from .dual import (
    DualFunctional,
    MacaulayMatrix,
    TruncatedDualSpace,
    apply_functional,
    contract,
    full_dual_zero_dim,
    initial_support,
    intersect_spaces,
    reduce_basis,
    sum_spaces,
    truncated_dual_completion,
    truncated_dual_direct,
)
from .elimination import (
    EliminatingDualSpace,
    colon_inclusion_check,
    eliminating_dual,
    ord_A,
    quotient_dual_truncated,
    quotient_eliminating_dual,
)
from .embedded import (
    EmbeddedVerdict,
    embedded_point_test,
    is_origin_embedded_in_curve,
    subspace_strictly_contains,
)
from .hilbert import (
    HilbertData,
    StaircaseReport,
    hilbert_function,
    homogeneous_membership,
    regularity_and_multiplicity,
    standard_monomials,
)
from .io import parse_polynomial, parse_system
from .linalg import RankPolicy
from .orders import OrderSpec, compare_monomials, initial_term
from .poly import Ideal, Polynomial, apply_linear_change, translate_to_point, truncate
from .estimators import (
    EliminatingDualSpaceEstimator,
    EmbeddedComponentDetector,
    LocalHilbertEstimator,
    TruncatedDualSpaceEstimator,
)
