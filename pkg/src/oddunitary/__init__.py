"""Exact odd unitary groups over commutative rings with a pseudoinvolution.

The package builds the Vaserstein-type matrices ``L(v)`` and ``L(v)*``,
factors them into elementary transvections, and checks isometry, form
parameter congruence and the conjugation into the generators ``T_{+-1}``
by exact arithmetic.
"""
from .errors import (
    BadCoordinate,
    BadIndex,
    ConditionUnsolvable,
    DimensionMismatch,
    IncompatibleInvolution,
    InternalInvariantViolation,
    InvalidFormParameter,
    InvalidPhi,
    NotAUnit,
    OddUnitaryError,
    ParseError,
    RingMismatch,
)
from .matrix import ElementaryWord, Matrix, elem_matrix, word_product
from .report import Check, Report
from .rings import Ring, Scalar, check_pseudoinvolution, make_ring, solve_bar_difference, standard_rings
from .space import (
    HYPERBOLIC_FIRST,
    MODULE_FIRST,
    BasisOrder,
    HeisElem,
    SpaceConfig,
    heis,
    heis_add,
    heis_act,
    heis_trace,
    in_L_ev,
    in_L_max,
    in_L_min,
    inner,
)
from .transvections import (
    TransvectionSpec,
    congruent_mod_Lmax,
    epsilon,
    esd_matrix,
    esd_validate,
    isometry_check,
    root_transvection,
    t_minus1,
    t_plus1,
)
from .vaserstein import (
    ConjugationResult,
    VVector,
    build_alpha,
    build_beta,
    build_L,
    build_L_star,
    build_P,
    condition_D,
    condition_E,
    conj_L_to_transvection,
    conj_Lstar_to_transvection,
    factor_L,
    factor_L_star,
    transvection_to_vaserstein,
)

__version__ = "0.1.0"
