"""Kolchin dimension polynomials of finite subsets of N_0^m, in exact arithmetic."""

from .diffdim import (
    DifferentialSystem,
    MinimalCandidate,
    classify_minimal_candidate,
    equations_family,
    ex2_exponents,
    single_equation_poly,
    standard_coefficient_report,
    system_dimension_polynomial,
    triangular_family,
)
from .errors import (
    CrossCheckError,
    InputError,
    KolchinError,
    MethodDisagreement,
    OracleBudgetExceeded,
    ResourceGuard,
    SubsetBlowup,
    VerificationMismatch,
)
from .lattice import (
    ExponentSet,
    colon,
    count_free_points,
    count_table,
    dimension_polynomial,
    dimension_polynomial_ie,
    dimension_polynomial_rec,
    minimal_elements,
    stabilization_bound,
)
from .macaulay import (
    Order,
    constants_of,
    is_kolchin,
    macaulay_constants,
    macaulay_nondecreasing,
    minimizing_coefficients,
    reconstruct,
    sit_compare,
)
from .numpoly import NumPoly, binom_eval, evaluate, from_samples, nabla, shift

__version__ = "0.1.0"
