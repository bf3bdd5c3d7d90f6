"""Well-ordered series over countable ordinals below epsilon_0."""
from .bijections import (Enumeration, OrdinalBijection, canonical_enumeration, compose_to,
                         image_mask, image_membership, pair, parse_bijection, perturb,
                         position_in_image, unpair)
from .engine import (Converged, DominationCertificate, DominationViolation, EvalBudget,
                     Reason, SplitOutcome, SumOutcome, Unresolved, abs_converges,
                     dominated_compare, partials_along, split_sum, sum_series)
from .hyperseq import (Hypersequence, IndexOutOfDomain, IndicatorMask, InvalidParameter,
                       TailBound, UnknownFamily, custom, custom_natural, make_family, mask,
                       norm_series, parse_series, restrict, term_at, zero_series)
from .notation import OrdinalDepthError, OrdinalSyntaxError, parse, render
from .ordinal import (OMEGA, ONE, ZERO, Order, Ordinal, OrdinalKind, add, classify, compare,
                      fundamental_sequence, left_difference, mul, omega_pow, predecessor)
from .rearrangement import (VerificationReport, Verdict, rearrange_from_omega,
                            rearrange_general, rearrange_to_omega, verify_invariance)
from .space import SCALAR, DimensionMismatch, RealScalar, RealVector, axpy, norm, vector

__version__ = "0.1.0"

__all__ = [
    "abs_converges", "add", "axpy", "canonical_enumeration", "classify", "compare",
    "compose_to", "Converged", "custom", "custom_natural", "DimensionMismatch",
    "dominated_compare", "DominationCertificate", "DominationViolation", "Enumeration",
    "EvalBudget", "fundamental_sequence", "Hypersequence", "image_mask", "image_membership",
    "IndexOutOfDomain", "IndicatorMask", "InvalidParameter", "left_difference", "make_family",
    "mask", "mul", "norm", "norm_series", "OMEGA", "omega_pow", "ONE", "Order", "Ordinal",
    "OrdinalBijection", "OrdinalDepthError", "OrdinalKind", "OrdinalSyntaxError", "pair",
    "parse", "parse_bijection", "parse_series", "partials_along", "perturb",
    "position_in_image", "predecessor", "RealScalar", "RealVector", "rearrange_from_omega",
    "rearrange_general", "rearrange_to_omega", "Reason", "render", "restrict", "SCALAR",
    "split_sum", "SplitOutcome", "sum_series", "SumOutcome", "TailBound", "term_at",
    "UnknownFamily", "unpair", "Unresolved", "vector", "Verdict", "VerificationReport",
    "verify_invariance", "ZERO", "zero_series",
]
