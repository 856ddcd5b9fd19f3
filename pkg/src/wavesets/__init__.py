"""Exact construction, verification and classification of MSF wavelet sets."""
from .errors import (
    DegenerateSlopeError,
    DomainError,
    MalformedInputError,
    MustSplitError,
    NotAWaveletSetError,
    NotClassifiableError,
    ValidationError,
    WaveletSetError,
)
from .exact_sets import (
    Domain,
    Interval,
    IntervalSet,
    MultiplicityProfile,
    as_rational,
    dyadic_profile,
    mod1_profile,
    normalize,
    split_at_zero,
    transform,
)
from .tiling import Verdict, verify_D_l2, verify_T, verify_h2, verify_l2, verify_mra, verify_wavelet
from .polygonal import Flavor, LatticeVertex, Polygonal, search_msf_minus, search_polygonals, slopes, validate
from .polygonal import build as build_polygonal
from .symmetric import ClassificationData, FamilyId, FamilyTag, build_family, build_from_data, classify
from .h2_enum import CaseId, H2Certificate, decompose, endpoints, enumerate_case, feasible_l
from .accumulate import build_base, build_lazy, check_equivalence, make_family, verify_truncated

__all__ = [
    "CaseId", "ClassificationData", "DegenerateSlopeError", "Domain", "DomainError", "FamilyId",
    "FamilyTag", "Flavor", "H2Certificate", "Interval", "IntervalSet", "LatticeVertex",
    "MalformedInputError", "MultiplicityProfile", "MustSplitError", "NotAWaveletSetError",
    "NotClassifiableError", "Polygonal", "ValidationError", "Verdict", "WaveletSetError",
    "as_rational", "build_base", "build_family", "build_from_data", "build_lazy", "build_polygonal",
    "check_equivalence", "classify", "decompose", "dyadic_profile", "endpoints", "enumerate_case",
    "feasible_l", "make_family", "mod1_profile", "normalize", "search_msf_minus",
    "search_polygonals", "slopes", "split_at_zero", "transform", "validate", "verify_D_l2",
    "verify_T", "verify_h2", "verify_l2", "verify_mra", "verify_truncated", "verify_wavelet",
]
