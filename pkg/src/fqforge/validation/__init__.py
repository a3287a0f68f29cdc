from .oracles import (
    all_vectors,
    brute_force_quotient,
    codes_of,
    combination_count,
    ideal_elements,
    members_by_variety,
)
from .report import ReportBuilder, VerificationReport, summarize
from .verifiers import (
    CORRESPONDENCE,
    NULLSTELLENSATZ,
    PRODUCT_SUM,
    QUOTIENT,
    RABINOWITSCH,
    RADICAL,
    STATEMENTS,
    WEAK_NULLSTELLENSATZ,
    ZERO_FUNCTION,
    default_membership,
    derive_rng,
    random_ideal,
    random_polynomial,
    verify_all,
    verify_correspondence,
    verify_nullstellensatz,
    verify_product_sum_identities,
    verify_quotient,
    verify_rabinowitsch,
    verify_radical,
    verify_weak,
    verify_zero_function,
)

__all__ = [
    "all_vectors",
    "brute_force_quotient",
    "codes_of",
    "combination_count",
    "ideal_elements",
    "members_by_variety",
    "ReportBuilder",
    "VerificationReport",
    "summarize",
    "CORRESPONDENCE",
    "NULLSTELLENSATZ",
    "PRODUCT_SUM",
    "QUOTIENT",
    "RABINOWITSCH",
    "RADICAL",
    "STATEMENTS",
    "WEAK_NULLSTELLENSATZ",
    "ZERO_FUNCTION",
    "default_membership",
    "derive_rng",
    "random_ideal",
    "random_polynomial",
    "verify_all",
    "verify_correspondence",
    "verify_nullstellensatz",
    "verify_product_sum_identities",
    "verify_quotient",
    "verify_rabinowitsch",
    "verify_radical",
    "verify_weak",
    "verify_zero_function",
]
