"""Biographies of numbers.

A biography of a digit string tallies its digits: position i holds the
number of occurrences of digit i. This package recognises strings that
describe themselves, iterates the shortest- and longest-biography maps to
their cycles, classifies the seeds for which iteration breaks down, and
searches for pairs of strings that are biographies of each other.

The HTTP layer lives in ``numbio.service`` and the command line in
``numbio.cli``; both are thin fronts over the functions exported here.
"""

from .biography import BiographyFailure, biographies, cls, cv, is_biography
from .digits import (
    DIGITS,
    CountVector,
    EmptyInputError,
    InvalidDigitError,
    NumbioError,
    canonical_key,
    count_vector,
    digit_sum,
    is_biographable,
    is_legitimate,
    max_digit,
    parse,
)
from .dynamics import (
    CLS_TWO_CYCLE,
    CV_SIX_CYCLE,
    CV_TWO_CYCLE,
    KNOWN_CYCLES,
    SeedClassification,
    SeedNotInfinite,
    StepBudgetExceeded,
    Trajectory,
    Verdict,
    VerificationReport,
    canonical_cycle,
    check_cls_zeroes,
    check_height_descent,
    check_repdigit_bound,
    classify_seed,
    cls_trajectory,
    cv_trajectory,
    height,
    trajectory,
    verification_rows,
    verify_cls_cycles,
    verify_cv_cycles,
    verify_cycles,
)
from .graphs import ReachGraph, build_reach_graph, render_dot
from .praise import (
    PraiseProperties,
    PraisingPair,
    check_praise_properties,
    find_praising_pairs,
    is_mutually_praising,
)
from .selfdesc import (
    StructuralFacts,
    check_structural_facts,
    enumerate_autobiographical,
    is_autobiographical,
)

__version__ = "0.1.0"

__all__ = [
    "BiographyFailure",
    "CLS_TWO_CYCLE",
    "CV_SIX_CYCLE",
    "CV_TWO_CYCLE",
    "CountVector",
    "DIGITS",
    "EmptyInputError",
    "InvalidDigitError",
    "KNOWN_CYCLES",
    "NumbioError",
    "PraiseProperties",
    "PraisingPair",
    "ReachGraph",
    "SeedClassification",
    "SeedNotInfinite",
    "StepBudgetExceeded",
    "StructuralFacts",
    "Trajectory",
    "Verdict",
    "VerificationReport",
    "biographies",
    "build_reach_graph",
    "canonical_cycle",
    "canonical_key",
    "check_cls_zeroes",
    "check_height_descent",
    "check_praise_properties",
    "check_repdigit_bound",
    "check_structural_facts",
    "classify_seed",
    "cls",
    "cls_trajectory",
    "count_vector",
    "cv",
    "cv_trajectory",
    "digit_sum",
    "enumerate_autobiographical",
    "find_praising_pairs",
    "height",
    "is_autobiographical",
    "is_biographable",
    "is_biography",
    "is_legitimate",
    "is_mutually_praising",
    "max_digit",
    "parse",
    "render_dot",
    "trajectory",
    "verification_rows",
    "verify_cls_cycles",
    "verify_cv_cycles",
    "verify_cycles",
]
