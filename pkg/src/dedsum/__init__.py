"""Exact Dedekind sums, multiplier-permutation inversions and their congruences mod 8."""
from .confrac import ContinuedFraction, alt_sum, cf_eval, cf_expand, digit_sum
from .dedekind import DedekindSumValue, dedekind_sum, dedekind_sum_bhk, dedekind_sum_def, mu, sawtooth
from .exactmath import CoprimePair, ConsistencyError, DomainError, Rational, gcd, jacobi, mod_inverse
from .permutation import (
    MultiplierPermutation,
    inversions,
    inversions_fast,
    inversions_meyer,
    inversions_naive,
    perm_build,
)
from .theorems import (
    GirstmairCase,
    GirstmairTag,
    PairClassification,
    check_altsum_mod8,
    check_girstmair,
    check_necCond_equivalence,
    classify_pair,
    cond_8Z,
)
from .verify import THEOREMS, VerifyReport, scan, verify

__version__ = "0.1.0"
