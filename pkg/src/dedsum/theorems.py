"""Executable forms of the congruences relating s(a, b), I(a, b), T and D.

Every ``check_*`` function returns a bool for a single input; the sweep
driver in :mod:`dedsum.verify` runs them over ranges.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .confrac import alt_sum, cf_expand, digit_sum
from .dedekind import dedekind_sum_bhk, dedekind_sum_def, mu
from .exactmath import (
    ConsistencyError,
    DomainError,
    in_multiple_of,
    jacobi,
    mod_inverse,
    require_coprime,
)
from .permutation import inversions_fast

LADDER_STEPS = (8, 4, 2, 1)


def ladder(x: Fraction) -> int | None:
    """Largest m in {1, 2, 4, 8} with x in mZ, or None."""
    for m in LADDER_STEPS:
        if in_multiple_of(x, m):
            return m
    return None


def jabuka(a1: int, a2: int, b: int) -> bool:
    return ((a1 * a2 - 1) * (a1 - a2)) % b == 0


def cond_8Z(a1: int, a2: int, b: int) -> bool:
    """(a1 - a2)(b - 1)(b + a1 a2 - 1) == 4b(a2 mu(b, a1) - a1 mu(b, a2))  (mod 8b).

    Note the swapped arguments: mu is taken with modulus a1 (resp. a2).
    """
    require_coprime(a1, b)
    require_coprime(a2, b)
    lhs = (a1 - a2) * (b - 1) * (b + a1 * a2 - 1)
    rhs = 4 * b * (a2 * mu(b, a1) - a1 * mu(b, a2))
    return (lhs - rhs) % (8 * b) == 0


@dataclass(frozen=True)
class NecCondReport:
    a1: int
    a2: int
    b: int
    inversions_mod_2b: bool
    three_s_in_2Z: bool
    cond_c: bool

    @property
    def agree(self) -> bool:
        return self.inversions_mod_2b == self.three_s_in_2Z == self.cond_c


def check_necCond_equivalence(a1: int, a2: int, b: int) -> NecCondReport:
    require_coprime(a1, b)
    require_coprime(a2, b)
    i1, i2 = inversions_fast(a1, b), inversions_fast(a2, b)
    d = 3 * (dedekind_sum_bhk(a1, b).value - dedekind_sum_bhk(a2, b).value)
    return NecCondReport(
        a1, a2, b,
        inversions_mod_2b=(i1 - i2) % (2 * b) == 0,
        three_s_in_2Z=in_multiple_of(d, 2),
        cond_c=cond_8Z(a1, a2, b),
    )


@dataclass(frozen=True)
class PairClassification:
    a1: int
    a2: int
    b: int
    s1: Fraction
    s2: Fraction
    delta12s: Fraction
    ladder: int | None
    equal: bool
    cond_c: bool
    jabuka: bool

    def __post_init__(self):
        if self.equal and self.ladder != 8:
            raise ConsistencyError(f"equal sums but ladder={self.ladder}: {self}")
        if (self.ladder is not None) != self.jabuka:
            raise ConsistencyError(f"12*delta in Z disagrees with b | (a1a2-1)(a1-a2): {self}")
        if (self.ladder == 8) != self.cond_c:
            raise ConsistencyError(f"12*delta in 8Z disagrees with the mod 8b criterion: {self}")


def classify_pair(a1: int, a2: int, b: int, s1: Fraction | None = None,
                  s2: Fraction | None = None) -> PairClassification:
    """Classify 12s(a1, b) - 12s(a2, b); precomputed sums may be passed in."""
    require_coprime(a1, b)
    require_coprime(a2, b)
    if s1 is None:
        s1 = dedekind_sum_bhk(a1, b).value
    if s2 is None:
        s2 = dedekind_sum_bhk(a2, b).value
    delta = 12 * (s1 - s2)
    return PairClassification(
        a1, a2, b, s1, s2, delta,
        ladder=ladder(delta),
        equal=delta == 0,
        cond_c=cond_8Z(a1, a2, b),
        jabuka=jabuka(a1, a2, b),
    )


def _lower_residue(a: int, b: int) -> None:
    if not 0 < a < b:
        raise DomainError(f"need 0 < a < b, got ({a}, {b})")
    require_coprime(a, b)


def check_altsum_mod8(a: int, b: int) -> bool:
    """b T(a, b) == -4 mu(a, b) + b^2 + 2 - a - a*  (mod 8)."""
    _lower_residue(a, b)
    star = mod_inverse(a, b)
    return (b * alt_sum(a, b) - (-4 * mu(a, b) + b * b + 2 - a - star)) % 8 == 0


class GirstmairTag(enum.Enum):
    NOT_APPLICABLE = "NotApplicable"
    CASE_I = "Case_i"
    CASE_II = "Case_ii"


@dataclass(frozen=True)
class GirstmairCase:
    a: int
    b: int
    a_star: int
    k: int
    case_tag: GirstmairTag
    T_mod4: int
    predicted_mod4: int | None
    D_parity: int

    @property
    def holds(self) -> bool:
        if self.case_tag is GirstmairTag.NOT_APPLICABLE:
            return True
        if self.T_mod4 != self.predicted_mod4:
            return False
        return self.case_tag is GirstmairTag.CASE_I or self.D_parity == 1


def check_girstmair(a: int, b: int) -> GirstmairCase:
    """T(a, b) mod 4 and D(a, b) parity when a and a* are both even.

    With a a* = 1 + k b: if a or a* is 2 mod 4 then T == (b - k)/2, if both
    are 0 mod 4 then T == (k - b)/2 (mod 4) and D is odd.
    """
    _lower_residue(a, b)
    star = mod_inverse(a, b)
    k, rem = divmod(a * star - 1, b)
    assert rem == 0
    cf = cf_expand(a, b)
    if a % 2 or star % 2:
        tag, predicted = GirstmairTag.NOT_APPLICABLE, None
    else:
        if a % 4 == 0 and star % 4 == 0:
            tag, num = GirstmairTag.CASE_II, k - b
        else:
            tag, num = GirstmairTag.CASE_I, b - k
        if num % 2:
            raise ConsistencyError(f"(b - k)/2 not integral for ({a}, {b}), k={k}")
        predicted = (num // 2) % 4
    return GirstmairCase(a, b, star, k, tag, cf.alt_sum % 4, predicted, cf.digit_sum % 2)


# Single-input forms of the classical results, used by the sweeps.

def check_zolotarev(a: int, b: int) -> bool:
    """(-1)^I(a, b) == (a/b) for odd b."""
    sign = -1 if inversions_fast(a, b) % 2 else 1
    return sign == jacobi(a, b)


def check_meyer(a: int, b: int) -> bool:
    # s from the defining sum, so this is independent of the BHK route
    s = dedekind_sum_def(a, b).value
    return inversions_fast(a, b) == -3 * b * s + Fraction((b - 1) * (b - 2), 4)


def check_salie(a: int, b: int) -> bool:
    require_coprime(a, b)
    lhs = 4 * a * inversions_fast(a, b) + 4 * b * inversions_fast(b, a)
    return lhs == (a - 1) * (b - 1) * (a + b - 1)


def check_bhk(a: int, b: int) -> bool:
    return dedekind_sum_def(a, b).value == dedekind_sum_bhk(a, b).value


def check_lerch(a: int, b: int) -> bool:
    return inversions_fast(a, b) % 2 == mu(a, b) % 2
