"""Dedekind sums, by definition and by the Barkan-Hickerson-Knuth formula."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .confrac import alt_sum
from .exactmath import ConsistencyError, DomainError, floor, jacobi, mod_inverse, require_coprime

HALF = Fraction(1, 2)
# b**3 stays below 2**63 up to here, so int64 sums cannot overflow
_INT64_LIMIT = 1 << 20


@dataclass(frozen=True)
class DedekindSumValue:
    value: Fraction
    a: int
    b: int

    def __post_init__(self):
        if (6 * self.b * self.value).denominator != 1:
            raise ConsistencyError(f"6*b*s({self.a},{self.b}) = {6 * self.b * self.value} not integral")


def sawtooth(x) -> Fraction:
    """((x)): x - floor(x) - 1/2 off the integers, 0 on them."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - HALF


def _sawtooth_twice(r: int, b: int) -> int:
    # 2b * ((r/b)) for 0 <= r < b, kept integral so the sum below stays in Z
    return 0 if r == 0 else 2 * r - b


def dedekind_sum_def(a: int, b: int) -> DedekindSumValue:
    """s(a, b) straight from the defining sum; O(b), used as the oracle.

    Every summand ((ak/b))((k/b)) has denominator dividing 4b^2, so the sum
    is accumulated over the integers ``(2b((ak/b))) * (2b((k/b)))`` and
    divided once at the end.  The k = b term vanishes.
    """
    require_coprime(a, b)
    if b <= _INT64_LIMIT:
        k = np.arange(1, b, dtype=np.int64)
        r = (k * (a % b)) % b
        # r is never 0 for 0 < k < b since gcd(a, b) = 1
        total = int(np.dot(2 * r - b, 2 * k - b))
    else:
        total = 0
        r = 0
        for k in range(1, b):
            r = (r + a) % b
            total += _sawtooth_twice(r, b) * (2 * k - b)
    return DedekindSumValue(Fraction(total, 4 * b * b), a, b)


def dedekind_sum_bhk(a: int, b: int) -> DedekindSumValue:
    """s(a, b) = (T(a, b) + (a + a*)/b - 3) / 12 in O(log b)."""
    require_coprime(a, b)
    if b == 1:
        return DedekindSumValue(Fraction(0), a, b)
    r = a % b
    star = mod_inverse(r, b)
    twelve_s = alt_sum(r, b) + Fraction(r + star, b) - 3
    return DedekindSumValue(twelve_s / 12, a, b)


def dedekind_sum(a: int, b: int, method: str = "bhk") -> Fraction:
    if method == "bhk":
        return dedekind_sum_bhk(a, b).value
    if method == "def":
        return dedekind_sum_def(a, b).value
    raise DomainError(f"unknown method {method!r}")


def mu(a: int, b: int) -> int:
    """Lerch's parity term: congruent to I(a, b) mod 2.

    ``(1 - (a/b)) / 2`` for odd ``b`` and ``(a - 1)(b + a - 1) / 4`` for
    even ``b``.  ``a`` is not reduced in the even branch.
    """
    require_coprime(a, b)
    if b % 2:
        return (1 - jacobi(a, b)) // 2
    q, rem = divmod((a - 1) * (b + a - 1), 4)
    assert rem == 0, (a, b)
    return q
