"""Odd-length regular continued fractions of a/b and their digit statistics."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactmath import CoprimePair, DomainError, require_coprime


@dataclass(frozen=True)
class ContinuedFraction:
    """Partial quotients of ``[0; a_1, ..., a_n]`` with ``n`` odd."""

    digits: tuple[int, ...]

    def __post_init__(self):
        if not self.digits or len(self.digits) % 2 == 0:
            raise DomainError(f"expected an odd number of digits, got {len(self.digits)}")
        if any(d < 1 for d in self.digits):
            raise DomainError(f"digits must be positive: {self.digits}")

    def __len__(self):
        return len(self.digits)

    @property
    def alt_sum(self) -> int:
        return sum(d if j % 2 == 0 else -d for j, d in enumerate(self.digits))

    @property
    def digit_sum(self) -> int:
        return sum(self.digits)


def euclid_digits(a: int, b: int) -> list[int]:
    """Raw partial quotients of a/b for 0 < a < b (no length normalisation)."""
    digits = []
    while a:
        q, r = divmod(b, a)
        digits.append(q)
        b, a = a, r
    return digits


def cf_expand(a: int, b: int) -> ContinuedFraction:
    if not 0 < a < b:
        raise DomainError(f"need 0 < a < b, got ({a}, {b})")
    require_coprime(a, b)
    digits = euclid_digits(a, b)
    if len(digits) % 2 == 0:
        if digits[-1] > 1:
            digits[-1] -= 1
            digits.append(1)
        else:
            # last digit 1: fold it into its neighbour instead of creating a 0
            digits.pop()
            digits[-1] += 1
    return ContinuedFraction(tuple(digits))


def cf_eval(cf: ContinuedFraction) -> CoprimePair:
    """Evaluate ``[0; digits]`` back to the pair (a, b)."""
    num, den = 0, 1
    for d in reversed(cf.digits):
        # x <- 1 / (d + x)
        num, den = den, d * den + num
    x = Fraction(num, den)
    return CoprimePair(x.numerator, x.denominator)


def _reduced(a: int, b: int) -> int | None:
    require_coprime(a, b)
    if b == 1:
        return None
    return a % b


def alt_sum(a: int, b: int) -> int:
    """T(a, b); ``a`` is reduced mod ``b`` first and T(., 1) is 0."""
    r = _reduced(a, b)
    return 0 if r is None else cf_expand(r, b).alt_sum


def digit_sum(a: int, b: int) -> int:
    """D(a, b) with the same reduction and b = 1 convention as :func:`alt_sum`."""
    r = _reduced(a, b)
    return 0 if r is None else cf_expand(r, b).digit_sum
