"""Exact integer and rational helpers.

Rationals are :class:`fractions.Fraction` throughout; it is always stored in
lowest terms with a positive denominator, which is exactly the invariant the
rest of the package relies on.  Python integers are unbounded, so no width
cap is needed on any intermediate.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction


class DomainError(ValueError):
    """Input outside the domain of an operation (non-coprime, even modulus, ...)."""


class ConsistencyError(RuntimeError):
    """An identity that must hold for valid input failed; always a bug."""


def gcd(x: int, y: int) -> int:
    if x == 0 and y == 0:
        raise DomainError("gcd(0, 0) is undefined")
    x, y = abs(x), abs(y)
    while y:
        x, y = y, x % y
    return x


def require_coprime(a: int, b: int) -> None:
    if b < 1:
        raise DomainError(f"modulus must be positive, got b={b}")
    if gcd(a, b) != 1:
        raise DomainError(f"gcd({a}, {b}) != 1")


@dataclass(frozen=True)
class CoprimePair:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise DomainError(f"({self.a}, {self.b}) must be positive integers")
        require_coprime(self.a, self.b)


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y == g == gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def mod_inverse(a: int, b: int) -> int:
    """Inverse of ``a`` modulo ``b`` normalised to ``0 < a* < b``.

    For ``b == 1`` every residue is the inverse of every other; ``1`` is
    returned by convention.
    """
    require_coprime(a, b)
    if b == 1:
        return 1
    g, x, _ = egcd(a % b, b)
    return x % b


def jacobi(a: int, b: int) -> int:
    """Jacobi symbol (a/b) for odd positive ``b``; ``jacobi(a, 1) == 1``."""
    if b < 1 or b % 2 == 0:
        raise DomainError(f"Jacobi symbol needs an odd positive modulus, got {b}")
    a %= b
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if b % 8 in (3, 5):
                sign = -sign
        a, b = b, a
        if a % 4 == 3 and b % 4 == 3:
            sign = -sign
        a %= b
    return sign if b == 1 else 0


def in_multiple_of(x: Fraction, m: int) -> bool:
    """True iff the rational ``x`` lies in ``m``Z."""
    x = Fraction(x)
    return x.denominator == 1 and x.numerator % m == 0


def floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def render(x: Fraction, bare_integers: bool = False) -> str:
    """``num/den`` in lowest terms; integers as ``n`` when ``bare_integers``."""
    x = Fraction(x)
    if bare_integers and x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
