"""The multiplier permutation x -> a*x mod b and its inversion number I(a, b)."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .dedekind import dedekind_sum_bhk
from .exactmath import ConsistencyError, DomainError, require_coprime

# rows per block in the quadratic counter; bounds scratch memory at ~_BLOCK * b bytes
_BLOCK = 256


def image(a: int, b: int) -> np.ndarray:
    """Bottom row ``[0, [a]_b, [2a]_b, ..., [(b-1)a]_b]`` as int64."""
    require_coprime(a, b)
    return (np.arange(b, dtype=np.int64) * (a % b)) % b


@dataclass(frozen=True)
class MultiplierPermutation:
    a: int
    b: int
    image: np.ndarray = field(repr=False, compare=False)

    def __len__(self):
        return self.b


def perm_build(a: int, b: int) -> MultiplierPermutation:
    return MultiplierPermutation(a, b, image(a, b))


def count_inversions_naive(seq) -> int:
    """Count pairs i < j with seq[i] > seq[j] by comparing every pair."""
    v = np.asarray(seq)
    n = len(v)
    total = 0
    for lo in range(0, n, _BLOCK):
        hi = min(lo + _BLOCK, n)
        rows = v[lo:hi, None] > v[None, :]
        # keep only j > i
        rows &= np.arange(n)[None, :] > np.arange(lo, hi)[:, None]
        total += int(np.count_nonzero(rows))
    return total


def count_inversions(seq) -> int:
    """Inversions of a sequence of distinct integers in O(n log^2 n) numpy work.

    Bottom-up merge sort: at width ``w`` every row of the reshaped array holds
    two sorted halves.  After a stable argsort of a row, an element coming
    from the right half at sorted position ``p`` with source index ``idx``
    has exactly ``idx - p`` larger elements of the left half in front of it.
    """
    v = np.asarray(seq, dtype=np.int64)
    n = len(v)
    if n < 2:
        return 0
    size = 1 << (n - 1).bit_length()
    if size != n:
        # increasing padding above every value adds no inversions
        top = int(v.max()) + 1
        v = np.concatenate([v, np.arange(top, top + size - n, dtype=np.int64)])
    else:
        v = v.copy()
    total = 0
    w = 1
    while w < size:
        rows = v.reshape(-1, 2 * w)
        order = np.argsort(rows, axis=1, kind="stable")
        pos = np.arange(2 * w)
        right = order >= w
        total += int(np.sum((order - pos)[right]))
        v = np.take_along_axis(rows, order, axis=1).reshape(-1)
        w *= 2
    return total


def inversions_naive(a: int, b: int) -> int:
    return count_inversions_naive(image(a, b))


def inversions_fast(a: int, b: int) -> int:
    return count_inversions(image(a, b))


def inversions_meyer(a: int, b: int) -> int:
    """I(a, b) = -3b s(a, b) + (b - 1)(b - 2)/4, evaluated exactly."""
    require_coprime(a, b)
    s = dedekind_sum_bhk(a, b).value
    value = -3 * b * s + Fraction((b - 1) * (b - 2), 4)
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(f"Meyer formula gave {value} for ({a}, {b})")
    return value.numerator


def inversions(a: int, b: int, method: str = "fast") -> int:
    try:
        fn = {"naive": inversions_naive, "fast": inversions_fast, "meyer": inversions_meyer}[method]
    except KeyError:
        raise DomainError(f"unknown method {method!r}") from None
    return fn(a, b)
