"""Exhaustive sweeps over ranges of moduli b.

Work is split by b.  ``jobs > 1`` farms the b values out to a process pool;
``Executor.map`` returns results in submission order, so the merged output
is identical to a single-threaded run.
"""
from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from math import gcd

from . import theorems as th
from .dedekind import dedekind_sum_bhk
from .exactmath import DomainError, in_multiple_of
from .permutation import inversions_fast

THEOREMS = ("zolotarev", "meyer", "salie", "bhk", "lerch", "necCond", "altsum", "girstmair")


def units(b: int, upper: int | None = None) -> list[int]:
    """Residues 1 <= a < upper (default b) coprime to b."""
    return [a for a in range(1, b if upper is None else upper) if gcd(a, b) == 1]


def _pointwise(check, b: int, upper: int | None = None):
    bad = [(a, b) for a in units(b, upper) if not check(a, b)]
    return len(units(b, upper)), bad


def _necCond(b: int):
    # per-b tables so each triple costs O(1)
    A = units(b)
    inv = {a: inversions_fast(a, b) for a in A}
    s = {a: dedekind_sum_bhk(a, b).value for a in A}
    checked, bad = 0, []
    for i, a1 in enumerate(A):
        for a2 in A[i + 1:]:
            checked += 1
            ca = (inv[a1] - inv[a2]) % (2 * b) == 0
            cb = in_multiple_of(3 * (s[a1] - s[a2]), 2)
            cc = th.cond_8Z(a1, a2, b)
            if not ca == cb == cc:
                bad.append((a1, a2, b))
    return checked, bad


def _girstmair(a: int, b: int) -> bool:
    return th.check_girstmair(a, b).holds


def sweep_one(theorem: str, b: int):
    """(checked, violations) for a single modulus b."""
    if theorem == "zolotarev":
        if b % 2 == 0:
            return 0, []
        return _pointwise(th.check_zolotarev, b)
    if theorem == "meyer":
        return _pointwise(th.check_meyer, b)
    if theorem == "salie":
        # a <= b covers both argument orders; (1, 1) is the only a == b case
        return _pointwise(th.check_salie, b, b + 1)
    if theorem == "bhk":
        return _pointwise(th.check_bhk, b)
    if theorem == "lerch":
        return _pointwise(th.check_lerch, b)
    if theorem == "necCond":
        return _necCond(b)
    if theorem == "altsum":
        return _pointwise(th.check_altsum_mod8, b)
    if theorem == "girstmair":
        return _pointwise(_girstmair, b)
    raise DomainError(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREMS)}")


@dataclass
class VerifyReport:
    theorem: str
    b_min: int
    b_max: int
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def _map(fn, items, jobs: int):
    if jobs <= 1:
        return map(fn, items)
    pool = ProcessPoolExecutor(max_workers=jobs)
    try:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    finally:
        pool.shutdown()


def _check_range(b_min: int, b_max: int) -> None:
    if not 1 <= b_min <= b_max:
        raise DomainError(f"need 1 <= b_min <= b_max, got {b_min}..{b_max}")


def verify(theorem: str, b_min: int, b_max: int, jobs: int = 1, progress: bool = False) -> VerifyReport:
    _check_range(b_min, b_max)
    if theorem not in THEOREMS:
        raise DomainError(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREMS)}")
    report = VerifyReport(theorem, b_min, b_max)
    bs = list(range(b_min, b_max + 1))
    for b, (checked, bad) in zip(bs, _map(partial(sweep_one, theorem), bs, jobs)):
        report.checked += checked
        report.violations.extend(bad)
        if progress:
            print(f"{theorem}: b={b} checked={report.checked}", file=sys.stderr)
    return report


def parse_predicate(text: str):
    """Turn ``equal``, ``cond-c-not-equal`` or ``ladder=m`` into a filter."""
    if text == "equal":
        return lambda pc: pc.equal
    if text == "cond-c-not-equal":
        return lambda pc: pc.cond_c and not pc.equal
    if text.startswith("ladder="):
        value = text.split("=", 1)[1]
        if value == "none":
            return lambda pc: pc.ladder is None
        if value in ("1", "2", "4", "8"):
            m = int(value)
            return lambda pc: pc.ladder == m
    raise DomainError(f"bad predicate {text!r}; use equal, cond-c-not-equal or ladder=none|1|2|4|8")


def scan_one(predicate: str, b: int) -> list[th.PairClassification]:
    keep = parse_predicate(predicate)
    A = units(b)
    s = {a: dedekind_sum_bhk(a, b).value for a in A}
    out = []
    for i, a1 in enumerate(A):
        for a2 in A[i + 1:]:
            pc = th.classify_pair(a1, a2, b, s[a1], s[a2])
            if keep(pc):
                out.append(pc)
    return out


def scan(b_min: int, b_max: int, predicate: str, jobs: int = 1, progress: bool = False):
    """Matching pair classifications ordered by (b, a1, a2), as an iterator.

    Arguments are validated eagerly, before anything is computed.
    """
    _check_range(b_min, b_max)
    parse_predicate(predicate)
    return _scan(b_min, b_max, predicate, jobs, progress)


def _scan(b_min, b_max, predicate, jobs, progress):
    bs = list(range(b_min, b_max + 1))
    for b, rows in zip(bs, _map(partial(scan_one, predicate), bs, jobs)):
        if progress:
            print(f"scan: b={b} matches={len(rows)}", file=sys.stderr)
        yield from rows


