"""Integer and modular number theory.

Primality, Legendre symbols, least quadratic non-residues, the search for
the least prime with a prescribed least non-residue (OEIS A000229), prime
counting and integer square roots.

Everything here works on plain Python integers, so moduli well beyond
2**38 are handled exactly.
"""

from __future__ import annotations

import math
import os
from itertools import compress
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

__all__ = [
    "CapacityError",
    "QnrReport",
    "DEFAULT_BUDGET",
    "KNOWN_A000229",
    "is_prime",
    "next_prime",
    "legendre_symbol",
    "least_qnr",
    "a000229_search",
    "a000229_verify",
    "a000229_resolve",
    "prime_pi",
    "nth_prime",
    "primes_below",
    "ceil_sqrt",
    "default_workers",
]

MAX_PRIME_INPUT = 1 << 63
NTH_PRIME_LIMIT = 10**7
DEFAULT_BUDGET = 1 << 22

# First twelve primes as Miller-Rabin bases: deterministic for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Published A000229 entries keyed by least non-residue k.  Entries are
# re-verified with a000229_verify before use; minimality is taken from
# the published sequence, not re-derived.
KNOWN_A000229 = {
    2: 3,
    3: 7,
    5: 23,
    7: 71,
    11: 311,
    13: 479,
    17: 1559,
    19: 5711,
    23: 10559,
    29: 18191,
    37: 422231,
    131: 196265095009,
}

_SEGMENT = 1 << 16


class CapacityError(ValueError):
    """Input outside the range an operation supports."""


@dataclass(frozen=True)
class QnrReport:
    p: int
    k: int


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n > MAX_PRIME_INPUT:
        raise CapacityError(f"is_prime supports n <= 2**63, got {n}")
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Least prime >= n."""
    n = max(n, 2)
    if n == 2:
        return 2
    if n % 2 == 0:
        n += 1
    while not is_prime(n):
        n += 2
    return n


def _require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"expected an odd prime, got {p}")


def legendre_symbol(a: int, p: int) -> int:
    """Euler's criterion: a^((p-1)/2) mod p, mapped to -1, 0 or +1."""
    _require_odd_prime(p)
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _is_qr(a: int, p: int) -> bool:
    # unchecked fast path for callers that already validated p
    return pow(a, (p - 1) // 2, p) == 1


def least_qnr(p: int) -> QnrReport:
    _require_odd_prime(p)
    k = 2
    while _is_qr(k, p):
        k += 1
    # the least non-residue is always prime (multiplicativity of the symbol)
    assert is_prime(k), (p, k)
    return QnrReport(p, k)


def primes_below(n: int) -> list[int]:
    """All primes < n (simple sieve of Eratosthenes)."""
    if n < 3:
        return []
    sieve = bytearray([1]) * n
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, n, i)))
    return list(compress(range(n), sieve))


def _segment_sieve(lo: int, hi: int, base: list[int]) -> bytearray:
    """Primality flags for [lo, hi), lo >= 2, using base primes up to sqrt(hi)."""
    seg = bytearray([1]) * (hi - lo)
    for q in base:
        if q * q >= hi:
            break
        start = max(q * q, (lo + q - 1) // q * q)
        if start < hi:
            seg[start - lo :: q] = bytes(len(range(start, hi, q)))
    return seg


def _segment_primes(lo: int, hi: int, base: list[int]) -> list[int]:
    lo = max(lo, 2)
    if hi <= lo:
        return []
    return list(compress(range(lo, hi), _segment_sieve(lo, hi, base)))


def _has_least_qnr(p: int, k: int, small: list[int]) -> bool:
    # small: the primes < k.  Residues are multiplicative, so checking
    # primes below k covers all of 2..k-1.
    if p <= k:
        return False
    for q in small:
        if not _is_qr(q, p):
            return False
    return not _is_qr(k, p)


def _scan_block(args: tuple[int, int, int, list[int], list[int]]) -> int | None:
    lo, hi, k, small, base = args
    for p in _segment_primes(lo, hi, base):
        if p > 2 and _has_least_qnr(p, k, small):
            return p
    return None


def a000229_search(k: int, budget: int = DEFAULT_BUDGET, workers: int | None = None) -> int | None:
    """Least prime p whose least quadratic non-residue is k.

    Candidates p are examined in increasing order up to ``budget``
    (inclusive).  Returns None when nothing is found within the budget.
    With ``workers > 1`` consecutive blocks are scanned in parallel and
    reduced by minimum, so the answer does not depend on the worker count.
    """
    if not is_prime(k):
        raise ValueError(f"k must be prime, got {k}")
    if budget < 3:
        return None
    small = primes_below(k)
    hi_total = budget + 1
    base = primes_below(math.isqrt(hi_total) + 2)
    blocks = [(lo, min(lo + _SEGMENT, hi_total)) for lo in range(0, hi_total, _SEGMENT)]
    if workers is None:
        workers = 1
    if workers <= 1:
        for lo, hi in blocks:
            hit = _scan_block((lo, hi, k, small, base))
            if hit is not None:
                return hit
        return None
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for i in range(0, len(blocks), workers):
            chunk = [(lo, hi, k, small, base) for lo, hi in blocks[i : i + workers]]
            hits = [h for h in pool.map(_scan_block, chunk) if h is not None]
            if hits:
                return min(hits)
    return None


def a000229_verify(p: int, k: int) -> bool:
    """True iff k is the least quadratic non-residue of the prime p.

    Costs O(k log p): one modular exponentiation per integer below k.
    """
    if p < 3 or k < 2 or not is_prime(p) or not is_prime(k):
        return False
    return _has_least_qnr(p, k, primes_below(k))


def a000229_resolve(k: int, budget: int = DEFAULT_BUDGET, workers: int | None = None) -> int | None:
    """Known-table lookup (verified) falling back to a budgeted search."""
    p = KNOWN_A000229.get(k)
    if p is not None:
        if not a000229_verify(p, k):
            raise AssertionError(f"table entry ({p}, {k}) failed verification")
        return p
    return a000229_search(k, budget=budget, workers=workers)


def prime_pi(k: int) -> int:
    if k < 2:
        return 0
    return len(primes_below(k + 1))


def _nth_prime_upper(n: int) -> int:
    # Rosser: p_n < n (ln n + ln ln n) for n >= 6
    if n < 6:
        return 15
    return int(n * (math.log(n) + math.log(math.log(n)))) + 3


def nth_prime(n: int) -> int:
    if n < 1 or n > NTH_PRIME_LIMIT:
        raise CapacityError(f"nth_prime supports 1 <= n <= {NTH_PRIME_LIMIT}, got {n}")
    hi_total = _nth_prime_upper(n) + 1
    base = primes_below(math.isqrt(hi_total) + 2)
    seen = 0
    step = 1 << 20
    for lo in range(2, hi_total, step):
        hi = min(lo + step, hi_total)
        flags = _segment_sieve(lo, hi, base)
        count = flags.count(1)
        if seen + count >= n:
            return list(compress(range(lo, hi), flags))[n - seen - 1]
        seen += count
    raise AssertionError("prime bound too small")  # pragma: no cover


def ceil_sqrt(m: int) -> int:
    """Least s >= 0 with s*s >= m."""
    if m < 0:
        raise ValueError("ceil_sqrt of a negative number")
    s = math.isqrt(m)
    return s if s * s == m else s + 1


def default_workers() -> int:
    """Worker count from DQT_WORKERS, defaulting to 1."""
    try:
        return max(1, int(os.environ.get("DQT_WORKERS", "1")))
    except ValueError:
        return 1
