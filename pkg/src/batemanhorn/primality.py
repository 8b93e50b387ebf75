"""Prime generation and primality testing.

primes_up_to streams a segmented sieve of Eratosthenes (numpy masks, fixed
power-of-two segments).  Single-number testing is deterministic Miller-Rabin
with the 12-witness set {2,...,37} below 2^64 and Baillie-PSW (strong base-2
Miller-Rabin plus a strong Lucas test with Selfridge parameters) above, where
prime verdicts are tagged 'probable'.  Composite verdicts are always certain:
a failed Miller-Rabin round or a found factor is a proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .errors import LimitTooLargeError

DETERMINISTIC = "deterministic"
PROBABLE = "probable"

U64 = 1 << 64
SIEVE_LIMIT_MAX = 1 << 40
DEFAULT_SEGMENT_SIZE = 1 << 20

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class PrimalityResult(NamedTuple):
    prime: bool
    certainty: str


# ---------------------------------------------------------------------------
# Sieving
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SieveSegment:
    """One sieve block: bits[k] is True iff base + k is prime."""

    base: int
    bits: np.ndarray


def simple_sieve(limit: int) -> np.ndarray:
    """Boolean array a with a[n] True iff n is prime, 0 <= n <= limit."""
    a = np.ones(limit + 1, dtype=bool)
    a[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if a[p]:
            a[p * p::p] = False
    return a


def sieve_segments(limit: int,
                   segment_size: int = DEFAULT_SEGMENT_SIZE
                   ) -> Iterator[SieveSegment]:
    """Stream fixed-size sieve segments covering [0, limit].

    Bits past the limit in the final segment are False.  Memory use is one
    segment plus the base primes up to sqrt(limit).
    """
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    if limit > SIEVE_LIMIT_MAX:
        raise LimitTooLargeError(
            f"sieve limit {limit} exceeds the 2^40 guard")
    if segment_size < 2 or segment_size & (segment_size - 1):
        raise ValueError(f"segment size must be a power of two, got "
                         f"{segment_size}")
    root = math.isqrt(limit)
    base_primes = np.flatnonzero(simple_sieve(root)) if root >= 2 else \
        np.empty(0, dtype=np.int64)
    for lo in range(0, limit + 1, segment_size):
        hi = min(lo + segment_size, limit + 1)  # exclusive
        bits = np.ones(segment_size, dtype=bool)
        if lo == 0:
            bits[:2] = False
        if hi - lo < segment_size:
            bits[hi - lo:] = False
        for p in base_primes:
            p = int(p)
            start = max(p * p, (lo + p - 1) // p * p)
            if start >= hi:
                continue
            bits[start - lo:hi - lo:p] = False
        yield SieveSegment(base=lo, bits=bits)


def primes_up_to(limit: int,
                 segment_size: int = DEFAULT_SEGMENT_SIZE) -> Iterator[int]:
    """All primes <= limit, ascending, streamed segment by segment."""
    for seg in sieve_segments(limit, segment_size):
        for k in np.flatnonzero(seg.bits):
            yield seg.base + int(k)


# ---------------------------------------------------------------------------
# Single-number testing
# ---------------------------------------------------------------------------

def _miller_rabin(n: int, bases) -> bool:
    """Strong probable-prime test for odd n > 2 against the given bases."""
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in bases:
        a %= n
        if a == 0:
            continue
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


def _selfridge_d(n: int) -> int | None:
    """First D in 5, -7, 9, -11, ... with (D|n) = -1; None marks composite."""
    from .modular import kronecker
    d = 5
    while True:
        j = kronecker(d, n)
        if j == -1:
            return d
        if j == 0 and abs(d) != n:
            return None  # gcd(D, n) is a proper factor
        d = -(d + 2) if d > 0 else -(d - 2)


def _strong_lucas(n: int) -> bool:
    """Strong Lucas probable-prime test with Selfridge parameters, odd n."""
    r = math.isqrt(n)
    if r * r == n:
        return False
    D = _selfridge_d(n)
    if D is None:
        return False
    P = 1
    Q = (1 - D) // 4

    k = n + 1
    s = (k & -k).bit_length() - 1
    d = k >> s

    # Binary ladder for U_d, V_d (mod n), tracking Q^index alongside.
    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = P * U + V, D * U + P * V
            if U & 1:
                U += n
            if V & 1:
                V += n
            U, V = (U >> 1) % n, (V >> 1) % n
            Qk = Qk * Q % n

    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        if V == 0:
            return True
        Qk = Qk * Qk % n
    return False


def _small_primes_below_1000() -> tuple[int, ...]:
    sieve = simple_sieve(999)
    return tuple(int(p) for p in np.flatnonzero(sieve))


_TRIAL_PRIMES = _small_primes_below_1000()


def classify(v: int) -> PrimalityResult:
    """Primality verdict with a certainty tag.

    Below 2^64 the verdict is deterministic (proven Miller-Rabin witness
    set).  At or above 2^64 a prime verdict comes from Baillie-PSW and is
    tagged 'probable'; no counterexample to that test is known.
    """
    v = int(v)
    if v < 2:
        return PrimalityResult(False, DETERMINISTIC)
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if v == p:
            return PrimalityResult(True, DETERMINISTIC)
        if v % p == 0:
            return PrimalityResult(False, DETERMINISTIC)
    if v < U64:
        return PrimalityResult(_miller_rabin(v, _MR_WITNESSES), DETERMINISTIC)
    for p in _TRIAL_PRIMES:
        if v % p == 0:
            return PrimalityResult(False, DETERMINISTIC)
    if not _miller_rabin(v, (2,)):
        return PrimalityResult(False, DETERMINISTIC)
    if not _strong_lucas(v):
        return PrimalityResult(False, DETERMINISTIC)
    return PrimalityResult(True, PROBABLE)


def is_prime(v: int) -> bool:
    return classify(v).prime


# ---------------------------------------------------------------------------
# Small factoring helpers (admissibility witnesses, rational root candidates)
# ---------------------------------------------------------------------------

def _pollard_rho(n: int) -> int:
    """A nontrivial factor of odd composite n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed to split {n}")  # pragma: no cover


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return out


def smallest_prime_factor(n: int) -> int:
    return min(factorize(n))


def divisors(n: int, cap: int = 20000) -> list[int] | None:
    """Sorted positive divisors of n, or None if there are more than cap."""
    ds = [1]
    for p, e in factorize(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
        if len(ds) > cap:
            return None
    return sorted(ds)
