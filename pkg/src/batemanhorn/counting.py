"""Exact counting of simultaneous prime values of a polynomial system.

The engine counts n in [1, x] with every f_i(n) prime, in two phases:

* direct phase, n <= n_star: every value is tested individually.  n_star is
  the last n at which some f_i(n) <= presieve_bound, so beyond it a sieve
  hit proves compositeness.
* sieved phase, n in (n_star, x]: numpy segments mark n = r (mod p) for
  every pre-sieve prime p and every root r of some f_i mod p; there
  p | f_i(n) and f_i(n) > p, hence composite.  Survivors get a real
  primality test per polynomial, short-circuiting on the first composite.

Segments are independent work units, so the sieved phase can run on a
process pool; results merge by ordered integer sums and are identical for
any worker count, segment size, or pre-sieve bound.
"""

from __future__ import annotations

import os
import time
from bisect import bisect_right
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from . import modular, primality
from .errors import InadmissibleSystemError, RangeOverflowError
from .poly import I128_MAX, Polynomial, PolySystem, evaluate, threshold_cutoff

# Values at or below this bound are tested by sieve lookup, not Miller-Rabin.
_LOOKUP_LIMIT = 1 << 22


@dataclass(frozen=True)
class CountResult:
    x: int
    count: int
    certainty: str
    elapsed: float


@dataclass(frozen=True)
class EngineConfig:
    presieve_bound: int = 100_000
    segment_size: int = 1 << 20
    workers: int | None = None  # None: BH_WORKERS env, then cpu count

    def __post_init__(self):
        s = self.segment_size
        if s < 2 or s & (s - 1):
            raise ValueError(f"segment size must be a power of two, got {s}")
        if self.presieve_bound < 0:
            raise ValueError("presieve bound must be >= 0")
        if self.workers is not None and self.workers < 1:
            raise ValueError("workers must be >= 1")


def resolve_workers(config: EngineConfig) -> int:
    if config.workers is not None:
        return config.workers
    env = os.environ.get("BH_WORKERS", "").strip()
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def count_simultaneous_primes(system: PolySystem, x: int,
                              config: EngineConfig | None = None,
                              progress: Callable[[int, int], None] | None = None
                              ) -> CountResult:
    """Count of n in [1, x] with f_i(n) prime for every i."""
    return count_series(system, [x], config, progress)[0]


def count_series(system: PolySystem, checkpoints: Sequence[int],
                 config: EngineConfig | None = None,
                 progress: Callable[[int, int], None] | None = None
                 ) -> list[CountResult]:
    """One CountResult per checkpoint, all computed in a single sweep."""
    config = config or EngineConfig()
    if not system.admissible:
        raise InadmissibleSystemError(system.inadmissible_witness)
    checkpoints = [int(c) for c in checkpoints]
    if not checkpoints:
        return []
    if checkpoints[0] < 1 or any(a >= b for a, b in
                                 zip(checkpoints, checkpoints[1:])):
        raise ValueError("checkpoints must be ascending and >= 1")
    x = checkpoints[-1]
    t0 = time.perf_counter()
    for f in system.polys:
        evaluate(f, x)  # surface range overflow before any work happens

    counts = [0] * len(checkpoints)
    elapsed = [0.0] * len(checkpoints)
    certainty = [primality.DETERMINISTIC] * len(checkpoints)
    done = [False] * len(checkpoints)

    def absorb(lo: int, hi: int, qualified: list[int], probable: bool,
               running_total: int) -> int:
        for j, c in enumerate(checkpoints):
            counts[j] += bisect_right(qualified, c)
            if probable and c > lo:
                certainty[j] = primality.PROBABLE
            if not done[j] and hi >= c:
                done[j] = True
                elapsed[j] = time.perf_counter() - t0
        running_total += len(qualified)
        if progress is not None:
            progress(min(hi, x), running_total)
        return running_total

    n_star = max(0, threshold_cutoff(system, config.presieve_bound))
    direct_limit = min(n_star, x)
    lookup = primality.simple_sieve(_LOOKUP_LIMIT) if direct_limit > 64 else None

    qualified, probable = _count_direct(system.polys, 1, direct_limit, lookup)
    total = absorb(0, direct_limit, qualified, probable, 0)

    if x > direct_limit:
        presieve = _presieve_roots(system, config.presieve_bound)
        chunks = list(_chunk_bounds(direct_limit + 1, x, config.segment_size))
        workers = resolve_workers(config)
        if workers > 1 and len(chunks) > 1:
            results = _run_pool(system, presieve, chunks, workers)
        else:
            state = (tuple(f.coeffs for f in system.polys), presieve)
            results = (_process_chunk_state(state, bounds) for bounds in chunks)
        for (lo, hi), (qualified, probable) in zip(chunks, results):
            total = absorb(lo - 1, hi, qualified, probable, total)

    return [CountResult(x=c, count=counts[j], certainty=certainty[j],
                        elapsed=elapsed[j])
            for j, c in enumerate(checkpoints)]


# ---------------------------------------------------------------------------
# Phases
# ---------------------------------------------------------------------------

def _count_direct(polys: Sequence[Polynomial], lo: int, hi: int,
                  lookup) -> tuple[list[int], bool]:
    """Individually test every n in [lo, hi]; returns (qualifying n, probable)."""
    qualified = []
    probable = False
    for n in range(lo, hi + 1):
        ok = True
        for f in polys:
            v = evaluate(f, n)
            if v < 2:
                ok = False
                break
            if v <= _LOOKUP_LIMIT and lookup is not None:
                if not lookup[v]:
                    ok = False
                    break
            else:
                verdict = primality.classify(v)
                probable = probable or verdict.certainty == primality.PROBABLE
                if not verdict.prime:
                    ok = False
                    break
        if ok:
            qualified.append(n)
    return qualified, probable


def _presieve_roots(system: PolySystem,
                    bound: int) -> list[tuple[int, tuple[int, ...]]]:
    """(p, merged roots of all f_i mod p) for every pre-sieve prime p."""
    if bound < 2:
        return []
    table = []
    for p in primality.primes_up_to(bound):
        roots: set[int] = set()
        for f in system.polys:
            roots.update(modular.list_roots(f, p).roots)
        if roots:
            table.append((p, tuple(sorted(roots))))
    return table


def _chunk_bounds(start: int, stop: int,
                  size: int) -> Iterable[tuple[int, int]]:
    lo = start
    while lo <= stop:
        yield lo, min(lo + size - 1, stop)
        lo += size


def _process_chunk_state(state, bounds: tuple[int, int]
                         ) -> tuple[list[int], bool]:
    """Sieve one segment [lo, hi] and test survivors."""
    coeffs_list, presieve = state
    lo, hi = bounds
    length = hi - lo + 1
    alive = np.ones(length, dtype=bool)
    for p, roots in presieve:
        for r in roots:
            alive[(r - lo) % p::p] = False
    polys = [list(c) for c in coeffs_list]
    qualified = []
    probable = False
    for k in np.flatnonzero(alive):
        n = lo + int(k)
        ok = True
        for coeffs in polys:
            v = 0
            for c in reversed(coeffs):
                v = v * n + c
            if v > I128_MAX:
                raise RangeOverflowError(
                    f"value at n={n} leaves the signed 128-bit range")
            if v < 2:
                ok = False
                break
            verdict = primality.classify(v)
            probable = probable or verdict.certainty == primality.PROBABLE
            if not verdict.prime:
                ok = False
                break
        if ok:
            qualified.append(n)
    return qualified, probable


# ---------------------------------------------------------------------------
# Process pool plumbing
# ---------------------------------------------------------------------------

_POOL_STATE = None


def _pool_init(state):
    global _POOL_STATE
    _POOL_STATE = state


def _pool_task(bounds):
    return _process_chunk_state(_POOL_STATE, bounds)


def _run_pool(system: PolySystem, presieve, chunks, workers: int):
    from concurrent.futures import ProcessPoolExecutor

    state = (tuple(f.coeffs for f in system.polys), presieve)
    with ProcessPoolExecutor(max_workers=min(workers, len(chunks)),
                             initializer=_pool_init,
                             initargs=(state,)) as pool:
        yield from pool.map(_pool_task, chunks)
