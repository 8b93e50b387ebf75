import random

import pytest

from batemanhorn import (
    DETERMINISTIC,
    PROBABLE,
    CountResult,
    EngineConfig,
    InadmissibleSystemError,
    Polynomial,
    RangeOverflowError,
    build_system,
    count_series,
    count_simultaneous_primes,
    evaluate,
    is_prime,
    list_roots,
    parse_polynomial,
    primes_up_to,
)

CORPUS = (("n", "2*n+1"), ("6*n^2+1",), ("n", "n+2"), ("n^2+1",),
          ("2*n^2+3",))


def system(*texts):
    return build_system([parse_polynomial(t) for t in texts])


def naive_count_series(s, checkpoints):
    """Oracle: test every f_i(n) individually, no pre-sieve, no segments."""
    out, total, i = [], 0, 0
    for n in range(1, checkpoints[-1] + 1):
        if all((v := evaluate(f, n)) >= 2 and is_prime(v) for f in s.polys):
            total += 1
        while i < len(checkpoints) and n == checkpoints[i]:
            out.append(total)
            i += 1
    return out


SERIAL = EngineConfig(workers=1)


def counts(s, checkpoints, config=SERIAL):
    return [r.count for r in count_series(s, checkpoints, config)]


# ---------------------------------------------------------------------------
# reference values
# ---------------------------------------------------------------------------

def test_sophie_germain_reference_counts():
    assert counts(system("n", "2*n+1"), [10**2, 10**3, 10**4, 10**5]) == \
        [10, 37, 190, 1171]


def test_6n2_reference_counts():
    assert counts(system("6*n^2+1"), [10**2, 10**3, 10**4]) == \
        [27, 155, 1176]


def test_prime_counting_special_case():
    r = count_simultaneous_primes(system("n"), 100, SERIAL)
    assert r.count == 25
    assert r.certainty == DETERMINISTIC
    assert r.x == 100 and r.elapsed >= 0


def test_single_checkpoint_at_one():
    assert counts(system("n", "2*n+1"), [1]) == [0]   # f1(1) = 1, not prime
    assert counts(system("n^2+n+1"), [1]) == [1]      # f(1) = 3, prime


# ---------------------------------------------------------------------------
# oracle equivalence and invariances
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("texts", CORPUS)
def test_engine_matches_naive_oracle_to_1e4(texts):
    s = system(*texts)
    cps = [10, 100, 1000, 10**4]
    assert counts(s, cps) == naive_count_series(s, cps)


def test_partition_and_presieve_invariance():
    s = system("n", "2*n+1")
    cps = [10**3, 10**4]
    reference = counts(s, cps)
    for segment_size in (2**10, 2**16, 2**20):
        for presieve in (0, 10**3, 10**5):
            cfg = EngineConfig(workers=1, segment_size=segment_size,
                               presieve_bound=presieve)
            assert counts(s, cps, cfg) == reference, (segment_size, presieve)


def test_worker_invariance():
    s = system("6*n^2+1")
    cps = [10**3, 10**4]
    reference = counts(s, cps)
    for workers in (2, 4):
        cfg = EngineConfig(workers=workers, segment_size=2**10)
        assert counts(s, cps, cfg) == reference, workers


def test_monotonicity_in_x():
    s = system("n", "n+2")
    cps = [10**k for k in range(1, 5)]
    result = counts(s, cps)
    assert all(a <= b for a, b in zip(result, result[1:]))
    assert all(r <= c for r, c in zip(result, cps))


def test_series_matches_individual_counts():
    s = system("2*n^2+3")
    cps = [50, 500, 5000]
    series = counts(s, cps)
    singles = [count_simultaneous_primes(s, c, SERIAL).count for c in cps]
    assert series == singles


# ---------------------------------------------------------------------------
# pre-sieve soundness
# ---------------------------------------------------------------------------

def test_presieve_rejections_are_composite():
    s = system("n", "2*n+1")
    presieve_bound = 10**3
    x = 10**5
    # recompute the engine's rejection rule independently
    table = []
    for p in primes_up_to(presieve_bound):
        roots = set()
        for f in s.polys:
            roots.update(list_roots(f, p).roots)
        table.append((p, roots))
    n_star = 10**3  # f1(n) = n <= presieve bound up to here
    rejected = []
    rng = random.Random(13)
    for n in rng.sample(range(n_star + 1, x), 3 * 10**4):
        for p, roots in table:
            if n % p in roots:
                rejected.append((n, p))
                break
        if len(rejected) >= 10**4:
            break
    assert len(rejected) == 10**4
    for n, p in rejected:
        witnessed = False
        for f in s.polys:
            v = evaluate(f, n)
            if v % p == 0 and v != p:
                witnessed = True
                assert not is_prime(v) or v == p
        assert witnessed, (n, p)


# ---------------------------------------------------------------------------
# certainty and errors
# ---------------------------------------------------------------------------

def test_probable_certainty_propagates():
    # f(2) = 2^64 + 13, a prime beyond the deterministic range
    f = Polynomial((15, 2**63 - 1))
    s = build_system([f])
    r = count_simultaneous_primes(s, 2, EngineConfig(workers=1,
                                                     presieve_bound=0))
    assert r.count == 1
    assert r.certainty == PROBABLE


def test_count_rejects_inadmissible():
    s = build_system([parse_polynomial("n"), parse_polynomial("n+1")],
                     require_admissible=False)
    with pytest.raises(InadmissibleSystemError):
        count_simultaneous_primes(s, 100, SERIAL)


@pytest.mark.filterwarnings("ignore::UserWarning")
def test_count_range_overflow():
    f = Polynomial((1, 0, 0, 0, 2**62))  # (2^62) n^4
    s = build_system([f])
    with pytest.raises(RangeOverflowError):
        count_simultaneous_primes(s, 10**17, SERIAL)


def test_checkpoint_validation():
    s = system("n")
    with pytest.raises(ValueError):
        count_series(s, [100, 100], SERIAL)
    with pytest.raises(ValueError):
        count_series(s, [0, 10], SERIAL)
    assert count_series(s, [], SERIAL) == []


def test_progress_hook_called():
    s = system("n", "2*n+1")
    seen = []
    count_series(s, [2000], EngineConfig(workers=1, segment_size=2**10,
                                         presieve_bound=100),
                 progress=lambda done, running: seen.append((done, running)))
    assert seen
    assert seen[-1][0] == 2000
    dones = [d for d, _ in seen]
    assert dones == sorted(dones)
    assert seen[-1][1] == count_simultaneous_primes(s, 2000, SERIAL).count
