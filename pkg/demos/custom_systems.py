"""Exploring other polynomial systems: admissibility, twin primes, n^2+1.

Run:  python demos/custom_systems.py
"""

from batemanhorn import (
    EngineConfig,
    InadmissibleSystemError,
    bh_constant_accelerated,
    bh_constant_naive,
    build_system,
    count_series,
    parse_polynomial,
    predict,
    round_half_away,
)

# --- a system can fail the local conditions ------------------------------
# n(n+1) is always even: two roots mod 2, so no n > 1 makes both prime.
try:
    build_system([parse_polynomial("n"), parse_polynomial("n+1")])
except InadmissibleSystemError as e:
    print(f"{{n, n+1}} rejected: {e}")

# --- twin primes {n, n+2} -------------------------------------------------
twins = build_system([parse_polynomial("n"), parse_polynomial("n+2")])
c_twins = bh_constant_naive(twins, 10**6)
print(f"\ntwin primes {twins}: C = {c_twins.value:.6f} (= 2 * C_2, the same "
      f"constant as Sophie Germain)")
cps = [10**3, 10**4, 10**5]
actuals = count_series(twins, cps, EngineConfig())
for row in predict(twins, cps, c_twins, actuals):
    print(f"  x = {row.x:>6}: actual {row.actual:>5}, "
          f"modified {round_half_away(row.modified):>5}, "
          f"original {round_half_away(row.original):>5}")

# --- primes of the form n^2 + 1 -------------------------------------------
f = parse_polynomial("n^2+1")
quad = build_system([f])
c_quad = bh_constant_accelerated(f, 10**6)  # D = -4 is fundamental
print(f"\n{quad}: accelerated C = {c_quad.value:.9f} "
      f"(L(1, chi_-4) = pi/4 = {c_quad.l_value:.9f})")
actuals = count_series(quad, cps, EngineConfig())
for row in predict(quad, cps, c_quad, actuals):
    print(f"  x = {row.x:>6}: actual {row.actual:>5}, "
          f"modified {round_half_away(row.modified):>5}, "
          f"original {round_half_away(row.original):>5}")

print("""
any admissible system of distinct irreducible polynomials with positive
leading coefficients works the same way; inadmissible ones are rejected
with the witnessing prime""")
