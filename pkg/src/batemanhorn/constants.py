"""Euler product constants for polynomial systems.

The density constant of an admissible system {f_1,...,f_M} is the product
over all primes of (1 - 1/p)^(-M) (1 - omega(p)/p), omega the root count of
the product polynomial mod p.  The direct truncated product (mode 'naive')
converges slowly and only conditionally.  For a single quadratic with a
negative fundamental discriminant D, multiplying through by the Dirichlet
series identity L(1, chi_D) = prod (1 - chi_D(p)/p)^(-1) leaves a product
whose factors are 1 + O(p^-2) (mode 'accelerated'), absolutely convergent
and accurate to ~1e-7 already at a 10^6 truncation.

The error_estimate field is the last-decade drift |value(P) - value(P/10)|,
an honest heuristic rather than a bound: no rigorous tail estimate exists
for the conditionally convergent form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import modular, primality
from .errors import (
    InadmissibleSystemError,
    NotFundamentalError,
    NotNegativeError,
    NotQuadraticError,
)
from .poly import Polynomial, PolySystem, build_system

NAIVE = "naive"
ACCELERATED = "accelerated"


@dataclass(frozen=True)
class EulerProductResult:
    value: float
    truncation: int
    mode: str
    error_estimate: float
    l_value: float | None = None


def _require_admissible(system: PolySystem) -> None:
    if not system.admissible:
        raise InadmissibleSystemError(system.inadmissible_witness)


def _omega(product: Polynomial, p: int) -> int:
    """Root count of the product mod p, with cheap closed forms first."""
    if product.degree == 1:
        b, a = product.coeffs
        if a % p:
            return 1
        return p if b % p == 0 else 0
    return modular._root_count(product, p)


def bh_constant_naive(system: PolySystem, truncation: int) -> EulerProductResult:
    """Directly truncated Euler product over all primes <= truncation."""
    _require_admissible(system)
    truncation = int(truncation)
    if truncation < 2:
        raise ValueError(f"truncation must be >= 2, got {truncation}")
    m = system.m
    product = system.product
    tenth = truncation // 10
    value = 1.0
    at_tenth = None
    for p in primality.primes_up_to(truncation):
        if at_tenth is None and p > tenth:
            at_tenth = value
        # (1 - omega/p) / (1 - 1/p)^M as one correctly rounded ratio of
        # exact integers; for omega = 1, M = 1 the factor is exactly 1.0
        value *= (p - _omega(product, p)) * p**(m - 1) / (p - 1)**m
    if at_tenth is None:
        at_tenth = value
    return EulerProductResult(value=value, truncation=truncation, mode=NAIVE,
                              error_estimate=abs(value - at_tenth))


def discriminant(f: Polynomial) -> int:
    if f.degree != 2:
        raise NotQuadraticError(f"{f} is not quadratic")
    c, b, a = f.coeffs
    return b * b - 4 * a * c


def is_fundamental_discriminant(d: int) -> bool:
    """True when d is the discriminant of a quadratic field."""
    if d in (0, 1):
        return False
    r = d % 4
    if r == 1:
        return _squarefree(abs(d))
    if r == 0:
        m = d // 4
        return m % 4 in (2, 3) and _squarefree(abs(m))
    return False


def _squarefree(n: int) -> bool:
    return all(e == 1 for e in primality.factorize(n).values())


def l_value_negative_fundamental(d: int) -> float:
    """L(1, chi_d) for a negative fundamental discriminant d.

    chi_d is odd and primitive of conductor q = |d|, so the value has the
    exact finite form -(pi / q^{3/2}) * sum_{a=1}^{q-1} chi_d(a) * a; the
    only error is double rounding.
    """
    if d >= 0:
        raise NotNegativeError(f"discriminant must be negative, got {d}")
    if not is_fundamental_discriminant(d):
        raise NotFundamentalError(f"{d} is not a fundamental discriminant")
    q = -d
    total = sum(modular.kronecker(d, a) * a for a in range(1, q))
    return -math.pi * total / q**1.5


def bh_constant_accelerated(f: Polynomial,
                            truncation: int) -> EulerProductResult:
    """L-accelerated constant for a single irreducible quadratic.

    Away from the primes dividing 2*a*D the local factor is
    1 - chi_D(p)/(p-1); dividing each by 1 - chi_D(p)/p and compensating with
    1/L(1, chi_D) makes the tail absolutely convergent.  The finitely many
    exceptional primes p | 2aD contribute their raw factor, divided by
    1 - chi_D(p)/p so the L-function substitution stays exact when
    chi_D(p) != 0 there (p dividing 2a but not D).
    """
    truncation = int(truncation)
    if truncation < 2:
        raise ValueError(f"truncation must be >= 2, got {truncation}")
    if f.degree != 2:
        raise NotQuadraticError(f"{f} is not quadratic")
    system = build_system((f,))  # validates irreducibility and admissibility
    d = discriminant(f)
    if d >= 0 or not is_fundamental_discriminant(d):
        raise NotFundamentalError(
            f"discriminant {d} of {f} is not a negative fundamental "
            f"discriminant; use the naive product instead")
    l_value = l_value_negative_fundamental(d)

    a = f.leading_coefficient
    exceptional = sorted(primality.factorize(2 * a * abs(d)))
    prefactor = 1.0
    for p in exceptional:
        chi = modular.kronecker(d, p)
        # [(1 - omega/p)/(1 - 1/p)] / (1 - chi/p) = p(p - omega)/((p-1)(p-chi))
        prefactor *= p * (p - _omega(f, p)) / ((p - 1) * (p - chi))

    exc = set(exceptional)
    tenth = truncation // 10
    prod = 1.0
    at_tenth = None
    for p in primality.primes_up_to(truncation):
        if at_tenth is None and p > tenth:
            at_tenth = prod
        if p in exc:
            continue
        chi = modular.kronecker(d, p)
        # (1 - chi/(p-1)) / (1 - chi/p) = p(p - 1 - chi)/((p - 1)(p - chi))
        prod *= p * (p - 1 - chi) / ((p - 1) * (p - chi))
    if at_tenth is None:
        at_tenth = prod
    scale = prefactor / l_value
    return EulerProductResult(value=scale * prod, truncation=truncation,
                              mode=ACCELERATED,
                              error_estimate=abs(scale * (prod - at_tenth)),
                              l_value=l_value)
