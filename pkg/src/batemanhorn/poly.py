"""Integer polynomials and systems of them.

A Polynomial stores ascending coefficients ``coeffs[k] * n^k`` with a positive
leading coefficient and degree >= 1.  Coefficients live in the signed 64-bit
range and evaluation in the signed 128-bit range; both limits are enforced
explicitly (arithmetic itself is exact Python integers).

A PolySystem bundles an ordered tuple of distinct polynomials with the derived
data the prediction machinery needs: the product polynomial, the admissibility
verdict, the integer threshold n0 past which every polynomial exceeds 1, and
per-polynomial irreducibility evidence.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    ConstantPolynomialError,
    DuplicatePolynomialError,
    InadmissibleSystemError,
    IrreducibilityError,
    NonPositiveLeadError,
    PolynomialSyntaxError,
    RangeOverflowError,
)
from . import _gfpoly

I64_MAX = 2**63 - 1
I128_MAX = 2**127 - 1

# Primes used when hunting for a mod-p irreducibility certificate (degree >= 4).
_CERTIFICATE_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                       53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def _check64(coeffs: Sequence[int]) -> None:
    for c in coeffs:
        if abs(c) > I64_MAX:
            raise RangeOverflowError(
                f"coefficient {c} exceeds the signed 64-bit range")


def _trim(coeffs: Sequence[int]) -> list[int]:
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _eval_exact(coeffs: Sequence[int], n: int) -> int:
    """Horner evaluation with no range limit (internal use)."""
    acc = 0
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc


@dataclass(frozen=True)
class Polynomial:
    """Univariate integer polynomial, ascending coefficients, lead > 0."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(_trim(self.coeffs))
        object.__setattr__(self, "coeffs", coeffs)
        _check64(coeffs)
        if len(coeffs) < 2:
            raise ConstantPolynomialError(
                "constant polynomials are not prime infinitely often")
        if coeffs[-1] <= 0:
            raise NonPositiveLeadError(
                f"leading coefficient must be positive, got {coeffs[-1]}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1]

    def __call__(self, n: int) -> int:
        return evaluate(self, n)

    def __str__(self) -> str:
        return format_polynomial(self)


def evaluate(f: Polynomial, n: int) -> int:
    """Exact f(n); every Horner intermediate must fit in signed 128 bits."""
    if abs(n) > I64_MAX:
        raise RangeOverflowError(f"argument {n} exceeds the signed 64-bit range")
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * n + c
        if abs(acc) > I128_MAX:
            raise RangeOverflowError(
                f"evaluation at n={n} leaves the signed 128-bit range")
    return acc


def format_polynomial(f: Polynomial) -> str:
    """Canonical display form, descending powers: '6*n^2 + 1'."""
    parts: list[str] = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        elif k == 1:
            body = "n" if mag == 1 else f"{mag}*n"
        else:
            body = f"n^{k}" if mag == 1 else f"{mag}*n^{k}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

def parse_polynomial(text: str) -> Polynomial:
    """Parse an expression in ``n`` (operators + - * ^, parentheses, integer
    literals) or a comma-separated ascending coefficient list.

    Expansion is exact; any intermediate coefficient outside the signed
    64-bit range raises RangeOverflowError.
    """
    src = text.replace("−", "-").strip()  # accept the unicode minus sign
    if not src:
        raise PolynomialSyntaxError("empty polynomial expression")
    if "," in src:
        coeffs = _parse_coeff_list(src)
    else:
        coeffs = _Parser(src).run()
    return Polynomial(tuple(coeffs))


def _parse_coeff_list(src: str) -> list[int]:
    coeffs = []
    for i, piece in enumerate(src.split(",")):
        piece = piece.strip()
        try:
            coeffs.append(int(piece))
        except ValueError:
            raise PolynomialSyntaxError(
                f"coefficient {i} is not an integer: {piece!r}") from None
    return coeffs


class _Parser:
    """Recursive-descent parser producing an ascending coefficient list.

    Grammar:  expr := term (('+'|'-') term)*
              term := unary ('*' unary)*
              unary := ('+'|'-') unary | power
              power := atom ('^' INTEGER)?
              atom := INTEGER | 'n' | '(' expr ')'
    """

    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def run(self) -> list[int]:
        coeffs = self.expr()
        self.skip_ws()
        if self.pos != len(self.src):
            raise PolynomialSyntaxError(
                f"unexpected {self.src[self.pos]!r} at position {self.pos}")
        return coeffs

    def skip_ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def expr(self) -> list[int]:
        acc = self.term()
        while self.peek() in ("+", "-"):
            op = self.src[self.pos]
            self.pos += 1
            rhs = self.term()
            acc = self._add(acc, rhs if op == "+" else self._neg(rhs))
        return acc

    def term(self) -> list[int]:
        acc = self.unary()
        while self.peek() == "*":
            self.pos += 1
            acc = self._mul(acc, self.unary())
        return acc

    def unary(self) -> list[int]:
        ch = self.peek()
        if ch in ("+", "-"):
            self.pos += 1
            inner = self.unary()
            return inner if ch == "+" else self._neg(inner)
        return self.power()

    def power(self) -> list[int]:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            exp = self._integer("exponent")
            if exp > 128:
                raise PolynomialSyntaxError(f"exponent {exp} is too large")
            acc = [1]
            for _ in range(exp):
                acc = self._mul(acc, base)
            return acc
        return base

    def atom(self) -> list[int]:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if self.peek() != ")":
                raise PolynomialSyntaxError(
                    f"expected ')' at position {self.pos}")
            self.pos += 1
            return inner
        if ch == "n":
            self.pos += 1
            return [0, 1]
        if ch.isdigit():
            return [self._integer("integer literal")]
        if ch == "":
            raise PolynomialSyntaxError("unexpected end of expression")
        raise PolynomialSyntaxError(
            f"unexpected {ch!r} at position {self.pos}")

    def _integer(self, what: str) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise PolynomialSyntaxError(
                f"expected {what} at position {start}")
        return int(self.src[start:self.pos])

    @staticmethod
    def _neg(a: list[int]) -> list[int]:
        out = [-c for c in a]
        _check64(out)
        return out

    @staticmethod
    def _add(a: list[int], b: list[int]) -> list[int]:
        out = [0] * max(len(a), len(b))
        for i, c in enumerate(a):
            out[i] += c
        for i, c in enumerate(b):
            out[i] += c
        _check64(out)
        return out

    @staticmethod
    def _mul(a: list[int], b: list[int]) -> list[int]:
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        _check64(out)
        return out


# ---------------------------------------------------------------------------
# Systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PolySystem:
    """Ordered system of distinct polynomials plus derived data."""

    polys: tuple[Polynomial, ...]
    product: Polynomial
    n0: int
    admissible: bool
    irreducibility_evidence: tuple[str, ...]
    inadmissible_witness: int | None = field(default=None)

    @property
    def m(self) -> int:
        """Number of polynomials in the system."""
        return len(self.polys)

    def __str__(self) -> str:
        return "{" + ", ".join(str(f) for f in self.polys) + "}"


def build_system(polys: Iterable[Polynomial], *,
                 require_admissible: bool = True) -> PolySystem:
    """Validate a polynomial system and compute its derived data.

    Raises DuplicatePolynomialError, IrreducibilityError (a certified
    factorization exists), RangeOverflowError (product coefficients leave the
    64-bit range) and, unless ``require_admissible=False``,
    InadmissibleSystemError carrying the witnessing prime.
    """
    polys = tuple(polys)
    if not polys:
        raise ValueError("a system needs at least one polynomial")
    seen = set()
    for f in polys:
        if f.coeffs in seen:
            raise DuplicatePolynomialError(f"duplicate polynomial {f}")
        seen.add(f.coeffs)

    evidence = tuple(irreducibility_evidence(f) for f in polys)

    prod = [1]
    for f in polys:
        prod = _Parser._mul(prod, list(f.coeffs))
    product = Polynomial(tuple(prod))

    witness = _inadmissibility_witness(product)
    admissible = witness is None
    if not admissible and require_admissible:
        raise InadmissibleSystemError(witness)

    n0 = _threshold_cutoff(polys, 1)
    return PolySystem(polys=polys, product=product, n0=n0,
                      admissible=admissible, irreducibility_evidence=evidence,
                      inadmissible_witness=witness)


def _inadmissibility_witness(product: Polynomial) -> int | None:
    """Smallest prime modulo which the product vanishes identically, if any.

    Root counts are brute-forced for p <= deg(product); a polynomial of
    degree d vanishing identically mod p > d must have p dividing every
    coefficient, which the content check covers.
    """
    d = product.degree
    p = 2
    while p <= d:
        if _is_small_prime(p):
            residues = [c % p for c in product.coeffs]
            if all(_eval_exact(residues, n) % p == 0 for n in range(p)):
                return p
        p += 1
    content = 0
    for c in product.coeffs:
        content = math.gcd(content, c)
    if content > 1:
        from . import primality
        return primality.smallest_prime_factor(content)
    return None


def _is_small_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in range(2, math.isqrt(p) + 1):
        if p % q == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Irreducibility evidence
# ---------------------------------------------------------------------------

def irreducibility_evidence(f: Polynomial) -> str:
    """Return 'certified' or 'heuristic'; raise IrreducibilityError when a
    factorization is certain.

    Degree 1 is always irreducible.  A rational root gives a linear factor
    (hard error); its absence decides degrees 2 and 3 completely.  For
    degree >= 4 we look for a prime p with f irreducible mod p, which
    certifies irreducibility over the integers; if no small prime certifies
    and no factorization was found the verdict stays heuristic.
    """
    if f.degree == 1:
        return "certified"
    root = _rational_root(f)
    if root is not None:
        p, q = root
        raise IrreducibilityError(
            f"{f} is reducible: rational root {p}/{q} gives a linear factor")
    if f.degree <= 3:
        return "certified"
    for p in _CERTIFICATE_PRIMES:
        if f.leading_coefficient % p == 0:
            continue
        if _gfpoly.is_irreducible([c % p for c in f.coeffs], p):
            return "certified"
    warnings.warn(
        f"no irreducibility certificate found for {f}; proceeding on the "
        f"heuristic that it is irreducible", stacklevel=2)
    return "heuristic"


def _rational_root(f: Polynomial) -> tuple[int, int] | None:
    """Find a rational root p/q (q > 0, gcd(p,q)=1) or None."""
    c0 = f.coeffs[0]
    if c0 == 0:
        return (0, 1)
    from . import primality
    nums = primality.divisors(abs(c0), cap=20000)
    dens = primality.divisors(f.leading_coefficient, cap=20000)
    if nums is None or dens is None:
        # Constant/leading coefficient too composite to enumerate; fall back
        # to float root candidates confirmed exactly.
        return _rational_root_from_float(f)
    for q in dens:
        for p in nums:
            if math.gcd(p, q) != 1:
                continue
            for s in (p, -p):
                # q^d * f(s/q) = sum c_k s^k q^(d-k), exact integers
                if _scaled_value(f.coeffs, s, q) == 0:
                    return (s, q)
    return None


def _scaled_value(coeffs: Sequence[int], p: int, q: int) -> int:
    d = len(coeffs) - 1
    return sum(c * p**k * q**(d - k) for k, c in enumerate(coeffs))


def _rational_root_from_float(f: Polynomial) -> tuple[int, int] | None:
    import numpy as np
    roots = np.roots(list(reversed(f.coeffs)))
    candidates = [r.real for r in roots if abs(r.imag) < 1e-6]
    dens = [q for q in range(1, min(abs(f.leading_coefficient), 64) + 1)
            if f.leading_coefficient % q == 0]
    for r in candidates:
        for q in dens:
            base = round(r * q)
            for p in range(base - 2, base + 3):
                if math.gcd(p, q) == 1 and _scaled_value(f.coeffs, p, q) == 0:
                    return (p, q)
    return None


# ---------------------------------------------------------------------------
# Threshold cutoffs (n0 and the counting engine's direct-phase bound)
# ---------------------------------------------------------------------------

def _cauchy_bound(coeffs: Sequence[int]) -> int:
    """Integer ceiling of the Cauchy root bound 1 + max|c_i|/lead."""
    lead = coeffs[-1]
    m = max(abs(c) for c in coeffs[:-1]) if len(coeffs) > 1 else 0
    return 1 + (m + lead - 1) // lead  # ceil(m/lead), exact in integers


def _threshold_cutoff(polys: Sequence[Polynomial], threshold: int) -> int:
    """Largest integer n with f(n) <= threshold for some f in the system.

    Past this point every polynomial exceeds the threshold.  When no
    polynomial ever dips to the threshold the scan floor -max(ceil(B_i)) is
    returned, B_i the Cauchy bound of f_i - threshold.
    """
    best: int | None = None
    floors = []
    for f in polys:
        shifted = list(f.coeffs)
        shifted[0] -= threshold
        bound = _cauchy_bound(shifted)
        floors.append(bound)
        hit = _largest_at_most(f.coeffs, threshold, bound)
        if hit is not None and (best is None or hit > best):
            best = hit
    if best is not None:
        return best
    return -max(floors)


def _largest_at_most(coeffs: Sequence[int], threshold: int, bound: int,
                     scan_budget: int = 100_000) -> int | None:
    """Largest integer n with f(n) <= threshold, or None if there is none.

    Degrees 1 and 2 are solved in closed form with integer arithmetic.
    Higher degrees scan down from the Cauchy bound and fall back to
    float-located roots confirmed exactly when the scan budget runs out.
    """
    d = len(coeffs) - 1
    if d == 1:
        b, a = coeffs
        return (threshold - b) // a
    if d == 2:
        c, b, a = coeffs
        disc = b * b - 4 * a * (c - threshold)
        if disc < 0:
            return None
        s = math.isqrt(disc)
        k0 = (-b + s) // (2 * a)
        for k in (k0 + 1, k0):
            if _eval_exact(coeffs, k) <= threshold:
                return k
        return None
    n = bound
    lo = -bound
    steps = 0
    while n >= lo and steps < scan_budget:
        if _eval_exact(coeffs, n) <= threshold:
            return n
        n -= 1
        steps += 1
    if n < lo:
        return None
    # Scan budget exhausted: locate the largest real crossing numerically
    # and confirm with exact integer evaluation.
    import numpy as np
    shifted = list(coeffs)
    shifted[0] -= threshold
    roots = np.roots(list(reversed(shifted)))
    reals = sorted(r.real for r in roots if abs(r.imag) < 1e-6)
    for r in reversed(reals):
        base = math.floor(r)
        for k in range(base + 2, base - 3, -1):
            if _eval_exact(coeffs, k) <= threshold:
                return k
    return None


def threshold_cutoff(system: PolySystem, threshold: int) -> int:
    """Largest n with some polynomial of the system <= threshold (clamped)."""
    return _threshold_cutoff(system.polys, threshold)
