"""Exception hierarchy shared by all batemanhorn modules."""


class BatemanHornError(Exception):
    """Base class for every error raised by this package."""


class PolynomialSyntaxError(BatemanHornError):
    """Polynomial expression could not be parsed."""


class NonPositiveLeadError(BatemanHornError):
    """Leading coefficient is zero or negative."""


class ConstantPolynomialError(BatemanHornError):
    """Degree-0 polynomials are rejected (a constant is prime at most once)."""


class RangeOverflowError(BatemanHornError):
    """A coefficient left the signed 64-bit range, or a value the signed
    128-bit range.  Arithmetic inside the package is exact; this error marks
    the documented representation limit, not a silent wraparound."""


class DuplicatePolynomialError(BatemanHornError):
    """A system contains the same polynomial twice."""


class InadmissibleSystemError(BatemanHornError):
    """The product polynomial vanishes identically modulo some prime."""

    def __init__(self, witness: int, message: str | None = None):
        self.witness = witness
        super().__init__(message or f"system is inadmissible: the product "
                         f"vanishes identically modulo p = {witness}")


class IrreducibilityError(BatemanHornError):
    """A polynomial in the system has a certified factorization."""


class NotPrimeError(BatemanHornError):
    """A modulus that must be prime is not."""


class IdenticallyZeroError(BatemanHornError):
    """Root listing requested for a polynomial that is zero mod p."""


class NotFundamentalError(BatemanHornError):
    """Discriminant is not a fundamental discriminant."""


class NotNegativeError(BatemanHornError):
    """Discriminant must be negative for the exact L(1, chi) character sum."""


class NotQuadraticError(BatemanHornError):
    """The accelerated Euler product needs a single quadratic polynomial."""


class LimitTooLargeError(BatemanHornError):
    """Sieve limit exceeds the supported 2^40 guard."""


class SingularIntegrandError(BatemanHornError):
    """Some polynomial is <= 1 at a quadrature point: the logarithmic
    integrand is singular or undefined there."""


class ToleranceNotMetError(BatemanHornError):
    """Adaptive quadrature hit its depth cap before reaching tolerance."""
