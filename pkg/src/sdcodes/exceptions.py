"""Exception hierarchy shared across the toolkit.

Every domain error derives from :class:`SdcError` so callers (and the CLI)
can distinguish precondition violations from ordinary bugs.  Names follow
the behaviour that triggers them.
"""


class SdcError(Exception):
    """Base class for all toolkit errors."""


class NoRootOfMinusOne(SdcError):
    """x^2 = -1 has no solution (field modulus is 3 mod 4)."""


class DimensionMismatch(SdcError):
    """Operands have incompatible shapes."""


class FieldMismatch(SdcError):
    """Operands live over different prime fields."""


class NotSelfDual(SdcError):
    """Operation requires a self-dual code."""


class NotStandardForm(SdcError):
    """Generator matrix is not of the form (I | A)."""


class BudgetExceeded(SdcError):
    """Requested enumeration is larger than the allowed budget."""


class InexactWeight(SdcError):
    """Operation requires an exact minimum-weight report."""


class NotAnEigenvector(SdcError):
    """Bordering vector is not an eigenvector for the requested eigenvalue."""


class GammaMismatch(SdcError):
    """gamma^2 != -1 - x.x for the supplied step."""


class GammaEqualsAlpha(SdcError):
    """gamma = alpha is forbidden for a non-trivial step."""


class NotNonzeroSquare(SdcError):
    """x.x + 1 is a non-square, so no corner element gamma exists."""


class AlphaEqualsGamma(SdcError):
    """Reduction needs a root of -1 different from the corner entry."""


class NotAResidue(SdcError):
    """Field characteristic is not a quadratic residue modulo the code length."""


class CoefficientNotInBaseField(SdcError):
    """A generator-polynomial coefficient failed to collapse to the base field."""


class ParameterMismatch(SdcError):
    """Codes do not share the same (n, k, p)."""
