"""Exception hierarchy.

Everything raised on purpose by this package derives from
:class:`AsmIdentityError`, so callers can catch one type.
"""


class AsmIdentityError(Exception):
    """Base class for errors raised by asm_identities."""


# exact arithmetic

class ZeroToNegativePower(AsmIdentityError, ZeroDivisionError):
    """A variable carrying a negative exponent was evaluated at 0."""


class UnassignedVariable(AsmIdentityError, KeyError):
    """Evaluation hit a variable missing from the assignment."""


class ResampleExhausted(AsmIdentityError):
    """The sampler ran out of retries before finding an acceptable value."""


class ContextMismatch(AsmIdentityError, ValueError):
    """Two polynomials over different variable lists were combined."""


# alternating sign matrices

class InvalidAsm(AsmIdentityError, ValueError):
    """Raised by :func:`asm_identities.asm.validate`; subclasses name the defect."""


class NotSquare(InvalidAsm):
    pass


class BadEntry(InvalidAsm):
    pass


class BadRowSum(InvalidAsm):
    pass


class BadColSum(InvalidAsm):
    pass


class BrokenAlternation(InvalidAsm):
    pass


class InconsistentConfig(AsmIdentityError, ValueError):
    """A six-vertex grid that is not the image of any ASM."""


# size guards and degenerate inputs

class OrderTooLarge(AsmIdentityError, ValueError):
    """Requested order exceeds the enumeration guard for this operation."""


class ZeroCentralMinor(AsmIdentityError, ZeroDivisionError):
    """Condensation divided by a vanishing interior minor; resample the matrix."""


class ZeroEntry(AsmIdentityError, ZeroDivisionError):
    """ASM expansion needs every matrix entry to be invertible."""


class DegeneratePoint(AsmIdentityError, ValueError):
    """Sample point makes a Vandermonde or Cauchy denominator vanish."""
