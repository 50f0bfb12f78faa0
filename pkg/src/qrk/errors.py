"""Exception types raised by the library.

Every error derives from :class:`QuarticError` (itself a ``ValueError``) so
callers can catch the whole family at once; the CLI reports the class name.
"""


class QuarticError(ValueError):
    pass


class ZeroInverse(QuarticError):
    """Attempted to invert a residue divisible by the modulus."""


class DenominatorDivisible(QuarticError):
    """A rational's denominator is divisible by the working prime."""


class NonResidue(QuarticError):
    """Square root requested for a quadratic nonresidue."""


class NotPrime(QuarticError):
    """Modulus is not an odd prime (or is out of the supported range)."""


class NormDivisible(QuarticError):
    """The prime divides the norm of the Gaussian integer."""


class NotSplitPrime(QuarticError):
    """Gaussian integer whose norm is not an odd rational prime."""


class BadResidueClass(QuarticError):
    """Prime lies in the wrong residue class for the operation."""


class NoClassMatch(QuarticError):
    """A quartic power failed to match any of its four candidate values."""


class BadDiscriminant(QuarticError):
    """Discriminant is not negative or not congruent to 0 or 1 mod 4."""


class UnknownTheorem(QuarticError):
    """No verification check is registered under the requested id."""
