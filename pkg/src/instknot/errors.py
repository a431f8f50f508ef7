"""Shared exception types.

Every domain failure raised by this package derives from ToolkitError so
callers (and the command line driver) can distinguish bad mathematical
input from genuine bugs.
"""


class ToolkitError(Exception):
    """Base class for all domain errors raised by instknot."""


class InvalidRank(ToolkitError):
    """Cartan family/rank combination outside the supported range."""


class DegeneratePattern(ToolkitError):
    """Stabilizer pattern with no abelian directions left."""


class LatticeMismatch(ToolkitError):
    """Charge vector has the wrong length for the lattice it lives in."""


class ChargeImbalance(ToolkitError):
    """Per-block first Chern numbers that do not sum to zero."""


class NonIntegralTerm(ToolkitError):
    """A summand that must be an integer came out fractional."""


class DegenerateRoot(ToolkitError):
    """Root finding hit a non-simple zero, so the census is unreliable."""


class Unsupported(ToolkitError):
    """Requested combination is valid but outside what is implemented."""


class TooLarge(ToolkitError):
    """Input exceeds a size or enumeration budget."""


class MalformedPD(ToolkitError):
    """Planar diagram code that fails basic structural checks."""
