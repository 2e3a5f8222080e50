"""Exception types shared across the package.

Every failure mode that callers are expected to branch on gets its own
class; everything derives from :class:`VacuumError` so the command-line
layer can catch the lot in one place and translate to exit codes.
"""


class VacuumError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(VacuumError):
    """A parameter is outside its documented range (non-positive length,
    negative damping, empty grid, ...)."""


class OutOfDomain(VacuumError):
    """A spatial point lies outside the open domain of the geometry."""


class AtEigenvalue(VacuumError):
    """A frequency coincides with an eigenvalue within tolerance, where a
    counting decomposition is genuinely ambiguous."""


class ContinuousSpectrum(VacuumError):
    """The operation needs a discrete spectrum but the geometry has a
    continuum (half-line)."""


class UnsupportedGeometry(VacuumError):
    """The requested method is not defined for this geometry or boundary
    condition combination."""


class NonConvergent(VacuumError):
    """A series or extrapolation ladder failed to settle to the requested
    tolerance."""


class IllConditionedFit(VacuumError):
    """A coefficient fit left a residual too large for its output to be
    trusted."""
