"""Exception types shared across the package."""


class MhdEncloseError(Exception):
    """Base class for all package-specific errors."""


class NotPositiveDefinite(MhdEncloseError):
    """A matrix required to be positive definite is not.

    ``pivot`` is the 1-based index of the failing Cholesky pivot, which
    usually points at a degenerate basis function or rank loss in an
    inverse-residual matrix.
    """

    def __init__(self, pivot, message=""):
        self.pivot = pivot
        super().__init__(message or f"matrix not positive definite (pivot {pivot})")


class NoConvergence(MhdEncloseError):
    """The dense eigensolver failed to converge."""


class InvalidRange(MhdEncloseError):
    """An interval or mesh range is empty or reversed."""


class UnsupportedOrder(MhdEncloseError):
    """Requested finite-element order is not one of 3, 4, 5."""


class SingularResolvent(MhdEncloseError):
    """The shift lies inside (or too close to) the numerical range of D."""


class ConformityError(MhdEncloseError):
    """The trial basis lacks the smoothness required by a strong form."""


class UnvalidatedModel(MhdEncloseError):
    """The model falls outside the validated configuration class."""


class DegeneratePencil(MhdEncloseError):
    """An inverse-residual denominator matrix is numerically singular.

    Signals that the shift coincides with a discrete Galerkin eigenvalue;
    callers retry with a relatively perturbed shift.
    """


class AdmissibilityViolated(MhdEncloseError):
    """The inverse residuals have the wrong signs; the bound is uncertified."""


class NoSignChange(MhdEncloseError):
    """The scan interval brackets no eigenvalue of the requested index."""


class ResolventBoundary(MhdEncloseError):
    """A scan interval overlaps the numerical range of the D block."""


class GapBoundUnavailable(MhdEncloseError):
    """No validated spectral-gap bound exists for the requested index."""


class KappaMismatch(MhdEncloseError):
    """The configured negative-eigenvalue offset disagrees with a runtime count."""


class NoOracle(MhdEncloseError):
    """The model has no exact-spectrum oracle."""


class InsufficientPoints(MhdEncloseError):
    """Fewer than three pre-floor data points are available for a slope fit."""


class ConfigError(MhdEncloseError):
    """Invalid run configuration (CLI exit code 2)."""


class CertificationFailure(MhdEncloseError):
    """An oracle value fell outside a computed enclosure (CLI exit code 3)."""
