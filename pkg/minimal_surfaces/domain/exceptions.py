class MinimalSurfaceException(Exception):
    pass


class ImproperlyConfigured(MinimalSurfaceException):
    pass


class DomainError(MinimalSurfaceException):
    """A point or annulus lies outside the region where a series is valid."""


class NonExactFormError(MinimalSurfaceException):
    """The form has a nonzero residue at 0, so it has no single-valued primitive."""


class InvalidPunctureError(MinimalSurfaceException):
    pass


class UnitAnnulusError(MinimalSurfaceException):
    """A puncture lies on or inside the unit circle."""


class PoleError(MinimalSurfaceException):
    pass


class RegularityError(MinimalSurfaceException):
    """All three Weierstrass forms vanish at the same point."""


class DegenerateEquationError(MinimalSurfaceException):
    pass


class NoValidRootError(DegenerateEquationError):
    """The residue equation for m2 has no admissible (real, nonzero) root."""


class ZeroInAnnulusError(MinimalSurfaceException):
    pass


class ParameterError(MinimalSurfaceException):
    pass
