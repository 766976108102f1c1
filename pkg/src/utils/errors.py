"""
Exception hierarchy shared by all modules
"""


class FieldLabError(Exception):
    """Base class for every error raised by this package"""


class ValidationError(FieldLabError, ValueError):
    """An argument violates a documented precondition"""


class EmptyLatticeError(ValidationError):
    """The cutoff admits no nonzero wavevector"""


class AliasingError(ValidationError):
    """Spectral content reaches the grid Nyquist limit"""


class LightConeError(ValidationError):
    """The light cone of a smeared kernel leaves the periodic box"""


class ConfigurationError(FieldLabError, ValueError):
    """A run configuration is invalid"""
