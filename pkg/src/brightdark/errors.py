"""Exception types shared across the package."""


class DimensionMismatchError(ValueError):
    """Two objects disagree on the number of modes."""


class SectorError(ValueError):
    """State lies outside the photon-number sector an operation supports."""


class UnsupportedBasisError(ValueError):
    """Requested collective basis does not exist for this mode count."""


class CutoffError(ValueError):
    """Photon-number cutoff too small for the requested truncation tail."""

    def __init__(self, message: str, required_cutoff: int):
        super().__init__(message)
        self.required_cutoff = required_cutoff


class DegenerateInputError(ValueError):
    """Input is degenerate for the requested analysis (vacuum, single mode, ...)."""

    def __init__(self, message: str, vacuum: bool = False):
        super().__init__(message)
        self.vacuum = vacuum


class ResolutionError(ValueError):
    """Sampling grid too coarse to resolve the requested feature."""


class ResourceLimitError(RuntimeError):
    """Exhaustive computation would exceed the configured size bound."""


class ConfigurationError(ValueError):
    """Physical parameters are inconsistent with the requested calculation."""
