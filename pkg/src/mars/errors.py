"""Exception types shared across the package.

Each abnormal-termination error maps to a distinct process exit code so
that driver runs are machine-checkable.
"""


class ConfigurationError(ValueError):
    """Invalid grid, parameter or config-file input.  Exit code 2."""


class NumericalCorruptionError(RuntimeError):
    """A spectral field lost conjugate symmetry beyond tolerance."""


class BlowUpError(RuntimeError):
    """A field became non-finite or exceeded the max-norm ceiling.  Exit code 3."""

    def __init__(self, message, step=None, max_norm=None):
        super().__init__(message)
        self.step = step
        self.max_norm = max_norm


class RuptureError(RuntimeError):
    """Film height reached zero; the run terminates gracefully.  Exit code 4."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class ProximityError(RuntimeError):
    """Interface markers came too close for the quadrature to be reliable.  Exit code 5."""

    def __init__(self, message, step=None, min_distance=None):
        super().__init__(message)
        self.step = step
        self.min_distance = min_distance


EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_BLOWUP = 3
EXIT_RUPTURE = 4
EXIT_PROXIMITY = 5


def exit_code_for(exc):
    """Map an exception to the driver exit code."""
    if isinstance(exc, ConfigurationError):
        return EXIT_CONFIG
    if isinstance(exc, BlowUpError):
        return EXIT_BLOWUP
    if isinstance(exc, RuptureError):
        return EXIT_RUPTURE
    if isinstance(exc, ProximityError):
        return EXIT_PROXIMITY
    raise exc
