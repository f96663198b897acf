"""Exception and warning types raised across the package."""


class ZenoCouplerError(Exception):
    """Base class for all package errors."""


class ZeroAmplitudePhase(ZenoCouplerError, ValueError):
    """A phase was requested for a coherent amplitude of zero magnitude."""


class InvalidSignature(ZenoCouplerError, KeyError):
    """Unknown three-exponential kernel pattern."""


class BudgetExceeded(ZenoCouplerError):
    """Truncated Fock basis (or oracle sweep grid) larger than the configured budget."""


class ExcessiveTruncation(ZenoCouplerError):
    """A coherent amplitude is too large for its Fock cutoff."""


class LeakageExceeded(ZenoCouplerError):
    """Evolution pushed probability onto the truncation boundary."""


class StepFailure(ZenoCouplerError):
    """The propagator could not meet its tolerance."""


class UnknownPreset(ZenoCouplerError, KeyError):
    pass


class ConfigError(ZenoCouplerError, ValueError):
    """Configuration document failed validation.

    ``path`` is the dotted location of the offending field.
    """

    def __init__(self, message: str, path: str = ""):
        super().__init__(message)
        self.path = path


class NoSignChange(ZenoCouplerError):
    """Informational: a crossover search found no sign change."""


class PerturbationBreakdown(UserWarning):
    """A second-order mean came out negative; the perturbative regime is exceeded."""
