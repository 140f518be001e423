"""Exception types shared across the package."""


class SobtowerError(Exception):
    """Base class for all library errors."""


class InvalidSequence(SobtowerError, ValueError):
    """A sequence constructor was given parameters violating its invariants."""


class InvalidSpectrum(SobtowerError, ValueError):
    """An eigenvalue sequence violates sup Re q_j < 0 or |q_j| >= 1."""


class InvalidRescaling(SobtowerError, ValueError):
    """A spectral shift would leave the admissible class of spectra."""


class ContractViolation(SobtowerError, ValueError):
    """An operation was called outside its stated precondition."""


class UnsupportedCombination(SobtowerError, TypeError):
    """Sequence kind and spectrum kind cannot be combined (e.g. a closed-form
    family over an explicit finite spectrum)."""


class SupportOutOfRange(SobtowerError, IndexError):
    """A finite-support vector has support outside the explicit spectrum range."""


class NotInDomain(SobtowerError, ValueError):
    """The element is not a member of the required tower level."""


class NotRepresentable(SobtowerError, ValueError):
    """The element has no finite tower norm at any admitted level."""


class NormNotCertified(SobtowerError, ArithmeticError):
    """A numeric value was requested from an inconclusive or divergent result."""


class ConfigError(SobtowerError, ValueError):
    """A run configuration failed validation."""
