"""Exception types shared across the package."""


class AsmDppError(Exception):
    """Base class for package-specific errors."""


class ValidationError(AsmDppError, ValueError):
    """An object failed its structural invariants."""


class ResourceLimitError(AsmDppError, RuntimeError):
    """A requested computation exceeds a documented size limit."""


class DegenerateParameterError(AsmDppError, ValueError):
    """A parameter point hits a pole or coincidence that a formula forbids."""


class InvariantError(AsmDppError, RuntimeError):
    """An internally cross-checked identity failed.  Indicates a bug."""
