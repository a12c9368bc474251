"""Exception types shared across the package."""


class ModalbenchError(Exception):
    """Base class for all package-specific errors."""


class FormulaSyntaxError(ModalbenchError):
    """Malformed formula text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class BoundExceededError(ModalbenchError):
    """A configured resource bound would be exceeded."""


class CapabilityError(ModalbenchError):
    """The algebra at hand does not support the requested operation."""


class ForeignElementError(ModalbenchError):
    """A value is not an element of the algebra it is being used with."""


class UnassignedVariableError(ModalbenchError):
    """A formula variable has no value under the given assignment."""


class NotAdmissibleError(ModalbenchError):
    """The veiled algebra only admits finite and cofinite sets."""


class PeriodOverflowError(ModalbenchError):
    """Aligning two periodic sets would exceed the period cap."""


class ConstructionError(ModalbenchError):
    """An internal step of the refutation construction cannot proceed."""
