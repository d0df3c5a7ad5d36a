"""Exception types shared across the package."""


class GenerationError(RuntimeError):
    """A generator exhausted its retry budget without meeting its postcondition."""

    def __init__(self, message: str, attempts: int = 0):
        super().__init__(message)
        self.attempts = attempts


class PartitionError(RuntimeError):
    """A randomized partition stage exhausted its budget.

    Carries the attempt count and the worst violated constraint seen, so
    callers can surface diagnostics instead of a bare failure.
    """

    def __init__(self, message: str, attempts: int = 0, level: int | None = None,
                 violation: tuple | None = None):
        super().__init__(message)
        self.attempts = attempts
        self.level = level
        self.violation = violation


class TemplateError(RuntimeError):
    """Template construction produced or detected an invalid template."""

    def __init__(self, message: str, label: str | None = None, witness=None):
        super().__init__(message)
        self.label = label
        self.witness = witness
