"""Shared exception types."""


class DegenerateInputError(ValueError):
    """A statistic is undefined for this input (e.g. fully tied ranking,
    empty author subset, degenerate ROC axis)."""


class ParseError(ValueError):
    """A data file could not be parsed; carries path and line number."""

    def __init__(self, path: str, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line
