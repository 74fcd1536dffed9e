"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed edge-list input, or input that is not a simple graph."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NotGraphicalError(ValueError):
    """Degree sequence with no simple-graph realization.

    ``index`` is the 1-based Erdős–Gallai inequality that fails, or 0 when
    the degree sum is odd or an entry is out of range.
    """

    def __init__(self, degrees, index, message):
        super().__init__(message)
        self.degrees = tuple(degrees)
        self.index = index


class PoleError(ZeroDivisionError):
    """Evaluation point sits on a pole of the vertex-form prefactor."""


class BoundExceededError(RuntimeError):
    """A brute-force routine was asked to go past its configured size bound."""
