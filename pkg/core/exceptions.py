"""Custom exceptions for the k-defect toolkit."""

from typing import Any, Optional


class KDefectError(Exception):
    """Base exception for all k-defect related errors."""

    pass


class GraphError(KDefectError):
    """Exception raised for invalid graph construction or unknown edge ids."""

    pass


class GraphFormatError(GraphError):
    """Exception raised when an edge-list or graph6 input cannot be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        """Initialize GraphFormatError.

        Args:
            message: Error message
            line: 1-based input line number if applicable
        """
        self.message = message
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GuardError(KDefectError):
    """Exception raised when an input exceeds a desk-scale size guard."""

    def __init__(self, name: str, limit: int, value: int):
        """Initialize GuardError.

        Args:
            name: Name of the guard (e.g. "max_colorings")
            limit: Configured limit
            value: Offending value
        """
        self.name = name
        self.limit = limit
        self.value = value
        super().__init__(f"size guard '{name}' exceeded: {value} > {limit}")


class PolynomialError(KDefectError):
    """Exception raised for invalid polynomial operations."""

    pass


class EngineDisagreementError(KDefectError):
    """Exception raised when two engines produce different results.

    Never expected in practice; carries both results for diagnosis.
    """

    def __init__(self, first: str, second: str, k: Optional[int], expected: Any, actual: Any):
        """Initialize EngineDisagreementError.

        Args:
            first: Name of the reference engine
            second: Name of the engine that disagreed
            k: Row index where the disagreement occurred (None for whole-vector checks)
            expected: Result of the reference engine
            actual: Result of the disagreeing engine
        """
        self.first = first
        self.second = second
        self.k = k
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"engines '{first}' and '{second}' disagree at k={k}: {expected!r} != {actual!r}"
        )


class FamilyError(KDefectError):
    """Exception raised for unknown families or parameters out of range."""

    pass


class ClaimError(KDefectError):
    """Exception raised for unknown claim ids."""

    pass


class ValidationError(KDefectError):
    """Exception raised for configuration validation errors."""

    pass
