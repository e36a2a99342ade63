"""
Exception hierarchy shared by the engine and the CLI.
"""

from typing import Optional


class TerraciniError(Exception):
    """Base class for all errors raised by the library."""


class SpecError(TerraciniError, ValueError):
    """Malformed input: bad specs, labels, dimensions or arguments."""


class PolynomialSyntaxError(SpecError):
    """Polynomial text could not be parsed."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownIdentifierError(SpecError):
    """Polynomial text mentions a name that is not a declared variable."""

    def __init__(self, name: str, position: int):
        super().__init__(f"unknown identifier '{name}' at position {position}")
        self.name = name
        self.position = position


class GroundSetMismatchError(SpecError):
    """Matroids compared or combined on different ground sets."""


class EnumerationCapExceeded(TerraciniError):
    """Base enumeration refused because the ground set is too large."""

    def __init__(self, size: int, cap: int):
        super().__init__(
            f"ground set of size {size} exceeds the enumeration cap {cap}"
        )
        self.size = size
        self.cap = cap


class SamplingAnomaly(TerraciniError):
    """
    Randomized rank computations contradicted a theorem-guaranteed fact.

    Re-run with more trials or with symbolic verification.
    """

    def __init__(self, message: str, subset: Optional[tuple] = None):
        super().__init__(message)
        self.subset = subset
