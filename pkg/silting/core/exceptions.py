"""
Exception hierarchy shared by every silting module
"""

from typing import Optional


class SiltingError(Exception):
    """Base class for all errors raised by the library"""


class DimensionMismatch(SiltingError, ValueError):
    """Matrix or module shapes that cannot be combined"""


class QuiverSyntaxError(SiltingError):
    """Malformed .quiver input, located by line and column"""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self) -> str:
        return f"line {self.line}, column {self.column}: {self.message}"


class ComplexSyntaxError(QuiverSyntaxError):
    """Malformed complex description"""


class NotFiniteDimensional(SiltingError):
    """The presented algebra did not close up below the length cap"""


class AlgebraMismatch(SiltingError):
    """Modules or complexes over different algebras were combined"""


class NonInvariantSubspace(SiltingError):
    """A subspace offered as a submodule is not closed under the arrow actions"""


class SplitFailure(SiltingError):
    """The algebra modulo its radical is not a product of copies of the rationals"""

    def __init__(self, message: str, block_dimension: Optional[int] = None):
        super().__init__(message)
        self.block_dimension = block_dimension


class InvariantViolation(SiltingError):
    """An internal cross-check failed (exactness, minimality or dual-route agreement)"""


class NonProjectiveTerms(SiltingError):
    """A complex whose terms must be projective has a non-projective term"""
