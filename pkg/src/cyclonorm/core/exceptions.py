"""
Error hierarchy for cyclonorm.

Every error the library raises on purpose derives from CycloNormError, which is a
ValueError so callers that already guard bad input with ValueError keep working.
"""
from typing import Optional


class CycloNormError(ValueError):
    """Base class for all cyclonorm errors"""


class InexactDivisionError(CycloNormError):
    """Polynomial division left a remainder or a non-integral quotient coefficient"""

    def __init__(self, detail: str = ""):
        super().__init__(f"inexact division{': ' + detail if detail else ''}")


class UndefinedResultantError(CycloNormError):
    """Resultant requested with a zero polynomial argument"""

    def __init__(self):
        super().__init__("undefined: resultant of the zero polynomial")


class PreconditionError(CycloNormError):
    """An operation was called outside its admissible domain"""

    def __init__(self, detail: str):
        super().__init__(f"precondition violated: {detail}")


class OutOfRangeError(CycloNormError):
    """An index or size argument is outside the supported range"""

    def __init__(self, detail: str):
        super().__init__(f"out of range: {detail}")


class PerfectSquareError(CycloNormError):
    """Continued fraction of sqrt(d) requested for a perfect square d"""

    def __init__(self, d: int):
        super().__init__(f"perfect square: {d}")
        self.d = d


class AnalyticInstabilityError(CycloNormError):
    """The analytic class number formula did not land near an integer"""

    def __init__(self, p: int, value: str):
        super().__init__(f"analytic formula unstable for p={p}: {value}")
        self.p = p


class CosetConstancyError(CycloNormError):
    """A Gauss-period reduction produced coefficients that are not constant on cosets"""

    def __init__(self, p: int, k: int):
        super().__init__(f"coset constancy violated for p={p}, k={k}")


class NotUnitMultipleError(CycloNormError):
    """A quadratic field element is not a signed power of the fundamental unit"""

    def __init__(self, p: int, bound: int):
        super().__init__(f"not a unit multiple for p={p} within |m| <= {bound}")


class NotIntegralError(CycloNormError):
    """Quadratic field arithmetic produced an element outside the ring of integers"""

    def __init__(self, detail: str):
        super().__init__(f"not integral: {detail}")


class EmptyInputError(CycloNormError):
    """Polynomial expression was empty or whitespace only"""

    def __init__(self):
        super().__init__("empty input")


class PolySyntaxError(CycloNormError):
    """Polynomial expression could not be parsed"""

    def __init__(self, offset: int, detail: Optional[str] = None):
        message = f"syntax error at offset {offset}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)
        self.offset = offset
