"""
Result records for cyclonorm.

Plain dataclasses: each validates its invariants in __post_init__ and knows how to turn
itself into a dict for the formatters.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from cyclonorm.core.polyring import IntPoly


class NormMethod(Enum):
    """How a norm value was obtained"""
    PRS = "prs"
    RECURRENCE = "recurrence"
    DIVISOR_PRODUCT = "divisor_product"


@dataclass(frozen=True)
class NormReport:
    """Norm of r(zeta) for zeta a primitive n-th root of unity"""
    n: int
    poly: IntPoly
    value: int
    is_unit: bool
    method: NormMethod

    def __post_init__(self):
        """Validate report data"""
        if self.n < 1:
            raise ValueError("NormReport modulus must be positive")
        if self.is_unit != (self.value in (1, -1)):
            raise ValueError("NormReport is_unit must match value in {1, -1}")

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization"""
        return {
            "n": self.n,
            "poly": self.poly.to_text(),
            "value": self.value,
            "is_unit": self.is_unit,
            "method": self.method.value,
        }


@dataclass(frozen=True)
class LucasValue:
    """L(index)"""
    index: int
    value: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("Lucas index must be non-negative")


@dataclass
class DominoTable:
    """Counts D(n, k) of k pairwise disjoint dominos on a labeled n-cycle, k = 0..n//2"""
    n: int
    counts: List[int] = field(default_factory=list)

    def __post_init__(self):
        """Validate table shape"""
        if self.n < 1:
            raise ValueError("Cycle length must be positive")
        if len(self.counts) != self.n // 2 + 1:
            raise ValueError(f"Expected {self.n // 2 + 1} counts for n={self.n}, got {len(self.counts)}")
        if self.counts[0] != 1:
            raise ValueError("There is exactly one empty placement")

    def total(self) -> int:
        """All placements; L(n) for n >= 3"""
        return sum(self.counts)

    def even_nonzero_sum(self) -> int:
        return sum(self.counts[2::2])

    def odd_sum(self) -> int:
        return sum(self.counts[1::2])

    def signed_sum(self) -> int:
        return sum(self.counts[0::2]) - sum(self.counts[1::2])


@dataclass(frozen=True)
class CFExpansion:
    """sqrt(d) = [a0; period, period, ...]"""
    d: int
    a0: int
    period: Tuple[int, ...]

    def __post_init__(self):
        """Validate the shape every sqrt(d) expansion has"""
        if not self.period:
            raise ValueError("Continued fraction period cannot be empty")
        if self.period[-1] != 2 * self.a0:
            raise ValueError("Last period entry must equal 2*a0")
        body = self.period[:-1]
        if tuple(body) != tuple(reversed(body)):
            raise ValueError("Period without its last entry must be a palindrome")


@dataclass(frozen=True)
class PellUnit:
    """epsilon = (x + y*sqrt(p)) / 2 with x^2 - p*y^2 = 4*norm_sign"""
    p: int
    x: int
    y: int
    norm_sign: int

    def __post_init__(self):
        """Validate the Pell relation"""
        if self.x <= 0 or self.y <= 0:
            raise ValueError("Pell solution must be positive")
        if self.norm_sign not in (1, -1):
            raise ValueError("norm_sign must be +1 or -1")
        if self.x * self.x - self.p * self.y * self.y != 4 * self.norm_sign:
            raise ValueError(f"({self.x}, {self.y}) does not solve x^2 - {self.p}y^2 = {4 * self.norm_sign}")

    def to_dict(self) -> Dict[str, Any]:
        return {"p": self.p, "x": self.x, "y": self.y, "norm_sign": self.norm_sign}


@dataclass(frozen=True)
class RealRelNormCheck:
    """Outcome of matching N(1 - zeta) / sqrt(p) against +-epsilon^m"""
    p: int
    m: int
    sign: int
    class_number: int
    ok: bool


@dataclass(frozen=True)
class PolyExpr:
    """Polynomial expression as typed and as parsed"""
    source: str
    parsed: IntPoly

    def canonical(self) -> str:
        return self.parsed.to_text()


@dataclass
class SweepRecord:
    """One output line of a CLI command or sweep"""
    command: str
    n: Optional[int] = None
    poly: Optional[str] = None
    value: Any = None
    unit: Optional[bool] = None
    method: Optional[str] = None
    ok: Optional[bool] = None

    def to_dict(self) -> Dict[str, Any]:
        """Fixed key set, in output order"""
        return {
            "command": self.command,
            "n": self.n,
            "poly": self.poly,
            "value": self.value,
            "unit": self.unit,
            "method": self.method,
            "ok": self.ok,
        }

    @classmethod
    def from_report(cls, command: str, report: NormReport, ok: Optional[bool] = None) -> "SweepRecord":
        return cls(
            command=command,
            n=report.n,
            poly=report.poly.to_text(),
            value=report.value,
            unit=report.is_unit,
            method=report.method.value,
            ok=ok,
        )
