"""
Exact arithmetic in quadratic fields and the relative norms of 1 - zeta.

Embedding used throughout: zeta = exp(2*pi*i/p), eta = sum of zeta^j over the quadratic
residues j, and eta - conj(eta) = +sqrt(p*) with p* = p for p = 1 mod 4 and p* = -p
(so sqrt(p*) = i*sqrt(p)) for p = 3 mod 4. That is the classical sign of the quadratic
Gauss sum; every sign assertion in this module is relative to it.

Only class_number_real touches floating point (mpmath, precision chosen per call).
"""
import logging
from dataclasses import dataclass
from math import gcd, isqrt
from threading import Lock
from typing import Any, Dict, FrozenSet, Iterator, List, Tuple

from cachetools import LRUCache, cached
from mpmath import mp

from cyclonorm.core.config import DEFAULT_SETTINGS, Settings
from cyclonorm.core.exceptions import (
    AnalyticInstabilityError,
    CosetConstancyError,
    NotIntegralError,
    NotUnitMultipleError,
    PerfectSquareError,
    PreconditionError,
)
from cyclonorm.core.models import CFExpansion, PellUnit, RealRelNormCheck
from cyclonorm.core.polyring import is_prime, mobius

logger = logging.getLogger(__name__)


@cached(cache=LRUCache(maxsize=256), lock=Lock())
def _is_squarefree(d: int) -> bool:
    return mobius(abs(d)) != 0


@dataclass(frozen=True)
class QuadElem:
    """
    (a + b*sqrt(dstar)) / den, an algebraic integer of Q(sqrt(dstar)).

    Normalized on construction: gcd(a, b, den) = 1 and den in {1, 2}. den = 2 only occurs
    for dstar = 1 mod 4 with a = b mod 2. Anything else is rejected with NotIntegralError,
    which is how inexact division surfaces.
    """

    a: int
    b: int
    den: int
    dstar: int

    def __post_init__(self):
        if self.dstar == 0 or not _is_squarefree(self.dstar):
            raise ValueError(f"dstar must be a nonzero squarefree integer, got {self.dstar}")
        if self.den == 0:
            raise ZeroDivisionError("QuadElem denominator cannot be zero")
        a, b, den = self.a, self.b, self.den
        if den < 0:
            a, b, den = -a, -b, -den
        g = gcd(gcd(a, b), den)
        a, b, den = a // g, b // g, den // g
        if den not in (1, 2):
            raise NotIntegralError(f"({a} + {b}*sqrt({self.dstar}))/{den}")
        if den == 2 and (self.dstar % 4 != 1 or (a - b) % 2):
            raise NotIntegralError(f"({a} + {b}*sqrt({self.dstar}))/2")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "den", den)

    @classmethod
    def integer(cls, n: int, dstar: int) -> "QuadElem":
        return cls(n, 0, 1, dstar)

    @classmethod
    def sqrt(cls, dstar: int) -> "QuadElem":
        return cls(0, 1, 1, dstar)

    def _check_field(self, other: "QuadElem") -> None:
        if self.dstar != other.dstar:
            raise ValueError(f"Mixed fields: sqrt({self.dstar}) and sqrt({other.dstar})")

    def __add__(self, other: "QuadElem") -> "QuadElem":
        self._check_field(other)
        return QuadElem(
            self.a * other.den + other.a * self.den,
            self.b * other.den + other.b * self.den,
            self.den * other.den,
            self.dstar,
        )

    def __neg__(self) -> "QuadElem":
        return QuadElem(-self.a, -self.b, self.den, self.dstar)

    def __sub__(self, other: "QuadElem") -> "QuadElem":
        return self + (-other)

    def __mul__(self, other: "QuadElem") -> "QuadElem":
        self._check_field(other)
        return QuadElem(
            self.a * other.a + self.dstar * self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.den * other.den,
            self.dstar,
        )

    def __truediv__(self, other: "QuadElem") -> "QuadElem":
        self._check_field(other)
        scaled_norm = other.a * other.a - self.dstar * other.b * other.b
        if scaled_norm == 0:
            raise ZeroDivisionError("division by zero in a quadratic field")
        # x / y = x * conj(y) * den_y^2 / (den_y^2 * N(y))
        return QuadElem(
            (self.a * other.a - self.dstar * self.b * other.b) * other.den,
            (self.b * other.a - self.a * other.b) * other.den,
            self.den * scaled_norm,
            self.dstar,
        )

    def conj(self) -> "QuadElem":
        return QuadElem(self.a, -self.b, self.den, self.dstar)

    def norm(self) -> int:
        """x * conj(x), always a rational integer"""
        value, remainder = divmod(self.a * self.a - self.dstar * self.b * self.b, self.den * self.den)
        if remainder:
            raise NotIntegralError(f"norm of {self}")
        return value

    def __str__(self) -> str:
        root = f"sqrt({self.dstar})"
        if self.b == 0:
            body = str(self.a)
        elif self.a == 0:
            body = root if self.b == 1 else "-" + root if self.b == -1 else f"{self.b}*{root}"
        else:
            mag = abs(self.b)
            tail = root if mag == 1 else f"{mag}*{root}"
            body = f"{self.a} {'+' if self.b > 0 else '-'} {tail}"
        if self.den == 1:
            return body
        return f"({body})/{self.den}"

    def to_dict(self) -> Dict[str, str]:
        """Decimal strings, the serialized form of a field element"""
        return {"a": str(self.a), "b": str(self.b), "den": str(self.den), "dstar": str(self.dstar)}


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion"""
    if p < 3 or not is_prime(p):
        raise PreconditionError(f"legendre needs an odd prime, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def cf_sqrt(d: int) -> CFExpansion:
    """
    Periodic continued fraction of sqrt(d) by the integer (m, q, a) recurrence.

    Example:
        >>> cf_sqrt(13).period
        (1, 1, 1, 1, 6)
    """
    if d < 1:
        raise PreconditionError(f"cf_sqrt needs a positive integer, got {d}")
    a0 = isqrt(d)
    if a0 * a0 == d:
        raise PerfectSquareError(d)
    m, q, a = 0, 1, a0
    period: List[int] = []
    while a != 2 * a0:
        m = a * q - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        period.append(a)
    return CFExpansion(d=d, a0=a0, period=tuple(period))


def convergents(expansion: CFExpansion, count: int) -> Iterator[Tuple[int, int]]:
    """First `count` convergents h/k of the expansion"""
    h_prev, h = 1, expansion.a0
    k_prev, k = 0, 1
    yield h, k
    emitted = 1
    while emitted < count:
        for term in expansion.period:
            if emitted >= count:
                return
            h_prev, h = h, term * h + h_prev
            k_prev, k = k, term * k + k_prev
            yield h, k
            emitted += 1


def _require_prime_mod4(p: int, residue: int) -> None:
    if not is_prime(p) or p % 4 != residue:
        raise PreconditionError(f"p must be a prime congruent to {residue} mod 4, got {p}")


@cached(cache=LRUCache(maxsize=1024), lock=Lock())
def fundamental_unit(p: int) -> PellUnit:
    """
    Smallest solution of x^2 - p*y^2 = +-4 with x, y > 0.

    y = 1 and y = 2 are checked directly. Larger odd solutions are convergents of sqrt(p)
    once p > 16, and even ones are twice a solution of x^2 - p*y^2 = +-1, which are
    convergents too; the scan stops as soon as the convergent denominators pass the
    best y found.
    """
    _require_prime_mod4(p, 1)
    candidates: List[Tuple[int, int, int]] = []
    for y in (1, 2):
        for sign in (-1, 1):
            x_sq = p * y * y + 4 * sign
            x = isqrt(x_sq) if x_sq > 0 else 0
            if x > 0 and x * x == x_sq:
                candidates.append((y, x, sign))

    expansion = cf_sqrt(p)
    for h, k in convergents(expansion, 2 * len(expansion.period) + 2):
        if candidates and k >= min(candidates)[0]:
            break
        value = h * h - p * k * k
        if value in (4, -4):
            candidates.append((k, h, value // 4))
        elif value in (1, -1):
            candidates.append((2 * k, 2 * h, value))

    y, x, sign = min(candidates)
    logger.debug("fundamental unit of Q(sqrt(%d)): (%d + %d*sqrt(%d))/2, norm %d", p, x, y, p, sign)
    return PellUnit(p=p, x=x, y=y, norm_sign=sign)


def unit_element(unit: PellUnit) -> QuadElem:
    """The unit as a field element"""
    return QuadElem(unit.x, unit.y, 2, unit.p)


@cached(cache=LRUCache(maxsize=1024), lock=Lock())
def class_number_imaginary(p: int) -> int:
    """Number of reduced primitive forms of discriminant -p"""
    _require_prime_mod4(p, 3)
    if p <= 3:
        raise PreconditionError(f"p must exceed 3, got {p}")
    h = 0
    for a in range(1, isqrt(p // 3) + 1):
        for b in range(-a + 1, a + 1):
            numerator = b * b + p
            if numerator % (4 * a):
                continue
            c = numerator // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if gcd(gcd(a, abs(b)), c) == 1:
                h += 1
    return h


def _analytic_class_number(p: int, unit: PellUnit, bits: int):
    with mp.workprec(bits):
        eps = (mp.mpf(unit.x) + unit.y * mp.sqrt(p)) / 2
        total = mp.fsum(legendre(a, p) * mp.log(mp.sin(mp.pi * a / p)) for a in range(1, p))
        value = -total / (2 * mp.log(eps))
        nearest = int(mp.nint(value))
        distance = float(abs(value - nearest))
        return value, nearest, distance


def class_number_real(p: int, settings: Settings = DEFAULT_SETTINGS) -> int:
    """
    Class number of Q(sqrt(p)) from h*log(eps) = -1/2 * sum chi(a) log sin(pi*a/p).

    Works at 16 + p bits; if the result misses the integrality window the precision is
    doubled and the sum redone before giving up.
    """
    return _class_number_real(p, settings.class_number_window, settings.class_number_retries)


@cached(cache=LRUCache(maxsize=1024), lock=Lock())
def _class_number_real(p: int, window: float, retries: int) -> int:
    _require_prime_mod4(p, 1)
    unit = fundamental_unit(p)
    bits = 16 + p
    value = None
    for attempt in range(retries + 1):
        value, nearest, distance = _analytic_class_number(p, unit, bits)
        if distance < window and nearest >= 1:
            return nearest
        logger.warning(
            "class number of Q(sqrt(%d)) off integer by %.3g at %d bits (attempt %d)",
            p, distance, bits, attempt + 1,
        )
        bits *= 2
    raise AnalyticInstabilityError(p, mp.nstr(value, 15))


def quadratic_residues(p: int) -> List[int]:
    return sorted({j * j % p for j in range(1, p)})


@cached(cache=LRUCache(maxsize=4096), lock=Lock())
def _coset_product(p: int, exponents: FrozenSet[int]) -> Tuple[int, ...]:
    """prod (1 - x^e) over the exponents, in Z[x]/(x^p - 1)"""
    vec = [0] * p
    vec[0] = 1
    for e in sorted(exponents):
        vec = [vec[i] - vec[(i - e) % p] for i in range(p)]
    return tuple(vec)


def gauss_period_relnorm(p: int, k: int) -> QuadElem:
    """
    Norm of 1 - zeta^k from Q(zeta_p) down to its quadratic subfield, exactly.

    The product over the residue coset is invariant under the residue subgroup, so its
    coefficient vector is c0 on x^0, c1 on the residues and c2 on the non-residues,
    i.e. c0 + c1*eta + c2*conj(eta). With eta + conj(eta) = -1 and eta - conj(eta) =
    sqrt(p*) that is ((2*c0 - c1 - c2) + (c1 - c2)*sqrt(p*)) / 2.
    """
    if p < 3 or not is_prime(p):
        raise PreconditionError(f"p must be an odd prime, got {p}")
    if k % p == 0:
        raise PreconditionError(f"k must be coprime to p, got k={k}, p={p}")
    residues = quadratic_residues(p)
    exponents = frozenset(k * j % p for j in residues)
    vec = _coset_product(p, exponents)

    residue_set = set(residues)
    on_residues = {vec[j] for j in residue_set}
    on_nonresidues = {vec[j] for j in range(1, p) if j not in residue_set}
    if len(on_residues) != 1 or len(on_nonresidues) != 1:
        raise CosetConstancyError(p, k)
    c0, c1, c2 = vec[0], on_residues.pop(), on_nonresidues.pop()
    dstar = p if p % 4 == 1 else -p
    return QuadElem(2 * c0 - c1 - c2, c1 - c2, 2, dstar)


def verify_real_relnorm(p: int, settings: Settings = DEFAULT_SETTINGS) -> RealRelNormCheck:
    """
    Match N(1 - zeta)/sqrt(p) against +-eps^m and compare |m| with the class number.

    Searches m outward from 0 in both directions, one exact multiplication or division
    by eps per step.
    """
    _require_prime_mod4(p, 1)
    h = class_number_real(p, settings)
    bound = 4 * h
    eps = unit_element(fundamental_unit(p))
    try:
        u = gauss_period_relnorm(p, 1) / QuadElem.sqrt(p)
    except NotIntegralError as e:
        raise NotUnitMultipleError(p, bound) from e

    def _unit_sign(x: QuadElem) -> int:
        return x.a if x.b == 0 and x.a in (1, -1) else 0

    if _unit_sign(u):
        return RealRelNormCheck(p=p, m=0, sign=_unit_sign(u), class_number=h, ok=h == 0)
    up = down = u
    for i in range(1, bound + 1):
        up = up / eps
        if _unit_sign(up):
            return RealRelNormCheck(p=p, m=i, sign=_unit_sign(up), class_number=h, ok=i == h)
        down = down * eps
        if _unit_sign(down):
            return RealRelNormCheck(p=p, m=-i, sign=_unit_sign(down), class_number=h, ok=i == h)
    raise NotUnitMultipleError(p, bound)


def imag_relnorm_sign(p: int, k: int) -> int:
    """(k/p) * (-1)^((h+1)/2) with h the class number of Q(sqrt(-p))"""
    h = class_number_imaginary(p)
    return legendre(k, p) * (-1) ** ((h + 1) // 2)


def verify_imag_relnorm(p: int, k: int) -> bool:
    """N(1 - zeta^k) down to Q(sqrt(-p)) equals s * sqrt(-p) with the predicted sign s"""
    _require_prime_mod4(p, 3)
    if p <= 3:
        raise PreconditionError(f"p must exceed 3, got {p}")
    if k % p == 0:
        raise PreconditionError(f"k must be coprime to p, got k={k}, p={p}")
    expected = QuadElem(0, imag_relnorm_sign(p, k), 1, -p)
    return gauss_period_relnorm(p, k) == expected


def relnorm_summary(p: int, k: int = 1, settings: Settings = DEFAULT_SETTINGS) -> Dict[str, Any]:
    """Relative norm together with what the closed form predicts, for display"""
    value = gauss_period_relnorm(p, k)
    summary: Dict[str, Any] = {"p": p, "k": k, "value": value}
    if p % 4 == 1:
        check = verify_real_relnorm(p, settings) if k == 1 else None
        unit = fundamental_unit(p)
        summary["unit"] = unit.to_dict()
        summary["class_number"] = class_number_real(p, settings)
        if check is not None:
            summary["m"] = check.m
            summary["ok"] = check.ok
    elif p > 3:
        summary["class_number"] = class_number_imaginary(p)
        summary["sign"] = imag_relnorm_sign(p, k)
        summary["ok"] = verify_imag_relnorm(p, k)
    return summary
