"""
Exact integer polynomial arithmetic and cyclotomic polynomials.

Everything in here works on Python ints end to end; no value ever passes through a
float or a Fraction. IntPoly is immutable and safe to share between threads.
"""
import logging
from dataclasses import dataclass, field
from math import gcd, isqrt
from threading import Lock
from typing import Dict, List, Tuple, Union

from cachetools import LRUCache, cached

from cyclonorm.core.exceptions import InexactDivisionError, PreconditionError

logger = logging.getLogger(__name__)

# degree of the zero polynomial; compares below every integer degree
NEG_INF = float("-inf")

Degree = Union[int, float]


@dataclass(frozen=True)
class IntPoly:
    """
    Dense univariate polynomial with integer coefficients.

    coeffs[i] is the coefficient of x^i. Trailing zeros are stripped on construction,
    so the zero polynomial is the empty tuple.
    """

    coeffs: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        values = tuple(self.coeffs)
        for c in values:
            if isinstance(c, bool) or not isinstance(c, int):
                raise ValueError(f"IntPoly coefficients must be integers, got {c!r}")
        end = len(values)
        while end and values[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", values[:end])

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        if degree < 0:
            raise ValueError("monomial degree must be non-negative")
        return cls((0,) * degree + (coeff,))

    @classmethod
    def x_pow_minus_one(cls, n: int) -> "IntPoly":
        """x^n - 1"""
        return cls((-1,) + (0,) * (n - 1) + (1,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)"""
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        """Non-negative gcd of all coefficients"""
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return add(self, other)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return sub(self, other)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        return mul(self, other)

    def __call__(self, a: int) -> int:
        return eval_int(self, a)

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """
        Canonical text form, ascending degree.

        Example:
            >>> IntPoly((1, -1, 1)).to_text()
            '1 - x + x^2'
        """
        if not self.coeffs:
            return "0"
        parts: List[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            magnitude = abs(c)
            if i == 0:
                body = str(magnitude)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if magnitude == 1 else f"{magnitude}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


ZERO = IntPoly()
ONE = IntPoly((1,))
X = IntPoly((0, 1))


def add(p: IntPoly, q: IntPoly) -> IntPoly:
    """Coefficientwise sum"""
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return IntPoly(tuple(out))


def sub(p: IntPoly, q: IntPoly) -> IntPoly:
    return add(p, -q)


def scale(p: IntPoly, c: int) -> IntPoly:
    return IntPoly(tuple(c * v for v in p.coeffs))


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    """Exact convolution product"""
    if p.is_zero or q.is_zero:
        return ZERO
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    q_terms = [(j, c) for j, c in enumerate(q.coeffs) if c]
    for i, a in enumerate(p.coeffs):
        if not a:
            continue
        for j, b in q_terms:
            out[i + j] += a * b
    return IntPoly(tuple(out))


def divmod_poly(p: IntPoly, q: IntPoly) -> Tuple[IntPoly, IntPoly]:
    """
    Long division over the integers.

    Raises InexactDivisionError as soon as a quotient coefficient would be non-integral,
    which can only happen when q is not monic.
    """
    if q.is_zero:
        raise PreconditionError("division by the zero polynomial")
    if len(p.coeffs) < len(q.coeffs):
        return ZERO, p

    rem = list(p.coeffs)
    dq = len(q.coeffs) - 1
    lead = q.coeffs[-1]
    q_terms = [(j, c) for j, c in enumerate(q.coeffs[:-1]) if c]
    quot = [0] * (len(rem) - dq)

    for i in range(len(quot) - 1, -1, -1):
        top = rem[i + dq]
        if not top:
            continue
        s, r = divmod(top, lead)
        if r:
            raise InexactDivisionError(f"quotient coefficient of x^{i} is not integral")
        quot[i] = s
        rem[i + dq] = 0
        for j, c in q_terms:
            rem[i + j] -= s * c

    return IntPoly(tuple(quot)), IntPoly(tuple(rem[:dq]))


def exact_div(p: IntPoly, q: IntPoly) -> IntPoly:
    """Return s with q*s == p, or raise InexactDivisionError"""
    quotient, remainder = divmod_poly(p, q)
    if not remainder.is_zero:
        raise InexactDivisionError(f"remainder {remainder.to_text()}")
    return quotient


def eval_int(p: IntPoly, a: int) -> int:
    """Horner evaluation at an integer"""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * a + c
    return acc


def reciprocal(p: IntPoly) -> IntPoly:
    """x^deg(p) * p(1/x), i.e. the coefficient list reversed"""
    return IntPoly(tuple(reversed(p.coeffs)))


# ---------- elementary number theory ----------

def factorize(n: int) -> Dict[int, int]:
    """Prime factorization by trial division, {prime: exponent}"""
    if n < 1:
        raise PreconditionError(f"factorize needs n >= 1, got {n}")
    factors: Dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_up_to(limit: int) -> List[int]:
    """Sieve of Eratosthenes"""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def mobius(n: int) -> int:
    """Moebius function"""
    if n < 1:
        raise PreconditionError(f"mobius needs n >= 1, got {n}")
    factors = factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


def divisors(n: int) -> List[int]:
    """All positive divisors of n, ascending"""
    if n < 1:
        raise PreconditionError(f"divisors needs n >= 1, got {n}")
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return small + large


@cached(cache=LRUCache(maxsize=1024), lock=Lock())
def cyclotomic(n: int) -> IntPoly:
    """
    n-th cyclotomic polynomial.

    Built as (x^n - 1) divided in turn by every Phi_d with d | n, d < n. Each step is an
    exact division by a monic polynomial, so the computation never leaves Z[x].
    """
    if n < 1:
        raise PreconditionError(f"cyclotomic needs n >= 1, got {n}")
    poly = IntPoly.x_pow_minus_one(n)
    for d in divisors(n)[:-1]:
        poly = exact_div(poly, cyclotomic(d))
    if poly.degree != euler_phi(n):
        raise InexactDivisionError(f"cyclotomic({n}) has degree {poly.degree}, expected {euler_phi(n)}")
    logger.debug("cyclotomic(%d) built, degree %s", n, poly.degree)
    return poly

