"""
Norms of integer polynomials evaluated at roots of unity.

Conventions:
    Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots alpha of f
    norm_primitive(r, n) = Res(Phi_n, r) = prod r(zeta) over primitive n-th roots zeta

Two routes compute the same number. The general one is the subresultant PRS against
Phi_n. For quadratics there is a much faster one: Res(x^d - 1, r) has a closed form in
terms of a linear recurrence, and Moebius inversion over the divisors of n turns those
into the primitive norm.
"""
import logging
from itertools import product as cartesian
from math import gcd
from threading import Lock
from typing import Dict, List, Optional

from cachetools import LRUCache, cached

from cyclonorm.core.exceptions import (
    InexactDivisionError,
    PreconditionError,
    UndefinedResultantError,
)
from cyclonorm.core.models import NormMethod, NormReport
from cyclonorm.core.polyring import (
    IntPoly,
    cyclotomic,
    divisors,
    is_prime,
    mobius,
    reciprocal,
)
from cyclonorm.core.sequences import lucas, quad_trace

logger = logging.getLogger(__name__)

# r1 and r2 of the two theorems, and the polynomial whose norm is the Lucas number
R1 = IntPoly((1, -1, 1))
R2 = IntPoly((1, -1, -1))
R_LUCAS = IntPoly((1, 1, -1))


def _exact_quotient(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise InexactDivisionError(f"{a} is not divisible by {b}")
    return q


def _divide_coeffs(p: IntPoly, d: int) -> IntPoly:
    if d == 1:
        return p
    return IntPoly(tuple(_exact_quotient(c, d) for c in p.coeffs))


def pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """Remainder of lc(b)^(deg a - deg b + 1) * a divided by b"""
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    lead = b.coeffs[-1]
    b_terms = [(j, c) for j, c in enumerate(b.coeffs[:-1]) if c]
    for i in range(len(rem) - 1, db - 1, -1):
        top = rem.pop()
        if lead != 1:
            rem = [lead * c for c in rem]
        if top:
            shift = i - db
            for j, c in b_terms:
                rem[shift + j] -= top * c
    return IntPoly(tuple(rem))


def resultant_prs(f: IntPoly, g: IntPoly) -> int:
    """
    Resultant by the subresultant polynomial remainder sequence.

    Constant arguments follow Res(c, g) = c^deg(g) (and Res(f, c) = c^deg(f)).

    Example:
        >>> resultant_prs(IntPoly((1, 0, 1)), IntPoly((-1, 0, 1)))
        4
    """
    if f.is_zero or g.is_zero:
        raise UndefinedResultantError()

    a, b = f, g
    sign = 1
    if a.degree < b.degree:
        a, b = b, a
        if a.degree % 2 and b.degree % 2:
            sign = -sign
    if b.degree == 0:
        return sign * b.lc ** a.degree

    ca, cb = a.content(), b.content()
    a, b = _divide_coeffs(a, ca), _divide_coeffs(b, cb)
    scale = ca ** b.degree * cb ** a.degree

    g_coef, h = 1, 1
    while True:
        delta = a.degree - b.degree
        if a.degree % 2 and b.degree % 2:
            sign = -sign
        rem = pseudo_remainder(a, b)
        a = b
        if rem.is_zero:
            return 0
        b = _divide_coeffs(rem, g_coef * h ** delta)
        g_coef = a.lc
        if delta:
            h = _exact_quotient(g_coef ** delta, h ** (delta - 1))
        if b.degree == 0:
            break

    da = a.degree
    h = _exact_quotient(b.lc ** da, h ** (da - 1))
    return sign * scale * h


@cached(cache=LRUCache(maxsize=65536), lock=Lock())
def res_unit_circle_quadratic(n: int, a: int, b: int, c: int) -> int:
    """
    prod g(zeta^k), k = 0..n-1, for g = a*x^2 + b*x + c, i.e. Res(x^n - 1, g).

    Equals a^n + c^n - t_n with t_n the trace from quad_trace.
    """
    if a == 0:
        raise PreconditionError("res_unit_circle_quadratic needs a != 0")
    if n < 1:
        raise PreconditionError(f"res_unit_circle_quadratic needs n >= 1, got {n}")
    return a ** n + c ** n - quad_trace(a, b, c, n)


def _divisor_product_norm(r: IntPoly, n: int) -> Optional[int]:
    """Moebius product of unit-circle resultants, or None when one of them vanishes"""
    a, b, c = r[2], r[1], r[0]
    numerator, denominator = 1, 1
    factors = [(d, res_unit_circle_quadratic(d, a, b, c)) for d in divisors(n)]
    for d, value in factors:
        if value == 0:
            logger.debug("Res(x^%d - 1, %s) = 0, divisor product refused for n=%d", d, r, n)
            return None
    for d, value in factors:
        mu = mobius(n // d)
        if mu == 1:
            numerator *= value
        elif mu == -1:
            denominator *= value
    return _exact_quotient(numerator, denominator)


@cached(cache=LRUCache(maxsize=16384), lock=Lock())
def norm_primitive(r: IntPoly, n: int) -> NormReport:
    """
    Field norm of r(zeta) from Q(zeta_n) down to Q.

    Quadratics go through the divisor product (a single recurrence term when n is prime);
    everything else, and any quadratic whose divisor product would hit a zero factor,
    goes through the PRS against Phi_n.
    """
    if n < 2:
        raise PreconditionError(f"norm_primitive needs n >= 2, got {n}")
    if r.is_zero:
        raise PreconditionError("norm_primitive needs a nonzero polynomial")

    if r.degree == 2:
        value = _divisor_product_norm(r, n)
        if value is not None:
            method = NormMethod.RECURRENCE if is_prime(n) else NormMethod.DIVISOR_PRODUCT
            return NormReport(n=n, poly=r, value=value, is_unit=value in (1, -1), method=method)
        logger.warning("divisor product refused for %s at n=%d, falling back to PRS", r, n)

    return norm_primitive_prs(r, n)


def norm_primitive_prs(r: IntPoly, n: int) -> NormReport:
    """Field norm through the PRS against Phi_n; the general route of norm_primitive"""
    if n < 2:
        raise PreconditionError(f"norm_primitive needs n >= 2, got {n}")
    value = resultant_prs(cyclotomic(n), r)
    return NormReport(n=n, poly=r, value=value, is_unit=value in (1, -1), method=NormMethod.PRS)


def product_all_roots(r: IntPoly, n: int) -> int:
    """prod r(zeta^k) for k = 1..n-1, as the product of primitive norms over d | n, d > 1"""
    if n < 2:
        raise PreconditionError(f"product_all_roots needs n >= 2, got {n}")
    result = 1
    for d in divisors(n)[1:]:
        result *= norm_primitive(r, d).value
    return result


def _require_coprime_to_six(n: int) -> None:
    if n <= 4 or gcd(n, 6) != 1:
        raise PreconditionError(f"n must exceed 4 and be coprime to 6, got {n}")


def theorem1_verify(n: int) -> bool:
    """1 - zeta + zeta^2: all-k product is 1 and the primitive norm is a unit"""
    _require_coprime_to_six(n)
    return product_all_roots(R1, n) == 1 and norm_primitive(R1, n).is_unit


def theorem2_verify(p: int) -> bool:
    """N(1 - zeta - zeta^2) = N(1 + zeta - zeta^2) = L(p) for an odd prime p"""
    if p < 3 or not is_prime(p):
        raise PreconditionError(f"p must be an odd prime, got {p}")
    target = lucas(p)
    return norm_primitive(R2, p).value == target and norm_primitive(R_LUCAS, p).value == target


def cosine_permutation_check(n: int) -> bool:
    """
    k -> fold(3k mod 2n) permutes 1..n-1, where fold(j) = min(j, 2n - j).

    cos(pi*j/n) only depends on fold(j), so this is the exact content of the claim that
    prod cos(3*pi*k/n) and prod cos(pi*k/n) share their factors.
    """
    _require_coprime_to_six(n)
    modulus = 2 * n
    images = sorted(min(j, modulus - j) for j in (3 * k % modulus for k in range(1, n)))
    return images == list(range(1, n))


def reindex_conjugate(r: IntPoly) -> IntPoly:
    """
    x^deg(r) * r(1/x), sign-normalized to a positive free term.

    Replacing zeta^k by zeta^-k permutes the primitive roots, so for odd prime n the
    norm is unchanged.
    """
    rev = reciprocal(r)
    return -rev if rev[0] < 0 else rev


def sign_polynomials(degree: int) -> List[IntPoly]:
    """Every polynomial of the given degree with coefficients +-1 and free term 1"""
    if degree < 1:
        raise PreconditionError(f"degree must be positive, got {degree}")
    return [IntPoly((1,) + signs) for signs in cartesian((1, -1), repeat=degree)]


def survey_norms(degree: int, n: int) -> List[NormReport]:
    """norm_primitive for every member of sign_polynomials(degree)"""
    return [norm_primitive(r, n) for r in sign_polynomials(degree)]


def cache_stats() -> Dict[str, int]:
    """Current sizes of the memo tables"""
    return {
        "norm_primitive": norm_primitive.cache.currsize,
        "res_unit_circle_quadratic": res_unit_circle_quadratic.cache.currsize,
        "cyclotomic": cyclotomic.cache.currsize,
    }
