"""
Lucas numbers and quadratic power-sum traces in O(log n) big-integer steps.
"""
from typing import Tuple

from cyclonorm.core.exceptions import PreconditionError
from cyclonorm.core.models import LucasValue

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]


def _fib_pair(m: int) -> Tuple[int, int]:
    """(F(m), F(m+1)) by fast doubling"""
    if m == 0:
        return 0, 1
    a, b = _fib_pair(m >> 1)
    c = a * (2 * b - a)  # F(2k)
    d = a * a + b * b  # F(2k+1)
    if m & 1:
        return d, c + d
    return c, d


def lucas(m: int) -> int:
    """
    m-th Lucas number, L(0)=2, L(1)=1.

    Uses L(m) = F(m-1) + F(m+1) = 2*F(m+1) - F(m), which stays valid at m = 0.

    Example:
        >>> lucas(11)
        199
    """
    if m < 0:
        raise PreconditionError(f"negative index {m}")
    f_m, f_next = _fib_pair(m)
    return 2 * f_next - f_m


def lucas_value(m: int) -> LucasValue:
    return LucasValue(index=m, value=lucas(m))


def _mat_mul(x: Matrix, y: Matrix) -> Matrix:
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def _mat_pow(m: Matrix, k: int) -> Matrix:
    result: Matrix = ((1, 0), (0, 1))
    while k:
        if k & 1:
            result = _mat_mul(result, m)
        m = _mat_mul(m, m)
        k >>= 1
    return result


def quad_trace(a: int, b: int, c: int, n: int) -> int:
    """
    Power sum t_n = u^n + v^n of the roots of y^2 + b*y + a*c.

    u, v are a*alpha, a*beta for the roots alpha, beta of a*x^2 + b*x + c, which is what
    makes Res(x^n - 1, a*x^2 + b*x + c) = a^n + c^n - t_n. Recurrence:
    t_0 = 2, t_1 = -b, t_n = -b*t_{n-1} - a*c*t_{n-2}, run by 2x2 matrix powering.
    """
    if a == 0:
        raise PreconditionError("quad_trace needs a != 0")
    if n < 0:
        raise PreconditionError(f"negative index {n}")
    if n == 0:
        return 2
    step: Matrix = ((-b, -a * c), (1, 0))
    (m00, m01), _ = _mat_pow(step, n - 1)
    return m00 * (-b) + m01 * 2
