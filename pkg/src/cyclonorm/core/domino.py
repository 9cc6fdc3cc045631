"""
Domino placements on a labeled cycle.

A placement of k dominos on the n-cycle is a set of k pairwise disjoint arcs
{i, i+1 mod n}. The closed form D(n, k) = n/(n-k) * C(n-k, k) is checked against an
exhaustive enumerator for small n.
"""
import logging
from collections import Counter
from itertools import zip_longest
from math import comb, gcd
from threading import Lock
from typing import FrozenSet, Iterator, List, Tuple

from cachetools import LRUCache

from cyclonorm.core.exceptions import InexactDivisionError, OutOfRangeError, PreconditionError
from cyclonorm.core.models import DominoTable

logger = logging.getLogger(__name__)

BRUTE_FORCE_MIN = 3
BRUTE_FORCE_MAX = 30
ROW_REUSE_GAP = 12

Arc = Tuple[int, int]


def domino_count(n: int, k: int) -> int:
    """
    D(n, k) from the closed form; n * C(n-k, k) is divided by (n - k) last.

    Example:
        >>> domino_count(17, 4)
        935
    """
    if n < 1:
        raise PreconditionError(f"cycle length must be positive, got {n}")
    if k < 0 or k > n // 2:
        raise OutOfRangeError(f"k={k} not in [0, {n // 2}] for n={n}")
    if k == 0:
        return 1
    value, remainder = divmod(n * comb(n - k, k), n - k)
    if remainder:
        raise InexactDivisionError(f"D({n}, {k}) closed form left remainder {remainder}")
    return value


def _stepped_row(n: int) -> List[int]:
    """D(n, k+1) = D(n, k) * (n-2k)(n-2k-1) / ((k+1)(n-k-1)), exact small divide per k"""
    counts = [1]
    value = 1
    for k in range(0, n // 2):
        value, remainder = divmod(value * ((n - 2 * k) * (n - 2 * k - 1)), (k + 1) * (n - k - 1))
        if remainder:
            raise InexactDivisionError(f"D({n}, {k + 1}) step left remainder {remainder}")
        counts.append(value)
    return counts


def _next_row(previous: List[int], before: List[int]) -> List[int]:
    """Row n from rows n-1 and n-2: D(n, k) = D(n-1, k) + D(n-2, k-1)"""
    return [a + b for a, b in zip_longest(previous, [0, *before], fillvalue=0)]


_rows: LRUCache = LRUCache(maxsize=8)
_rows_lock = Lock()


def _row(n: int) -> List[int]:
    with _rows_lock:
        if n in _rows:
            return _rows[n]
        start = next(
            (m for m in range(n - 1, max(n - ROW_REUSE_GAP, 2), -1) if m in _rows and m - 1 in _rows),
            None,
        )
        if start is None:
            logger.debug("no cached rows near n=%d, stepping", n)
            if n > 1:
                _rows[n - 1] = _stepped_row(n - 1)
            _rows[n] = _stepped_row(n)
            return _rows[n]
        before, previous = _rows[start - 1], _rows[start]
        for m in range(start + 1, n + 1):
            before, previous = previous, _next_row(previous, before)
            _rows[m] = previous
        return previous


def domino_table(n: int) -> DominoTable:
    """
    Closed-form table for every k.

    A row is extended from the two cached rows below it by additions when they are at
    most ROW_REUSE_GAP away; otherwise it is stepped from D(n, 0) with exact small
    divisions. Ascending sweeps therefore never divide.
    """
    if n < 1:
        raise PreconditionError(f"cycle length must be positive, got {n}")
    return DominoTable(n=n, counts=list(_row(n)))


def _path_starts(first: int, cells: int) -> Iterator[Tuple[int, ...]]:
    """Start cells of every domino placement on the path first, first+1, ..., first+cells-1"""
    last = first + cells - 1
    if cells < 2:
        yield ()
        return

    def walk(i: int) -> Iterator[Tuple[int, ...]]:
        if i >= last:
            yield ()
            return
        yield from walk(i + 1)
        for rest in walk(i + 2):
            yield (i,) + rest

    yield from walk(first)


def iter_placements(n: int) -> Iterator[FrozenSet[Arc]]:
    """
    Every placement on the n-cycle, each exactly once.

    Split on whether the wrap-around arc {n-1, 0} is used: if not, the cycle is the path
    0..n-1; if it is, cells n-1 and 0 are taken and the rest is the path 1..n-2.
    """
    if n < BRUTE_FORCE_MIN:
        raise OutOfRangeError(f"enumeration needs n >= {BRUTE_FORCE_MIN}, got {n}")
    for starts in _path_starts(0, n):
        yield frozenset((i, i + 1) for i in starts)
    wrap = (n - 1, 0)
    for starts in _path_starts(1, n - 2):
        yield frozenset([wrap, *((i, i + 1) for i in starts)])


def domino_enumerate(n: int) -> DominoTable:
    """Brute-force table, bucketed by number of dominos"""
    if not BRUTE_FORCE_MIN <= n <= BRUTE_FORCE_MAX:
        raise OutOfRangeError(f"brute force supports {BRUTE_FORCE_MIN} <= n <= {BRUTE_FORCE_MAX}, got {n}")
    buckets: Counter = Counter(len(placement) for placement in iter_placements(n))
    logger.debug("enumerated %d placements on the %d-cycle", sum(buckets.values()), n)
    return DominoTable(n=n, counts=[buckets.get(k, 0) for k in range(n // 2 + 1)])


def signed_sum(n: int) -> int:
    """sum over k of (-1)^k D(n, k)"""
    if n < 3:
        raise PreconditionError(f"signed_sum needs n >= 3, got {n}")
    return domino_table(n).signed_sum()


def require_coprime_to_six(n: int) -> None:
    if n < 5 or gcd(n, 6) != 1:
        raise PreconditionError(f"n must be at least 5 and coprime to 6, got {n}")


def table_balanced(table: DominoTable) -> bool:
    return table.even_nonzero_sum() == table.odd_sum()


def corollary_verify(n: int) -> bool:
    """Even nonzero numbers of dominos and odd numbers of dominos are equally many"""
    require_coprime_to_six(n)
    return table_balanced(domino_table(n))
