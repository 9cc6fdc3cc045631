"""Sweeps over norms at roots of unity"""
from math import gcd
from typing import Any, Dict, List, Tuple

from cyclonorm.core.exceptions import PreconditionError
from cyclonorm.core.models import SweepRecord
from cyclonorm.core.norms import (
    R1,
    R2,
    cosine_permutation_check,
    norm_primitive,
    product_all_roots,
    sign_polynomials,
    theorem1_verify,
    theorem2_verify,
)
from cyclonorm.core.polyring import IntPoly, is_prime, primes_up_to
from cyclonorm.verifiers.base_verifier import BaseVerifier


def coprime_to_six(context: Dict[str, Any]) -> List[int]:
    """n in [min, max] with gcd(n, 6) = 1; the range itself must start at 5 or later"""
    return [n for n in BaseVerifier.bounded_range(context, 5) if gcd(n, 6) == 1]


class Theorem1Verifier(BaseVerifier):
    """1 - zeta + zeta^2 is a unit and its product over all k is 1"""

    command = "verify theorem1"

    def items(self, context: Dict[str, Any]) -> List[int]:
        return coprime_to_six(context)

    def check(self, item: int) -> SweepRecord:
        report = norm_primitive(R1, item)
        return SweepRecord(
            command=self.command,
            n=item,
            poly=R1.to_text(),
            value=product_all_roots(R1, item),
            unit=report.is_unit,
            method=report.method.value,
            ok=theorem1_verify(item),
        )


class Theorem2Verifier(BaseVerifier):
    """N(1 - zeta - zeta^2) = L(p) for odd primes p"""

    command = "verify theorem2"

    def items(self, context: Dict[str, Any]) -> List[int]:
        single = context.get("p")
        if single is not None:
            if single < 3 or not is_prime(single):
                raise PreconditionError(f"p must be an odd prime, got {single}")
            return [single]
        max_prime = context["max_prime"]
        if max_prime < 3:
            raise PreconditionError(f"--max-prime must be at least 3, got {max_prime}")
        return [p for p in primes_up_to(max_prime) if p > 2]

    def check(self, item: int) -> SweepRecord:
        return SweepRecord.from_report(self.command, norm_primitive(R2, item), ok=theorem2_verify(item))


class CosineVerifier(BaseVerifier):
    """k -> 3k permutes the cosine arguments pi*k/n up to sign"""

    command = "verify cosine"

    def items(self, context: Dict[str, Any]) -> List[int]:
        return coprime_to_six(context)

    def check(self, item: int) -> SweepRecord:
        return SweepRecord(command=self.command, n=item, method="fold_permutation",
                           ok=cosine_permutation_check(item))


class UnitSweepVerifier(BaseVerifier):
    """Primitive norm of one polynomial across a range of n"""

    command = "sweep unit"

    def items(self, context: Dict[str, Any]) -> List[Tuple[IntPoly, int]]:
        poly = context["poly"]
        if poly.is_zero:
            raise PreconditionError("sweep needs a nonzero polynomial")
        return [(poly, n) for n in self.bounded_range(context, 2)]

    def check(self, item: Tuple[IntPoly, int]) -> SweepRecord:
        poly, n = item
        return SweepRecord.from_report(self.command, norm_primitive(poly, n))


class SurveyVerifier(BaseVerifier):
    """Primitive norms at one n of every +-1 polynomial of a given degree"""

    command = "survey"

    def items(self, context: Dict[str, Any]) -> List[Tuple[IntPoly, int]]:
        n = context["n"]
        if n < 2:
            raise PreconditionError(f"n must be at least 2, got {n}")
        return [(poly, n) for poly in sign_polynomials(context["degree"])]

    def check(self, item: Tuple[IntPoly, int]) -> SweepRecord:
        poly, n = item
        return SweepRecord.from_report(self.command, norm_primitive(poly, n))
