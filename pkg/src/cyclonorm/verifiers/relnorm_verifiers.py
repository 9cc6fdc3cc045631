"""Sweeps over relative norms of 1 - zeta_p^k down to the quadratic subfield"""
import logging
from typing import Any, Dict, List, Tuple

from cyclonorm.core.exceptions import PreconditionError
from cyclonorm.core.models import SweepRecord
from cyclonorm.core.polyring import ONE, IntPoly, primes_up_to
from cyclonorm.core.quadfield import gauss_period_relnorm, verify_imag_relnorm, verify_real_relnorm
from cyclonorm.verifiers.base_verifier import BaseVerifier

logger = logging.getLogger(__name__)


def one_minus_x_pow(k: int) -> str:
    return (ONE - IntPoly.monomial(k)).to_text()


class RealRelNormVerifier(BaseVerifier):
    """p = 1 mod 4: N(1 - zeta) = +-sqrt(p) * eps^m with |m| the class number"""

    command = "verify relnorm"

    def items(self, context: Dict[str, Any]) -> List[int]:
        max_prime = context["max_prime"]
        if max_prime < 5:
            raise PreconditionError(f"--max-prime must be at least 5 for real fields, got {max_prime}")
        return [p for p in primes_up_to(max_prime) if p % 4 == 1]

    def check(self, item: int) -> SweepRecord:
        result = verify_real_relnorm(item, self.settings)
        if not result.ok:
            logger.warning("p=%d: m=%d but h=%d", item, result.m, result.class_number)
        return SweepRecord(
            command=self.command,
            n=item,
            poly=one_minus_x_pow(1),
            value={
                "relnorm": gauss_period_relnorm(item, 1),
                "sign": result.sign,
                "m": result.m,
                "class_number": result.class_number,
            },
            method="gauss_period",
            ok=result.ok,
        )


class ImagRelNormVerifier(BaseVerifier):
    """p = 3 mod 4, p > 3: N(1 - zeta^k) = (k/p) * (-1)^((h+1)/2) * sqrt(-p)"""

    command = "verify relnorm"

    def items(self, context: Dict[str, Any]) -> List[Tuple[int, int]]:
        max_prime = context["max_prime"]
        if max_prime < 7:
            raise PreconditionError(f"--max-prime must be at least 7 for imaginary fields, got {max_prime}")
        primes = [p for p in primes_up_to(max_prime) if p % 4 == 3 and p > 3]
        if context.get("all_k"):
            return [(p, k) for p in primes for k in range(1, p)]
        return [(p, 1) for p in primes]

    def check(self, item: Tuple[int, int]) -> SweepRecord:
        p, k = item
        return SweepRecord(
            command=self.command,
            n=p,
            poly=one_minus_x_pow(k),
            value=gauss_period_relnorm(p, k),
            method="gauss_period",
            ok=verify_imag_relnorm(p, k),
        )
