"""Sweep of the even/odd domino balance on cycles"""
from typing import Any, Dict, List

from cyclonorm.core.domino import domino_table, require_coprime_to_six, table_balanced
from cyclonorm.core.models import SweepRecord
from cyclonorm.verifiers.base_verifier import BaseVerifier
from cyclonorm.verifiers.norm_verifiers import coprime_to_six


class CorollaryVerifier(BaseVerifier):
    """
    For n coprime to 6, placements with an even nonzero number of dominos are exactly
    as many as those with an odd number. The record value is [even_nonzero, odd].
    """

    command = "verify corollary"

    def items(self, context: Dict[str, Any]) -> List[int]:
        return coprime_to_six(context)

    def check(self, item: int) -> SweepRecord:
        require_coprime_to_six(item)
        table = domino_table(item)
        return SweepRecord(
            command=self.command,
            n=item,
            value=[table.even_nonzero_sum(), table.odd_sum()],
            method="closed_form",
            ok=table_balanced(table),
        )
