"""cyclonorm: exact norms of integer polynomials at roots of unity"""

from .core.models import (
    NormMethod,
    NormReport,
    DominoTable,
    PellUnit,
    SweepRecord,
)
from .core.polyring import IntPoly, cyclotomic
from .core.domino import corollary_verify, domino_table, signed_sum
from .core.norms import norm_primitive, reindex_conjugate, resultant_prs, survey_norms
from .core.quadfield import QuadElem
from .utils.parser import parse_poly

__version__ = "1.0.0"

__all__ = [
    'NormMethod',
    'NormReport',
    'DominoTable',
    'PellUnit',
    'SweepRecord',
    'IntPoly',
    'cyclotomic',
    'corollary_verify',
    'domino_table',
    'signed_sum',
    'norm_primitive',
    'reindex_conjugate',
    'resultant_prs',
    'survey_norms',
    'QuadElem',
    'parse_poly',
]
