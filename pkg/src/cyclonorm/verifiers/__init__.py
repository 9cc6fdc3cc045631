"""
cyclonorm Verifiers
Sweep runners, one per family of identities
"""

from .base_verifier import BaseVerifier
from .norm_verifiers import (
    Theorem1Verifier,
    Theorem2Verifier,
    CosineVerifier,
    UnitSweepVerifier,
    SurveyVerifier,
)
from .domino_verifier import CorollaryVerifier
from .relnorm_verifiers import RealRelNormVerifier, ImagRelNormVerifier

__all__ = [
    'BaseVerifier',
    'Theorem1Verifier',
    'Theorem2Verifier',
    'CosineVerifier',
    'UnitSweepVerifier',
    'SurveyVerifier',
    'CorollaryVerifier',
    'RealRelNormVerifier',
    'ImagRelNormVerifier',
]
