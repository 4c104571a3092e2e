"""Characteristic polynomials of simple supersingular abelian varieties over F_q."""

from .census import count, exists_dimension, gap_dimensions, sophie_germain_gap, Verdict
from .htclassify import IsogenyClassRecord, enumerate_classes
from .polyarith import IntegerPolynomial
from .weilmin import CaseTag, FieldParameters

__all__ = [
    "CaseTag",
    "FieldParameters",
    "IntegerPolynomial",
    "IsogenyClassRecord",
    "Verdict",
    "count",
    "enumerate_classes",
    "exists_dimension",
    "gap_dimensions",
    "sophie_germain_gap",
]
