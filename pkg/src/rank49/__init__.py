"""Rank criterion for the level-49 CM elliptic curve over quadratic fields:
ternary theta series, half-integral weight operators, twisted central
L-values, and the executable count-equality criterion."""

from .arith import Character, fundamental_discriminant, kronecker, squarefree_decompose
from .criterion import CriterionReport, classify, companion, predict, reduce_discriminant
from .lfun import LValueResult, l_value
from .qseries import QSeries
from .theta import TernaryForm, representation_count, theta_series, validate

__version__ = "0.1.0"

__all__ = [
    "Character",
    "CriterionReport",
    "LValueResult",
    "QSeries",
    "TernaryForm",
    "classify",
    "companion",
    "fundamental_discriminant",
    "kronecker",
    "l_value",
    "predict",
    "reduce_discriminant",
    "representation_count",
    "squarefree_decompose",
    "theta_series",
    "validate",
]
