"""Regularity, integral closure and linear quotients of monomial ideals."""

from .ideal import (
    DimensionMismatchError,
    Monomial,
    MonomialIdeal,
    ResourceLimitError,
    UnitIdealError,
    ZeroIdealError,
    colon,
    ideal_sum,
    intersect,
    is_equigenerated,
    minimalize,
    power,
    product,
)
from .textio import format_ideal, parse_ideal

__all__ = [
    "DimensionMismatchError",
    "Monomial",
    "MonomialIdeal",
    "ResourceLimitError",
    "UnitIdealError",
    "ZeroIdealError",
    "colon",
    "format_ideal",
    "ideal_sum",
    "intersect",
    "is_equigenerated",
    "minimalize",
    "parse_ideal",
    "power",
    "product",
]
