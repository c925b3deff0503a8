"""Exact C-finite sequence algebra and Prouhet-Tarry-Escott identity verification."""

from .cfinite import CFiniteSeq, InsufficientData, NonIntegralSeries, NotFound, expand, find_recurrence, hadamard
from .exactalg import Polynomial, RationalGF, parse_gf, parse_poly, resultant
from .pte import IntMultiset, PTEPair, chernick, euler_family, pte_degree

__all__ = [
    "CFiniteSeq",
    "InsufficientData",
    "IntMultiset",
    "NonIntegralSeries",
    "NotFound",
    "PTEPair",
    "Polynomial",
    "RationalGF",
    "chernick",
    "euler_family",
    "expand",
    "find_recurrence",
    "hadamard",
    "parse_gf",
    "parse_poly",
    "pte_degree",
    "resultant",
]
