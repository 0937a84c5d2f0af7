"""Exact computer algebra for necklace Lie bialgebras of quivers and their quantization.

Layers, bottom up: quivers and cyclic words (:mod:`necklace.quiver`),
h-polynomials (:mod:`necklace.scalars`), the Lie bialgebra
(:mod:`necklace.lie`), heighted links with the coloring coproduct and the
PBW rewriting engine (:mod:`necklace.hopf`), and the differential-operator
representation (:mod:`necklace.weyl`, :mod:`necklace.rep`).
"""

from .errors import (
    ComposabilityError,
    DimensionError,
    DivisibilityError,
    DomainError,
    ExpressionError,
    IntegralityError,
    NecklaceError,
    QuiverParseError,
)
from .expr import parse_algebra, parse_expression, parse_lie
from .lie import LieElement, LieTensor, bracket, cobracket, cyc, idem
from .quiver import Arrow, CyclicWord, Quiver, canonical_cycle, load_quiver, parse_quiver
from .scalars import HPoly

__all__ = [
    "Arrow",
    "ComposabilityError",
    "CyclicWord",
    "DimensionError",
    "DivisibilityError",
    "DomainError",
    "ExpressionError",
    "HPoly",
    "IntegralityError",
    "LieElement",
    "LieTensor",
    "NecklaceError",
    "Quiver",
    "QuiverParseError",
    "bracket",
    "canonical_cycle",
    "cobracket",
    "cyc",
    "idem",
    "load_quiver",
    "parse_algebra",
    "parse_expression",
    "parse_lie",
    "parse_quiver",
]
