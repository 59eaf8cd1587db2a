"""Exact computer algebra for transfer ideals.

Groebner bases, elimination and determinantal ideals, initial-ideal
combinatorics, a parametrization pipeline, and graded free resolution
checks, all with exact arithmetic over QQ or a prime field.
"""

from .domains import GF, QQ
from .groebner import (
    GroebnerBasis,
    IdealBasis,
    buchberger,
    elimination_ideal,
    ideal_contains,
    ideal_equal,
    initial_form,
    initial_ideal,
    normal_form,
)
from .orders import Block, Grevlex, Lex, WeightThen
from .paramcheck import verify_q2_conjecture
from .resolution import verify_resolution
from .rings import MultiDegree, Polynomial, PolyRing
from .transfer import TransferFamily, check_stability

__version__ = "0.1.0"

__all__ = [
    "GF",
    "QQ",
    "GroebnerBasis",
    "IdealBasis",
    "buchberger",
    "elimination_ideal",
    "ideal_contains",
    "ideal_equal",
    "initial_form",
    "initial_ideal",
    "normal_form",
    "Block",
    "Grevlex",
    "Lex",
    "WeightThen",
    "MultiDegree",
    "Polynomial",
    "PolyRing",
    "TransferFamily",
    "check_stability",
    "verify_q2_conjecture",
    "verify_resolution",
]
