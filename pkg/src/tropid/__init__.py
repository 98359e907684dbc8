"""Identity checking for the bicyclic monoid and 2x2 upper-triangular tropical matrices."""

from .bicyclic import BicyclicElement, b_eval, b_mul, random_falsify, rewrite_oracle
from .decide import (
    CapExceeded,
    Verdict,
    check_condition,
    holds,
    holds_bicyclic,
    holds_u2t,
    partners_bicyclic,
    shleifer_scan,
    short_isoterm_scan,
    theorem_replay,
    verify_embedding,
)
from .polyfun import Cone, MaxPlusPoly, canonicalize, dominated, equivalent
from .tropical import NEG_INF, TropMatrix, parse_matrix
from .words import Identity, parse_identity, parse_word

__version__ = "0.1.0"

__all__ = [
    "BicyclicElement", "CapExceeded", "Cone", "Identity", "MaxPlusPoly", "NEG_INF",
    "TropMatrix", "Verdict", "b_eval", "b_mul", "canonicalize", "check_condition",
    "dominated", "equivalent", "holds", "holds_bicyclic", "holds_u2t", "parse_identity",
    "parse_matrix", "parse_word", "partners_bicyclic", "random_falsify", "rewrite_oracle",
    "shleifer_scan", "short_isoterm_scan", "theorem_replay", "verify_embedding",
]
