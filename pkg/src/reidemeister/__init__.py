"""Reidemeister numbers and spectra of A^n x|_theta Z for A = Q or Z[1/p]."""

from .cokernel import INF, ExtNat, coker_card_formula, coker_card_oracle
from .groups import (
    AutoDesc, GroupDesc, IncompatibleAutomorphism, ReidemeisterResult,
    check_automorphism, reidemeister_abelian, reidemeister_semidirect,
)
from .matrices import Matrix, det, parse_matrix, smith_normal_form
from .rings import Q, RingDesc, prime_to_p_part, z_localized

__version__ = "0.1.0"

__all__ = [
    "INF", "ExtNat", "coker_card_formula", "coker_card_oracle",
    "AutoDesc", "GroupDesc", "IncompatibleAutomorphism", "ReidemeisterResult",
    "check_automorphism", "reidemeister_abelian", "reidemeister_semidirect",
    "Matrix", "det", "parse_matrix", "smith_normal_form",
    "Q", "RingDesc", "prime_to_p_part", "z_localized",
]
