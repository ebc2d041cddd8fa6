"""Exact phased coproducts, global-phase quotients and the GP reconstruction."""
from .errors import PhasecatError
from .gp import FiniteGP, GPCategory, GPMorphism, GPObject
from .matcat import Matrix
from .phased import PhasedStructure, copair, find_phase, mediating_iso
from .quotient import QuotCategory, QuotMorphism, canonical_rep, eq_mod_phase
from .scalars import PhaseGroup, ScalarRing, gaussian, integers, parse_ring, prime_field, validate_phase_group

__all__ = [
    "FiniteGP", "GPCategory", "GPMorphism", "GPObject", "Matrix", "PhaseGroup", "PhasecatError",
    "PhasedStructure", "QuotCategory", "QuotMorphism", "ScalarRing", "canonical_rep", "copair",
    "eq_mod_phase", "find_phase", "gaussian", "integers", "mediating_iso", "parse_ring",
    "prime_field", "validate_phase_group",
]
