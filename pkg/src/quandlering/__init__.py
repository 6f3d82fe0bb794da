"""Quandles, quandle rings and their idempotents."""
from .quandle import (
    AxiomViolation,
    Quandle,
    QuandleMap,
    conj_quandle,
    core_quandle,
    dihedral_quandle,
    is_commutative,
    is_covering,
    is_homomorphism,
    is_involutory,
    is_isomorphic,
    is_latin,
    is_medial,
    load_quandle,
    trivial_quandle,
    validate_table,
)
from .coeffs import INTEGERS, MOD2, RATIONALS, Polynomial, PolynomialRing
from .ring import RingElement, augmentation, basis, induced_map, parse_element
from .catalog import catalog_entries, get_entry

__version__ = "0.1.0"
