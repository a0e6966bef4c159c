"""Semistandard skyline fillings, a Bender-Knuth-type involution on them, and
Demazure operators acting on their generating polynomials."""

from .core import (
    Cell,
    Composition,
    Filling,
    InvalidFillingError,
    ParameterError,
    StructureError,
    ValidationReport,
    check_non_attacking,
    compositions,
    enumerate_ssf,
    lambda_of,
    validate_filling,
    weight,
)
from .demazure import divided_difference, key_combinatorial, key_recursive, pi, swap_vars
from .derivation import (
    DerivedFamily,
    VerificationReport,
    bender_knuth_check,
    derived_fillings,
    first_ascent,
    generate_inductive,
    inverse_derived,
    verify_pi_identity,
)
from .involution import Classification, EntryClass, Kind, classify, free_counts, lower, phi, phi_row, raise_
from .polynomial import Polynomial

__version__ = "0.1.0"
