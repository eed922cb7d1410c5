"""Exact characters of simple Lie algebras and their generating functions."""
from liechar.genfun import (
    GenFunResult,
    Recurrence,
    denominator,
    dim_genfun,
    generating_function,
    numerator,
    ray_genfun,
    recurrence_from_denominator,
    verify_pde,
)
from liechar.lie_core import Algebra, build_algebra, dimension, eigenvalue, parse_algebra, weyl_orbit
from liechar.operator import CSOperator, build_a, build_b, build_operator, delta_t
from liechar.poly import DiffOp2, Poly, RationalGF, TPoly, laurent_exact_div, series_coefficients
from liechar.solver import CharacterZ, character_z
from liechar.weyl import CharacterX, char_x, decompose_characters, rewrite_to_z

__version__ = "0.1.0"

__all__ = [
    "Algebra", "CSOperator", "CharacterX", "CharacterZ", "DiffOp2", "GenFunResult", "Poly",
    "RationalGF", "Recurrence", "TPoly", "build_a", "build_algebra", "build_b", "build_operator",
    "char_x", "character_z", "decompose_characters", "delta_t", "denominator", "dim_genfun",
    "dimension", "eigenvalue", "generating_function", "laurent_exact_div", "numerator",
    "parse_algebra", "ray_genfun", "recurrence_from_denominator", "rewrite_to_z",
    "series_coefficients", "verify_pde", "weyl_orbit",
]
