"""Posets, alternating sign matrices, the octahedron recurrence and the F-polynomial routes."""
from .asm import ASM, asm_to_ideal, enumerate_asms, height_function, ideal_to_asm, is_asm, skew_summation
from .collapse import collapse_determinant_check, collapse_matrix, collapse_run, ys_from_sides
from .dodgson import determinant, dodgson_F, dodgson_matrix, sigma, specialized_F
from .fpoly import F_asm, F_ideals, X_matrix, asm_monomial, compatible_asm, compatible_pairs, m, m0
from .octahedron import OctaGrid, mf_grid, octahedron_value, robbins_rumsey
from .posets import OrderIdeal, Poset, build_P, build_Q, compatible, count_ideals, enumerate_ideals

__all__ = [
    "ASM", "asm_to_ideal", "enumerate_asms", "height_function", "ideal_to_asm", "is_asm", "skew_summation",
    "collapse_determinant_check", "collapse_matrix", "collapse_run", "ys_from_sides",
    "determinant", "dodgson_F", "dodgson_matrix", "sigma", "specialized_F",
    "F_asm", "F_ideals", "X_matrix", "asm_monomial", "compatible_asm", "compatible_pairs", "m", "m0",
    "OctaGrid", "mf_grid", "octahedron_value", "robbins_rumsey",
    "OrderIdeal", "Poset", "build_P", "build_Q", "compatible", "count_ideals", "enumerate_ideals",
]
