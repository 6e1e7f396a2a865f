"""Invertible matrices over prime fields and their type-D_3 families."""

from rackit.matgrp.families import (
    gl2_d3_family,
    gln_d3sq_family,
    gln_r2_criterion,
    normalize_diagonal,
    swap_matrix,
)
from rackit.matgrp.group import GeneralLinearGroup, diagonal_class_data, gl_order
from rackit.matgrp.ops import (
    block_diagonal,
    det_char_value,
    det_character,
    diagonal_matrix,
    dlog_table,
    identity_matrix,
    mat_det,
    mat_inv,
    mat_mul,
    in_diagonal_class,
    mat_pow,
    mat_rank,
    primitive_cube_root,
)
from rackit.matgrp.types import DetCharacter, DiagonalClassData, GLCriterionReport, PrimeFieldMatrix

__all__ = [
    # Types
    "PrimeFieldMatrix",
    "DetCharacter",
    "DiagonalClassData",
    "GLCriterionReport",
    "GeneralLinearGroup",
    # Arithmetic
    "mat_mul",
    "mat_inv",
    "mat_det",
    "mat_pow",
    "mat_rank",
    "in_diagonal_class",
    "identity_matrix",
    "diagonal_matrix",
    "block_diagonal",
    # Characters
    "det_character",
    "det_char_value",
    "dlog_table",
    "primitive_cube_root",
    # Classes and families
    "gl_order",
    "diagonal_class_data",
    "gl2_d3_family",
    "gln_d3sq_family",
    "gln_r2_criterion",
    "normalize_diagonal",
    "swap_matrix",
]
