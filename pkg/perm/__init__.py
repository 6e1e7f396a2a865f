"""Exact permutation arithmetic for symmetric groups."""

from rackit.perm.group import SymmetricGroup
from rackit.perm.ops import (
    canonical_representative,
    centralizer_order,
    class_data,
    compose,
    conjugate,
    cycle_type,
    cycles_of_length,
    format_cycle_type,
    format_permutation,
    inverse,
    iter_conjugates,
    iter_cycle_types,
    order,
    parse_cycle_type,
    parse_permutation,
    power,
    relabel_conjugator,
)
from rackit.perm.types import ClassData, CycleType, Permutation

__all__ = [
    # Types
    "Permutation",
    "CycleType",
    "ClassData",
    "SymmetricGroup",
    # Arithmetic
    "compose",
    "inverse",
    "conjugate",
    "power",
    "order",
    # Classes
    "cycle_type",
    "class_data",
    "canonical_representative",
    "centralizer_order",
    "iter_cycle_types",
    "iter_conjugates",
    "cycles_of_length",
    "relabel_conjugator",
    # Text
    "parse_permutation",
    "format_permutation",
    "parse_cycle_type",
    "format_cycle_type",
]
