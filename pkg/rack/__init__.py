"""Finite racks as multiplication tables."""

from rackit.rack.checks import check_morphism, check_rack, is_abelian_subrack, is_closed, row_profile
from rackit.rack.constructions import (
    OCTAHEDRAL_TABLE,
    conjugation_closure,
    conjugation_rack,
    dihedral_rack,
    dihedral_square_rack,
    octahedral_rack,
    parse_rack_name,
    square_rack,
    subrack,
    trivial_rack,
)
from rackit.rack.iso import embed_dihedral_square, find_isomorphism
from rackit.rack.types import RackMorphism, RackTable


def rack_to_json(t: RackTable) -> dict:
    return t.to_json()


def rack_from_json(data: dict, name: str = "") -> RackTable:
    return RackTable.from_json(data, name=name)


__all__ = [
    # Types
    "RackTable",
    "RackMorphism",
    # Constructions
    "OCTAHEDRAL_TABLE",
    "trivial_rack",
    "dihedral_rack",
    "dihedral_square_rack",
    "octahedral_rack",
    "square_rack",
    "conjugation_rack",
    "subrack",
    "conjugation_closure",
    "parse_rack_name",
    # Checks
    "check_rack",
    "check_morphism",
    "is_abelian_subrack",
    "is_closed",
    "row_profile",
    # Isomorphism
    "find_isomorphism",
    "embed_dihedral_square",
    # JSON
    "rack_to_json",
    "rack_from_json",
]
