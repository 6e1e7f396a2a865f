"""Cocycles, braidings and Yetter-Drinfeld cocycles over racks."""

from rackit.braided.braiding import (
    braiding_apply,
    check_braid_equation,
    check_bvs_isomorphism,
    is_diagonal_type,
)
from rackit.braided.cocycle import check_cocycle, constant_cocycle, restrict_cocycle
from rackit.braided.types import Character, Cocycle, CosetSection, RootOfUnity
from rackit.braided.yd import CharacterEvaluator, check_section, evaluate_character, yd_cocycle

__all__ = [
    # Types
    "RootOfUnity",
    "Cocycle",
    "CosetSection",
    "Character",
    # Cocycles
    "constant_cocycle",
    "check_cocycle",
    "restrict_cocycle",
    # Braiding
    "braiding_apply",
    "check_braid_equation",
    "is_diagonal_type",
    "check_bvs_isomorphism",
    # Yetter-Drinfeld
    "CharacterEvaluator",
    "evaluate_character",
    "check_section",
    "yd_cocycle",
]
