"""Families of type 𝔒 and 𝔒^(2): verification, consequences and constructions."""

from rackit.otype.symmetric import (
    EIGHT_CYCLE_WORDS,
    S4_SEXTUPLE,
    EightCycleResult,
    fourth_root_candidates,
    octa_refutation_search,
    s4_sextuple,
    sym_o2_8cycle,
)
from rackit.otype.transporters import (
    WordTable,
    octa_subspace_cocycle,
    octa_transporter_suite,
    octa_transporters,
)
from rackit.otype.types import (
    Octa2Family,
    OctaCocycleReport,
    OctaConsequences,
    OctaFamily,
    OctaTransporterReport,
    OctaTransporters,
    RefutationResult,
    SigmaTauConsequences,
    TwistWord,
)
from rackit.otype.verify import (
    REDUCED_IDENTITIES,
    conjugate_family,
    octa,
    octa_consequences,
    octa_from_reduced,
    sigma_tau_consequences,
    verify_octa,
    verify_octa2,
)

__all__ = [
    # Types
    "OctaFamily",
    "Octa2Family",
    "OctaTransporters",
    "OctaConsequences",
    "SigmaTauConsequences",
    "OctaTransporterReport",
    "OctaCocycleReport",
    "TwistWord",
    "RefutationResult",
    "EightCycleResult",
    # Verification
    "octa",
    "verify_octa",
    "octa_from_reduced",
    "verify_octa2",
    "REDUCED_IDENTITIES",
    # Consequences
    "octa_consequences",
    "sigma_tau_consequences",
    "octa_transporters",
    "octa_transporter_suite",
    "octa_subspace_cocycle",
    "WordTable",
    # Constructions
    "conjugate_family",
    "s4_sextuple",
    "S4_SEXTUPLE",
    "sym_o2_8cycle",
    "EIGHT_CYCLE_WORDS",
    "octa_refutation_search",
    "fourth_root_candidates",
]
