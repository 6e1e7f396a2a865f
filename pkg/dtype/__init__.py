"""Families of type D_p and D_p^(2): verification and constructions."""

from rackit.dtype.families import (
    NINE_IDENTITIES,
    central_shift,
    enumerate_d3_pairs,
    nine_identity_d3sq,
    power_companion,
)
from rackit.dtype.symmetric import (
    is_odd_prime,
    six_transposition_sextuple,
    sym_d3_involution_plus,
    sym_d3_three_even_cycles,
    sym_d3_transposition_fixed,
    sym_d3sq_six_transpositions,
    sym_dp2_split,
)
from rackit.dtype.types import (
    D3SearchResult,
    Dp2Consequences,
    Dp2Family,
    DpFamily,
    DpTransporters,
    TransporterCocycleReport,
)
from rackit.dtype.verify import (
    d3_characterize,
    dp2_consequences,
    dp_transporters,
    extend_dp_seed,
    transporter_cocycle_report,
    verify_dp,
    verify_dp2,
    verify_dp2_members,
)

__all__ = [
    # Types
    "DpFamily",
    "Dp2Family",
    "DpTransporters",
    "TransporterCocycleReport",
    "Dp2Consequences",
    "D3SearchResult",
    # Verification
    "verify_dp",
    "verify_dp2",
    "verify_dp2_members",
    "d3_characterize",
    "extend_dp_seed",
    "nine_identity_d3sq",
    "NINE_IDENTITIES",
    # Consequences
    "dp2_consequences",
    "dp_transporters",
    "transporter_cocycle_report",
    # Constructions
    "power_companion",
    "central_shift",
    "enumerate_d3_pairs",
    "sym_dp2_split",
    "sym_d3_three_even_cycles",
    "sym_d3_involution_plus",
    "sym_d3_transposition_fixed",
    "sym_d3sq_six_transpositions",
    "six_transposition_sextuple",
    "is_odd_prime",
]
