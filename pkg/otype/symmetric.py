"""Octahedral families in symmetric groups.

The 8-cycle construction instantiates fixed cycle words on the points of
the 8-cycle(s) of σ; the refutation search scans N-cycles through the
canonical N-cycle with the fourth-power law as a filter.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, Tuple

from rackit.errors import DefectError, InputError
from rackit.otype.types import Octa2Family, OctaFamily, RefutationResult
from rackit.otype.verify import octa_from_reduced, verify_octa, verify_octa2
from rackit.perm import ops
from rackit.perm.group import SymmetricGroup
from rackit.perm.types import Permutation

logger = logging.getLogger(__name__)

# Octahedral family of the 4-cycles of S_4.
S4_SEXTUPLE = (
    "(1 2 3 4)",
    "(1 2 4 3)",
    "(1 3 2 4)",
    "(1 3 4 2)",
    "(1 4 2 3)",
    "(1 4 3 2)",
)

# Positions into i_1..i_8 of the 8-cycle; every word is multiplied by α.
EIGHT_CYCLE_WORDS = {
    "sigma2": (1, 3, 8, 6, 5, 7, 4, 2),
    "sigma3": (1, 8, 2, 7, 5, 4, 6, 3),
    "sigma4": (1, 6, 4, 3, 5, 2, 8, 7),
    "sigma5": (1, 7, 6, 8, 5, 3, 2, 4),
    "tau2": (1, 7, 8, 2, 5, 3, 4, 6),
    "tau3": (1, 4, 2, 3, 5, 8, 6, 7),
    "tau4": (1, 2, 4, 7, 5, 6, 8, 3),
    "tau5": (1, 3, 6, 4, 5, 7, 2, 8),
}

# σ_6, τ_1, τ_6 as A^k·α.
EIGHT_CYCLE_POWERS = {"sigma6": 3, "tau1": 5, "tau6": -1}


def s4_sextuple() -> OctaFamily[Permutation]:
    """The six 4-cycles of S_4 in octahedral order, verified."""
    group = SymmetricGroup(4)
    check = verify_octa(group, [group.parse(text) for text in S4_SEXTUPLE])
    if not check.ok:
        raise DefectError("octa-s4", check.diagnosis.reason)
    return check.family


@dataclass(frozen=True)
class EightCycleResult:
    """Verified 𝔒^(2) family of the 8-cycle construction and its power flags."""
    family: Octa2Family[Permutation]
    case: str
    alpha: Permutation
    sigma6_is_cube: bool
    tau1_is_fifth_power: bool
    tau6_is_inverse: bool

    @property
    def power_case(self) -> bool:
        return self.sigma6_is_cube and self.tau1_is_fifth_power


def sym_o2_8cycle(sigma: Permutation, allow_remainder: bool = False) -> EightCycleResult:
    """
    𝔒^(2) family from the one or two 8-cycles of σ.

    With A the product of the 8-cycle(s) and α := σ·A⁻¹, each displayed
    word W gives W·α, and σ_6 = A³α, τ_1 = A⁵α, τ_6 = A⁻¹α. When α² = 1
    these are σ³, σ⁵ and σ⁻¹; with allow_remainder the power identities
    are reported as flags instead of being required.

    Raises:
        InputError: If σ has no 8-cycle, three or more 8-cycles (use the
            three-even-cycles D_3 construction), or, without
            allow_remainder, parts other than 1, 2 and 8.
        DefectError: If the family or a power identity fails.
    """
    t = ops.cycle_type(sigma)
    n8 = t.n(8)
    if n8 == 0:
        raise InputError(f"{sigma} has no 8-cycle")
    if n8 >= 3:
        raise InputError(f"{sigma} has {n8} 8-cycles; use the three-even-cycles D_3 construction")
    if not allow_remainder and any(j not in (1, 2, 8) for j in t.lengths()):
        raise InputError(f"Cycle type {t} has parts other than 1, 2 and 8")

    m = sigma.degree
    cycles = ops.cycles_of_length(sigma, 8)
    a8 = Permutation.from_cycles(m, cycles)
    alpha = sigma * a8.inverse()

    def build(positions: Tuple[int, ...]) -> Permutation:
        word = [tuple(c[k - 1] for k in positions) for c in cycles]
        return Permutation.from_cycles(m, word) * alpha

    members: Dict[str, Permutation] = {"sigma1": sigma}
    members.update({name: build(pos) for name, pos in EIGHT_CYCLE_WORDS.items()})
    members.update({name: ops.power(a8, k) * alpha for name, k in EIGHT_CYCLE_POWERS.items()})

    group = SymmetricGroup(m)
    sigmas = [members[f"sigma{i}"] for i in range(1, 7)]
    taus = [members[f"tau{i}"] for i in range(1, 7)]
    g = group.find_conjugator(sigmas[0], taus[0])
    check = verify_octa2(group, sigmas, taus, g)
    if not check.ok:
        raise DefectError("octa2-8cycle", check.diagnosis.reason)

    flags = dict(
        sigma6_is_cube=members["sigma6"] == ops.power(sigma, 3),
        tau1_is_fifth_power=members["tau1"] == ops.power(sigma, 5),
        tau6_is_inverse=members["tau6"] == sigma.inverse(),
    )
    if not allow_remainder and not all(flags.values()):
        raise DefectError("octa2-8cycle", f"power identities fail: {flags}")
    case = "I" if n8 == 1 else "II"
    logger.debug(f"8-cycle construction CASE ({case}) verified for {sigma}")
    return EightCycleResult(family=check.family, case=case, alpha=alpha, **flags)


# === Refutation search ===

def _block_cycles() -> Iterator[Tuple[int, int, int, int]]:
    """The six cyclic orders of the residue blocks 1..4, as successor maps."""
    for rest in itertools.permutations((2, 3, 4)):
        order = (1,) + rest
        succ = [0] * 5
        for k in range(4):
            succ[order[k]] = order[(k + 1) % 4]
        yield tuple(succ[1:])


def fourth_root_candidates(n: int) -> Iterator[Permutation]:
    """
    N-cycles τ with τ⁴ = σ⁴ for σ = (1 2 ... N), in a fixed order.

    Points split into the residue blocks C_r = {r, r+4, ...}. τ sends
    r + 4k to π(r) + 4(k + o_r) for a 4-cycle π of the blocks and offsets
    o_r mod N/4 with Σ o_r ≡ 1.
    """
    size = n // 4
    for succ in _block_cycles():
        for free in itertools.product(range(size), repeat=3):
            offsets = free + ((1 - sum(free)) % size,)
            images = [0] * n
            for r in range(1, 5):
                for k in range(size):
                    images[r + 4 * k - 1] = succ[r - 1] + 4 * ((k + offsets[r - 1]) % size)
            yield Permutation(tuple(images))


def octa_refutation_search(n: int, budget: int = 100_000) -> RefutationResult[Permutation]:
    """
    Look for an octahedral family with σ_1 the canonical N-cycle.

    σ_2 ranges over the N-cycles with σ_2⁴ = σ_1⁴; the rest is completed
    by σ_5 = σ_1 ▷ σ_2, σ_3 = σ_2 ▷ σ_1, σ_4 = σ_1 ▷ σ_5, σ_6 = σ_2 ▷ σ_3
    and checked in full.

    Args:
        n: N = 2^k with k ≥ 3.
        budget: Maximum candidates scanned.

    Raises:
        InputError: If N is not a power of two at least 8.
    """
    if n < 8 or n & (n - 1):
        raise InputError(f"N must be a power of two at least 8, got {n}")
    if budget < 1:
        raise InputError(f"Budget must be positive, got {budget}")
    group = SymmetricGroup(n)
    sigma1 = Permutation(tuple(list(range(2, n + 1)) + [1]))
    target = ops.power(sigma1, 4)
    total = 6 * (n // 4) ** 3
    scanned = 0
    for sigma2 in fourth_root_candidates(n):
        if scanned >= budget:
            logger.warning(f"Refutation search for N={n} stopped after {budget} candidates")
            return RefutationResult(n=n, candidates=total, scanned=scanned, exhaustive=False)
        scanned += 1
        if sigma2 == sigma1:
            continue
        if ops.power(sigma2, 4) != target:
            raise DefectError("octa-refutation", f"candidate {sigma2} has the wrong fourth power")
        sigma5 = group.conjugate(sigma1, sigma2)
        sigma3 = group.conjugate(sigma2, sigma1)
        sigma4 = group.conjugate(sigma1, sigma5)
        sigma6 = group.conjugate(sigma2, sigma3)
        members = (sigma1, sigma2, sigma3, sigma4, sigma5, sigma6)
        if len(set(members)) != 6:
            continue
        check = octa_from_reduced(group, members)
        if check.ok:
            logger.info(f"Octahedral family through the {n}-cycle found after {scanned} candidates")
            return RefutationResult(n=n, candidates=total, scanned=scanned, exhaustive=False, family=check.family)
    logger.info(f"No octahedral family through the {n}-cycle among {scanned} candidates")
    return RefutationResult(n=n, candidates=total, scanned=scanned, exhaustive=True)
