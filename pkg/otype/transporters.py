"""Transporters of 𝔒^(2) families, the twist classification and the
cocycle of the transported subspace."""

import itertools
import logging
from typing import Dict, List, Optional, Sequence, Tuple, TypeVar, Union

from rackit.braided.cocycle import constant_cocycle
from rackit.braided.braiding import check_bvs_isomorphism
from rackit.braided.types import Character, CosetSection, RootOfUnity
from rackit.braided.yd import DEFAULT_WORD_DEPTH, yd_cocycle
from rackit.errors import BudgetExceeded, DefectError, InputError
from rackit.groups.base import BaseGroup
from rackit.otype.types import (
    Octa2Family,
    OctaCocycleReport,
    OctaFamily,
    OctaTransporterReport,
    OctaTransporters,
    TwistWord,
)
from rackit.otype.verify import octa
from rackit.rack.constructions import octahedral_rack, square_rack
from rackit.rack.types import RackMorphism

logger = logging.getLogger(__name__)

E = TypeVar("E")

DEFAULT_TWIST_LENGTH = 8


def _section_sigma(group: BaseGroup[E], fam: OctaFamily[E]) -> List[E]:
    """g_1..g_6 = σ_1, σ_5, σ_2, σ_3, σ_4, σ_2²σ_1."""
    s = fam
    return [s[1], s[5], s[2], s[3], s[4], group.prod([s[2], s[2], s[1]])]


def octa_transporters(group: BaseGroup[E], fam: Octa2Family[E]) -> OctaTransporters[E]:
    """
    g_1..g_12 of an 𝔒^(2) family with transporter g.

    g_7 = gσ_1, g_8 = τ_5g, g_9 = τ_2g, g_10 = τ_3g, g_11 = τ_4g,
    g_12 = τ_2²gσ_1.

    Raises:
        InputError: If the family has no transporter.
        DefectError: If some g_j misses its target.
    """
    if fam.g is None:
        raise InputError("The family needs a transporter g with g ▷ σ_1 = τ_1")
    s, t, g = fam.sigma, fam.tau, fam.g
    gs = _section_sigma(group, s)
    gs += [
        group.mul(g, s[1]),
        group.mul(t[5], g),
        group.mul(t[2], g),
        group.mul(t[3], g),
        group.mul(t[4], g),
        group.prod([t[2], t[2], g, s[1]]),
    ]
    targets = s.members + t.members
    for j, (gj, target) in enumerate(zip(gs, targets), start=1):
        if group.conjugate(gj, s[1]) != target:
            raise DefectError("octa-transporter", f"g_{j} ▷ σ_1 misses its target")
    return OctaTransporters(tuple(gs))


def _square_op(i: int, j: int) -> int:
    """Product on the octahedral square, indices 1..12; the copy is that of j."""
    k = octa((i - 1) % 6 + 1, (j - 1) % 6 + 1)
    return k if j <= 6 else k + 6


def _shape(i: int, j: int) -> str:
    if i <= 6 and j <= 6:
        return "a"
    if i > 6 and j > 6:
        return "b"
    return "c" if i <= 6 else "d"


class WordTable:
    """
    Products x_1^{e_1}···x_k^{e_k} with Σ|e_i| ≤ bound, keyed by element.

    Each element keeps its first word of each exponent parity, in order of
    increasing length, then lexicographic exponents. find prefers odd words.
    """

    def __init__(self, group: BaseGroup[E], generators: Sequence[E], bound: int):
        self.generators = tuple(generators)
        self.words: Dict[Tuple[E, int], Tuple[int, ...]] = {}
        powers = [
            {e: group.power(x, e) for e in range(-bound, bound + 1)}
            for x in self.generators
        ]
        k = len(self.generators)
        for length in range(bound + 1):
            for exps in itertools.product(range(-length, length + 1), repeat=k):
                if sum(abs(e) for e in exps) != length:
                    continue
                element = group.prod([powers[n][e] for n, e in enumerate(exps)])
                self.words.setdefault((element, length % 2), exps)

    def find(self, element: E) -> Optional[Tuple[int, ...]]:
        return self.words.get((element, 1)) or self.words.get((element, 0))


def octa_transporter_suite(
    group: BaseGroup[E],
    fam: Octa2Family[E],
    bound: int = DEFAULT_TWIST_LENGTH,
) -> OctaTransporterReport[E]:
    """
    Classify the 144 twists g_{i▷j}⁻¹ x_i g_j by shape and exponent parity.

    Shapes, with x_i = σ_i for i ≤ 6 and τ_{i-6} otherwise:
    (a) i, j ≤ 6: σ_1^r σ_6^s; (b) i, j ≥ 7: σ_1^r (g⁻¹τ_6g)^s;
    (c) i ≤ 6 < j: σ_1^r (g⁻¹σ_1g)^s (g⁻¹σ_6g)^t; (d) j ≤ 6 < i: σ_1^r τ_1^s σ_6^t.
    Every twist must have odd total exponent.

    Raises:
        BudgetExceeded: If a twist has no word within the bound.
        DefectError: On an even word or a missed transporter.
    """
    tr = octa_transporters(group, fam)
    s, t, g = fam.sigma, fam.tau, fam.g
    g_inv = group.inv(g)

    def pull(x: E) -> E:
        return group.prod([g_inv, x, g])

    tables = {
        "a": WordTable(group, (s[1], s[6]), bound),
        "b": WordTable(group, (s[1], pull(t[6])), bound),
        "c": WordTable(group, (s[1], pull(s[1]), pull(s[6])), bound),
        "d": WordTable(group, (s[1], t[1], s[6]), bound),
    }
    acting = s.members + t.members
    inverses = [group.inv(x) for x in tr.g]
    twists: List[TwistWord] = []
    elements: List[E] = []
    counts = {shape: 0 for shape in tables}
    for i in range(1, 13):
        for j in range(1, 13):
            h = _square_op(i, j)
            twist = group.prod([inverses[h - 1], acting[i - 1], tr[j]])
            shape = _shape(i, j)
            exps = tables[shape].find(twist)
            if exps is None:
                raise BudgetExceeded(f"Twist ({i}, {j}) has no shape-{shape} word of length <= {bound}", bound)
            word = TwistWord(i=i, j=j, shape=shape, exponents=exps)
            if word.parity != 1:
                logger.error(f"Twist ({i}, {j}) has even word {exps}")
                raise DefectError("octa-twist-parity", f"twist ({i}, {j}) has even exponent sum {exps}")
            twists.append(word)
            elements.append(twist)
            counts[shape] += 1

    report = OctaTransporterReport(transporters=tr, twists=tuple(twists), shape_counts=counts)
    powers = _cyclic_exponents(group, s[1], elements)
    if powers is not None:
        if any(e % 2 == 0 for e in powers):
            raise DefectError("octa-twist-parity", "a twist is an even power of σ_1")
        report.power_case = True
        report.power_exponents = tuple(powers)
    logger.debug(f"All 144 twists classified: {counts}")
    return report


def _cyclic_exponents(group: BaseGroup[E], base: E, elements: Sequence[E]) -> Optional[List[int]]:
    """Exponents e with base^e = x for every x, or None if some x is not a power of base."""
    index = {x: e for e, x in enumerate(group.powers(base))}
    out = []
    for x in elements:
        if x not in index:
            return None
        out.append(index[x])
    return out


# === Cocycle of the transported subspace ===

def octa_subspace_cocycle(
    group: BaseGroup[E],
    fam: Union[OctaFamily[E], Octa2Family[E]],
    chi: Character[E],
    copies: int = 1,
    depth: int = DEFAULT_WORD_DEPTH,
) -> OctaCocycleReport:
    """
    Cocycle on span{g_i v} compared with the constant −1 cocycle.

    An OctaFamily uses the six transporters g_1..g_6; copies=2 doubles the
    space over the same section and compares with the octahedral square.
    An Octa2Family uses g_1..g_12 and compares with the octahedral square.

    Raises:
        InputError: If copies is not 1 or 2, or is 2 for an Octa2Family.
        BudgetExceeded: If χ cannot be evaluated on some twist.
    """
    minus_one = RootOfUnity.minus_one()
    if isinstance(fam, Octa2Family):
        if copies != 1:
            raise InputError("An 𝔒^(2) family already spans two copies")
        tr = octa_transporters(group, fam)
        section = CosetSection(fam.sigma[1], fam.members, tr.g)
        labels = [f"x_{i}" for i in range(1, 7)] + [f"y_{i}" for i in range(1, 7)]
        target = square_rack(octahedral_rack())
        cocycle = yd_cocycle(group, section, chi, copies=1, depth=depth, labels=labels)
    else:
        section = CosetSection(fam[1], fam.members, tuple(_section_sigma(group, fam)))
        target = octahedral_rack() if copies == 1 else square_rack(octahedral_rack())
        cocycle = yd_cocycle(group, section, chi, copies=copies, depth=depth, labels=[str(i) for i in range(1, 7)])
    reference = constant_cocycle(target, minus_one)
    if cocycle.rack.table != target.table:
        return OctaCocycleReport(cocycle=cocycle, target=reference, isomorphic=False)
    morphism = RackMorphism(cocycle.rack, target, tuple(range(target.size)))
    isomorphic = check_bvs_isomorphism(cocycle, reference, morphism)
    logger.debug(f"Transported cocycle on {target.size} elements matches −1: {isomorphic}")
    return OctaCocycleReport(cocycle=cocycle, target=reference, isomorphic=isomorphic)
