"""Yetter-Drinfeld cocycles of degree-1 characters.

For a class with section g_i ▷ s = t_i and a character χ of the
centralizer of s, the braiding of M(O, χ) is
c(g_i v ⊗ g_j v) = χ(g_h⁻¹ t_i g_j) g_h v ⊗ g_i v with t_i ▷ t_j = t_h.
"""

import logging
from typing import Dict, Generic, List, Optional, Sequence, TypeVar

from rackit.braided.types import Character, Cocycle, CosetSection, RootOfUnity
from rackit.errors import BudgetExceeded, InputError
from rackit.groups.base import BaseGroup
from rackit.rack.constructions import conjugation_rack, square_rack

logger = logging.getLogger(__name__)

E = TypeVar("E")

DEFAULT_WORD_DEPTH = 12
MAX_WORD_BALL = 200_000


class CharacterEvaluator(Generic[E]):
    """
    Evaluates a character given on generators by breadth-first word search.

    Words in the generators and their inverses are expanded one length at
    a time up to depth; an element reached by two words with different
    values means the assignment is not a homomorphism.

    Usage:
        evaluate = CharacterEvaluator(group, chi, depth=12)
        evaluate(gamma)
    """

    def __init__(self, group: BaseGroup[E], chi: Character[E], depth: int = DEFAULT_WORD_DEPTH):
        self.group = group
        self.chi = chi
        self.depth = depth
        self._values: Dict[E, RootOfUnity] = {group.identity: RootOfUnity.one()}
        self._frontier: List[E] = [group.identity]
        self._length = 0
        self._steps = []
        for gen, value in chi.assignments():
            self._steps.append((gen, value))
            self._steps.append((group.inv(gen), value.inverse()))

    def _expand(self) -> None:
        nxt: List[E] = []
        for element in self._frontier:
            base = self._values[element]
            for gen, value in self._steps:
                w = self.group.mul(element, gen)
                v = base * value
                known = self._values.get(w)
                if known is None:
                    self._values[w] = v
                    nxt.append(w)
                elif known != v:
                    raise InputError(
                        f"Character {self.chi.name or ''} is not a homomorphism: "
                        f"{self.group.format(w)} gets {known} and {v}"
                    )
            if len(self._values) > MAX_WORD_BALL:
                raise BudgetExceeded(f"Word ball exceeds {MAX_WORD_BALL} elements", MAX_WORD_BALL)
        self._frontier = nxt
        self._length += 1

    def __call__(self, element: E) -> RootOfUnity:
        """
        χ(element).

        Raises:
            BudgetExceeded: If no word of length <= depth reaches the element.
        """
        while element not in self._values:
            if self._length >= self.depth or not self._frontier:
                raise BudgetExceeded(
                    f"{self.group.format(element)} not reached by generator words of length <= {self.depth}",
                    self.depth,
                )
            self._expand()
        return self._values[element]

    def q_ss(self, base: E) -> RootOfUnity:
        return self.chi.q_ss if self.chi.q_ss is not None else self(base)


def evaluate_character(
    group: BaseGroup[E],
    chi: Character[E],
    element: E,
    depth: int = DEFAULT_WORD_DEPTH,
) -> RootOfUnity:
    """One-shot χ(element); see CharacterEvaluator."""
    return CharacterEvaluator(group, chi, depth)(element)


def check_section(group: BaseGroup[E], section: CosetSection[E]) -> None:
    """
    Raises:
        InputError: If some g_i ▷ s differs from t_i.
    """
    for i, (t, g) in enumerate(zip(section.elements, section.transporters)):
        if group.conjugate(g, section.base) != t:
            raise InputError(
                f"Transporter {i + 1} sends the base point to "
                f"{group.format(group.conjugate(g, section.base))}, not {group.format(t)}"
            )


def yd_cocycle(
    group: BaseGroup[E],
    section: CosetSection[E],
    chi: Character[E],
    copies: int = 1,
    depth: int = DEFAULT_WORD_DEPTH,
    labels: Optional[Sequence[str]] = None,
) -> Cocycle:
    """
    Cocycle of M(O, χ) on the conjugation rack of the class.

    With copies=2 the result is the cocycle of M(O, χ) ⊕ M(O, χ) on the
    square of the class rack, the second copy using the same section.

    Args:
        group: Ambient group.
        section: Class elements and transporters, base point first.
        chi: Degree-1 character of the centralizer of the base point.
        copies: 1 or 2.
        depth: Word-length bound for character evaluation.
        labels: Display labels for the class elements.

    Returns:
        The cocycle, exponents lifted to a common order.

    Raises:
        InputError: On an invalid section or copies outside {1, 2}.
        BudgetExceeded: If χ cannot be evaluated on some twist.
    """
    if copies not in (1, 2):
        raise InputError(f"copies must be 1 or 2, got {copies}")
    check_section(group, section)
    rack = conjugation_rack(group, section.elements, labels=labels, name="class")
    evaluate = CharacterEvaluator(group, chi, depth)
    g = section.transporters
    g_inv = [group.inv(x) for x in g]
    n = section.size
    values = []
    for i in range(n):
        row = []
        for j in range(n):
            h = rack.op(i, j)
            gamma = group.prod([g_inv[h], section.elements[i], g[j]])
            row.append(evaluate(gamma))
        values.append(row)
    if copies == 2:
        rack = square_rack(rack)
        values = [row + row for row in values]
        values = values + values
    logger.debug(f"YD cocycle on {rack.size} elements ({copies} copies) computed")
    return Cocycle.from_values(rack, values)
