"""Permutation arithmetic and symmetric-group class metadata."""

import itertools
import logging
import math
import re
from typing import Iterator, List, Optional

from sympy.utilities.iterables import partitions

from rackit.errors import InputError
from rackit.perm.types import ClassData, CycleType, Permutation

logger = logging.getLogger(__name__)

_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_PART_RE = re.compile(r"^(\d+)(?:\^\{?(\d+)\}?)?$")


def compose(a: Permutation, b: Permutation) -> Permutation:
    """
    Product a∘b (b applied first).

    Raises:
        InputError: On degree mismatch.
    """
    return a * b


def inverse(a: Permutation) -> Permutation:
    return a.inverse()


def conjugate(a: Permutation, b: Permutation) -> Permutation:
    """
    Rack product a ▷ b = a·b·a⁻¹.

    Each cycle (l_1 ... l_k) of b becomes (a(l_1) ... a(l_k)).

    Raises:
        InputError: On degree mismatch.
    """
    return a.conjugate(b)


def order(a: Permutation) -> int:
    return a.order()


def power(a: Permutation, k: int) -> Permutation:
    """k-th power for any integer k, negative k included."""
    return a ** k


def cycle_type(a: Permutation) -> CycleType:
    return CycleType(a.degree, tuple(a.cycle_structure().items()))


def centralizer_order(t: CycleType) -> int:
    """|C_{S_m}(σ)| = ∏ j^{n_j}·n_j! for σ of type t."""
    result = 1
    for j, n in t.multiplicities:
        result *= j ** n * math.factorial(n)
    return result


def canonical_representative(t: CycleType) -> Permutation:
    """
    Representative with cycles filled by 1, 2, 3, ... in weakly increasing length.

    (1^1, 2^1, 3^1) in S_6 gives (2 3)(4 5 6).
    """
    cycles = []
    point = 1
    for length in t.parts():
        cycles.append(tuple(range(point, point + length)))
        point += length
    return Permutation.from_cycles(t.degree, cycles)


def class_data(degree: int, t: CycleType) -> ClassData:
    """
    Class metadata for the symmetric-group class of type t.

    Raises:
        InputError: If t is not a type for this degree.
    """
    if t.degree != degree:
        raise InputError(f"Cycle type {t} has degree {t.degree}, expected {degree}")
    size = math.factorial(degree) // centralizer_order(t)
    return ClassData(
        representative=canonical_representative(t),
        cycle_type=t,
        size=size,
        element_order=t.order,
        is_real=True,
    )


def cycles_of_length(a: Permutation, length: int) -> List[tuple]:
    """Cycles of the given length in canonical order (fixed points count as 1-cycles)."""
    return [c for c in a.cycles(include_fixed=True) if len(c) == length]


def relabel_conjugator(a: Permutation, b: Permutation) -> Optional[Permutation]:
    """
    Find g with g ▷ a = b by matching cycle words.

    Cycles of equal length are paired in canonical order and g sends the
    t-th point of each cycle of a to the t-th point of its partner in b.

    Returns:
        The conjugator, or None when the cycle types differ.
    """
    if a.degree != b.degree:
        raise InputError(f"Degree mismatch: {a.degree} vs {b.degree}")
    source = sorted(a.cycles(include_fixed=True), key=len)
    target = sorted(b.cycles(include_fixed=True), key=len)
    if [len(c) for c in source] != [len(c) for c in target]:
        return None
    images = [0] * a.degree
    for src, dst in zip(source, target):
        for x, y in zip(src, dst):
            images[x - 1] = y
    return Permutation._trusted(tuple(images))


def iter_conjugates(a: Permutation) -> Iterator[Permutation]:
    """
    Distinct conjugates of a, each exactly once, a itself first.

    Only the moved points are relabelled, by injective maps in
    itertools.permutations order, so fixed points cost nothing.
    """
    cycles = a.cycles()
    points = [x for cycle in cycles for x in cycle]
    seen = {a}
    yield a
    for images in itertools.permutations(range(1, a.degree + 1), len(points)):
        relabel = dict(zip(points, images))
        c = Permutation.from_cycles(a.degree, [tuple(relabel[x] for x in cycle) for cycle in cycles])
        if c not in seen:
            seen.add(c)
            yield c


def iter_cycle_types(degree: int) -> Iterator[CycleType]:
    """All cycle types of S_m, in the partition order of sympy (largest part first)."""
    for parts in partitions(degree):
        yield CycleType(degree, tuple(parts.items()))


def parse_permutation(text: str, degree: int) -> Permutation:
    """
    Parse cycle notation such as "(1 2 3)(4 5)"; "()" is the identity.

    Raises:
        InputError: On malformed text or points outside 1..degree.
    """
    stripped = text.strip()
    if not stripped or re.sub(_CYCLE_RE, "", stripped).strip():
        raise InputError(f"Malformed permutation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        tokens = [tok for tok in re.split(r"[\s,]+", body.strip()) if tok]
        try:
            points = tuple(int(tok) for tok in tokens)
        except ValueError:
            raise InputError(f"Malformed permutation: {text!r}") from None
        if len(points) > 1:
            cycles.append(points)
    return Permutation.from_cycles(degree, cycles)


def format_permutation(a: Permutation) -> str:
    return str(a)


def parse_cycle_type(text: str, degree: Optional[int] = None) -> CycleType:
    """
    Parse the caret syntax "1^2,2^1,3^1" (exponent 1 may be omitted).

    Args:
        text: Comma-separated parts "j" or "j^n".
        degree: Expected degree; parts must sum to it when given.

    Raises:
        InputError: On malformed text or a sum different from degree.
    """
    counts = {}
    for token in text.replace(" ", "").split(","):
        match = _PART_RE.match(token)
        if not match:
            raise InputError(f"Malformed cycle type {text!r} (token {token!r})")
        j = int(match.group(1))
        n = int(match.group(2)) if match.group(2) else 1
        if j < 1:
            raise InputError(f"Cycle length must be positive in {text!r}")
        counts[j] = counts.get(j, 0) + n
    total = sum(j * n for j, n in counts.items())
    if degree is not None and total != degree:
        raise InputError(f"Cycle type {text!r} sums to {total}, expected {degree}")
    return CycleType(total, tuple(counts.items()))


def format_cycle_type(t: CycleType) -> str:
    return str(t)
