"""Rack axiom checks."""

import logging
from typing import Iterable, Tuple

from rackit.errors import Diagnosis, InputError
from rackit.rack.types import RackMorphism, RackTable

logger = logging.getLogger(__name__)


def check_rack(t: RackTable) -> Diagnosis:
    """
    Check that every φ_i is bijective and ▷ is self-distributive.

    Returns:
        Diagnosis citing the first non-bijective row or failing triple.
    """
    n = t.size
    for i, row in enumerate(t.table):
        if len(set(row)) != n:
            seen = set()
            for j, x in enumerate(row):
                if x in seen:
                    logger.debug(f"Rack {t.name}: row {i} repeats {x}")
                    return Diagnosis.failed(
                        f"row {t.labels[i]} is not a bijection (repeats {t.labels[x]})",
                        witness=(i, j),
                    )
                seen.add(x)
    checked = 0
    table = t.table
    for i in range(n):
        row_i = table[i]
        for j in range(n):
            ij = row_i[j]
            row_ij = table[ij]
            row_j = table[j]
            for k in range(n):
                checked += 1
                if row_i[row_j[k]] != row_ij[row_i[k]]:
                    logger.debug(f"Rack {t.name}: self-distributivity fails at {(i, j, k)}")
                    return Diagnosis.failed(
                        f"{t.labels[i]}▷({t.labels[j]}▷{t.labels[k]}) != "
                        f"({t.labels[i]}▷{t.labels[j]})▷({t.labels[i]}▷{t.labels[k]})",
                        witness=(i, j, k),
                        checked=checked,
                    )
    return Diagnosis.passed(checked)


def is_closed(t: RackTable, subset: Iterable[int]) -> bool:
    members = set(subset)
    return all(t.op(i, j) in members for i in members for j in members)


def is_abelian_subrack(t: RackTable, subset: Iterable[int]) -> bool:
    """
    True iff k ▷ l = l for all k, l in subset.

    Raises:
        InputError: If subset is not closed under ▷.
    """
    members = sorted(set(subset))
    if not is_closed(t, members):
        raise InputError(f"Subset {members} is not closed under ▷")
    return all(t.op(k, l) == l for k in members for l in members)


def check_morphism(m: RackMorphism) -> Diagnosis:
    """Check map(i ▷ j) = map(i) ▷ map(j) for all pairs."""
    src, dst = m.source, m.target
    for i in range(src.size):
        for j in range(src.size):
            if m(src.op(i, j)) != dst.op(m(i), m(j)):
                return Diagnosis.failed(
                    f"map({src.labels[i]}▷{src.labels[j]}) != map({src.labels[i]})▷map({src.labels[j]})",
                    witness=(i, j),
                    checked=i * src.size + j + 1,
                )
    return Diagnosis.passed(src.size * src.size)


def row_profile(t: RackTable, i: int) -> Tuple:
    """Cycle structure of φ_i: sorted cycle lengths."""
    row = t.table[i]
    seen = [False] * t.size
    lengths = []
    for start in range(t.size):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = row[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))
