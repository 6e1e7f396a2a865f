"""Cocycle identity checks and basic cocycle constructions."""

import logging
from typing import Sequence

from rackit.braided.types import Cocycle, RootOfUnity
from rackit.errors import Diagnosis
from rackit.rack.constructions import subrack
from rackit.rack.types import RackTable

logger = logging.getLogger(__name__)


def constant_cocycle(rack: RackTable, value: RootOfUnity) -> Cocycle:
    """q ≡ value."""
    row = tuple(value.exponent for _ in range(rack.size))
    return Cocycle(rack=rack, order=value.order, exponents=tuple(row for _ in range(rack.size)))


def check_cocycle(q: Cocycle) -> Diagnosis:
    """
    Check q_{i,j▷k}·q_{j,k} = q_{i▷j,i▷k}·q_{i,k} on all triples.

    Exponents are compared in Z/L, so the check is exact.
    """
    t = q.rack
    n, L, e = t.size, q.order, q.exponents
    checked = 0
    for i in range(n):
        for j in range(n):
            ij = t.op(i, j)
            for k in range(n):
                checked += 1
                lhs = e[i][t.op(j, k)] + e[j][k]
                rhs = e[ij][t.op(i, k)] + e[i][k]
                if (lhs - rhs) % L:
                    logger.debug(f"Cocycle identity fails at {(i, j, k)}")
                    return Diagnosis.failed(
                        f"cocycle identity fails at ({t.labels[i]}, {t.labels[j]}, {t.labels[k]})",
                        witness=(i, j, k),
                        checked=checked,
                    )
    return Diagnosis.passed(checked)


def restrict_cocycle(q: Cocycle, subset: Sequence[int]) -> Cocycle:
    """
    The cocycle of the braided subspace spanned by a ▷-closed subset.

    Raises:
        InputError: If the subset is not closed.
    """
    members = list(subset)
    sub = subrack(q.rack, members)
    exps = tuple(tuple(q.exponents[i][j] for j in members) for i in members)
    return Cocycle(rack=sub, order=q.order, exponents=exps)
