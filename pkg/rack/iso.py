"""Small-rack isomorphism search and the X_d -> X_n embedding."""

import logging
from typing import Dict, List, Optional

from rackit.errors import BudgetExceeded, DefectError, InputError
from rackit.rack.checks import check_morphism, row_profile
from rackit.rack.constructions import dihedral_square_rack
from rackit.rack.types import RackMorphism, RackTable

logger = logging.getLogger(__name__)

MAX_ISO_SIZE = 24


def _profiles(t: RackTable) -> List[tuple]:
    profiles = []
    for i in range(t.size):
        fixed = sum(1 for j in range(t.size) if t.op(i, j) == j)
        stabilizing = sum(1 for j in range(t.size) if t.op(j, i) == i)
        profiles.append((row_profile(t, i), fixed, stabilizing))
    return profiles


def find_isomorphism(x: RackTable, y: RackTable) -> Optional[RackMorphism]:
    """
    Find a rack isomorphism x -> y by backtracking.

    Candidates for each element are pruned by a profile: cycle structure
    of φ_i, its fixed points and the number of j with j ▷ i = i.

    Returns:
        A bijective morphism, or None when the racks are not isomorphic.

    Raises:
        BudgetExceeded: If the racks have more than 24 elements.
    """
    if x.size != y.size:
        return None
    n = x.size
    if n > MAX_ISO_SIZE:
        raise BudgetExceeded(f"Isomorphism search capped at {MAX_ISO_SIZE} elements, got {n}", MAX_ISO_SIZE)
    px, py = _profiles(x), _profiles(y)
    if sorted(px) != sorted(py):
        logger.debug(f"Profiles of {x.name} and {y.name} differ")
        return None
    candidates = [[v for v in range(n) if py[v] == px[u]] for u in range(n)]
    # solve[a][c] = b with a ▷ b = c; every φ_a is a bijection
    solve = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            solve[a][x.op(a, b)] = b
    mapping: Dict[int, int] = {}
    used = set()

    def consistent(u: int) -> bool:
        """Check every relation a ▷ b = c among mapped elements that involves u."""
        mu = mapping[u]
        for w, mw in mapping.items():
            uw = x.op(u, w)
            if uw in mapping and mapping[uw] != y.op(mu, mw):
                return False
            wu = x.op(w, u)
            if wu in mapping and mapping[wu] != y.op(mw, mu):
                return False
            b = solve[w][u]
            if b in mapping and y.op(mw, mapping[b]) != mu:
                return False
        return True

    order = sorted(range(n), key=lambda u: len(candidates[u]))

    def search(k: int) -> bool:
        if k == n:
            return True
        u = order[k]
        for v in candidates[u]:
            if v in used:
                continue
            mapping[u] = v
            used.add(v)
            if consistent(u) and search(k + 1):
                return True
            del mapping[u]
            used.discard(v)
        return False

    if not search(0):
        return None
    morphism = RackMorphism(x, y, tuple(mapping[u] for u in range(n)))
    if not check_morphism(morphism):
        raise DefectError("rack-iso", "Backtracking produced a non-morphism")
    return morphism


def embed_dihedral_square(d: int, n: int) -> RackMorphism:
    """
    The embedding X_d -> X_n, s_i ↦ s_{i·n/d}, t_i ↦ t_{i·n/d}.

    Raises:
        InputError: If d does not divide n.
        DefectError: If the map fails to be a morphism.
    """
    if n % d:
        raise InputError(f"{d} does not divide {n}")
    source, target = dihedral_square_rack(d), dihedral_square_rack(n)
    step = n // d
    mapping = tuple(copy * n + i * step for copy in range(2) for i in range(d))
    morphism = RackMorphism(source, target, mapping)
    diagnosis = check_morphism(morphism)
    if not diagnosis:
        raise DefectError("dihedral-embedding", diagnosis.reason)
    return morphism
