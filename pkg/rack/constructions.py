"""Named rack constructions.

Labels follow the conventions used in certificates: s_i/t_i for the
dihedral square, 1..6 for the octahedral rack, x_/y_ prefixes for squares.
"""

import logging
from typing import Callable, Dict, List, Optional, Sequence, TypeVar

from rackit.errors import BudgetExceeded, InputError
from rackit.groups.base import BaseGroup
from rackit.rack.types import RackTable

logger = logging.getLogger(__name__)

E = TypeVar("E")

# Row r lists r▷1, ..., r▷6 (1-based).
OCTAHEDRAL_TABLE = (
    (1, 5, 2, 3, 4, 6),
    (3, 2, 6, 4, 1, 5),
    (4, 1, 3, 6, 5, 2),
    (5, 2, 1, 4, 6, 3),
    (2, 6, 3, 1, 5, 4),
    (1, 3, 4, 5, 2, 6),
)


def trivial_rack(n: int) -> RackTable:
    """i ▷ j = j."""
    if n < 1:
        raise InputError(f"Rack size must be positive, got {n}")
    return RackTable(
        table=tuple(tuple(range(n)) for _ in range(n)),
        name=f"trivial:{n}",
    )


def dihedral_rack(n: int) -> RackTable:
    """Dihedral rack on Z/n: i ▷ j = 2i - j."""
    if n < 1:
        raise InputError(f"Rack size must be positive, got {n}")
    return RackTable(
        table=tuple(tuple((2 * i - j) % n for j in range(n)) for i in range(n)),
        name=f"Dn:{n}",
    )


def dihedral_square_rack(n: int) -> RackTable:
    """
    The 2n-element rack X_n on s_0..s_{n-1}, t_0..t_{n-1}.

    s_i ▷ s_j = s_{2i-j}, s_i ▷ t_j = t_{2i-j}, t_i ▷ s_j = s_{2i-j},
    t_i ▷ t_j = t_{2i-j}.

    Raises:
        InputError: If n is even or n <= 1.
    """
    if n <= 1 or n % 2 == 0:
        raise InputError(f"X_n needs an odd n > 1, got {n}")
    table = []
    for i in range(2 * n):
        a = i % n
        row = []
        for j in range(2 * n):
            copy, b = divmod(j, n)
            row.append(copy * n + (2 * a - b) % n)
        table.append(tuple(row))
    labels = [f"s_{i}" for i in range(n)] + [f"t_{i}" for i in range(n)]
    return RackTable(table=tuple(table), labels=tuple(labels), name=f"Xn:{n}")


def octahedral_rack() -> RackTable:
    """The six-element octahedral rack, labels "1".."6"."""
    return RackTable(
        table=tuple(tuple(x - 1 for x in row) for row in OCTAHEDRAL_TABLE),
        labels=tuple(str(i) for i in range(1, 7)),
        name="octahedral",
    )


def square_rack(x: RackTable, prefixes: Sequence[str] = ("x_", "y_")) -> RackTable:
    """
    Square of a rack: two copies, φ_a(u) ▷ φ_b(v) = φ_b(u ▷ v).

    The copy of a product is the copy of its right factor.
    """
    n = x.size
    table = []
    for i in range(2 * n):
        u = i % n
        row = []
        for j in range(2 * n):
            copy, v = divmod(j, n)
            row.append(copy * n + x.op(u, v))
        table.append(tuple(row))
    labels = [f"{prefixes[0]}{lab}" for lab in x.labels] + [f"{prefixes[1]}{lab}" for lab in x.labels]
    return RackTable(table=tuple(table), labels=tuple(labels), name=f"square:{x.name}")


def conjugation_rack(
    group: BaseGroup[E],
    elements: Sequence[E],
    labels: Optional[Sequence[str]] = None,
    name: str = "",
) -> RackTable:
    """
    Rack table of a ▷-closed list of group elements under a▷b = a·b·a⁻¹.

    Raises:
        InputError: If the elements repeat or are not closed under conjugation.
    """
    index: Dict[E, int] = {}
    for i, element in enumerate(elements):
        if element in index:
            raise InputError(f"Element {group.format(element)} listed twice")
        index[element] = i
    table = []
    for a in elements:
        row = []
        for b in elements:
            c = group.conjugate(a, b)
            if c not in index:
                raise InputError(
                    f"{group.format(a)} ▷ {group.format(b)} = {group.format(c)} leaves the set"
                )
            row.append(index[c])
        table.append(tuple(row))
    if labels is None:
        labels = [group.format(e) for e in elements]
    return RackTable(table=tuple(table), labels=tuple(labels), name=name)


def subrack(t: RackTable, subset: Sequence[int], name: str = "") -> RackTable:
    """
    Restriction of t to a ▷-closed subset, re-indexed in the given order.

    Raises:
        InputError: If the subset is not closed.
    """
    members = list(subset)
    position = {x: k for k, x in enumerate(members)}
    if len(position) != len(members):
        raise InputError(f"Subset {members} repeats an index")
    table = []
    for i in members:
        row = []
        for j in members:
            c = t.op(i, j)
            if c not in position:
                raise InputError(f"{t.labels[i]} ▷ {t.labels[j]} = {t.labels[c]} leaves the subset")
            row.append(position[c])
        table.append(tuple(row))
    return RackTable(
        table=tuple(table),
        labels=tuple(t.labels[i] for i in members),
        name=name or f"{t.name}|{len(members)}",
    )


def conjugation_closure(
    group: BaseGroup[E],
    seeds: Sequence[E],
    bound: int,
) -> List[E]:
    """
    Least ▷-closed set containing the seeds.

    Elements are returned in discovery order: seeds first, then new products
    in the order the fixpoint sweep meets them.

    Raises:
        InputError: If seeds is empty.
        BudgetExceeded: If the closure grows beyond bound elements.
    """
    if not seeds:
        raise InputError("Closure needs at least one seed")
    members: List[E] = []
    seen = set()
    for s in seeds:
        if s not in seen:
            seen.add(s)
            members.append(s)
    if len(members) > bound:
        raise BudgetExceeded(f"{len(members)} distinct seeds exceed bound {bound}", bound)
    changed = True
    while changed:
        changed = False
        for a in list(members):
            for b in list(members):
                c = group.conjugate(a, b)
                if c in seen:
                    continue
                seen.add(c)
                members.append(c)
                changed = True
                if len(members) > bound:
                    raise BudgetExceeded(f"Closure exceeds bound {bound}", bound)
    logger.debug(f"Closure of {len(seeds)} seeds has {len(members)} elements")
    return members


_NAMED: Dict[str, Callable[[int], RackTable]] = {
    "Xn": dihedral_square_rack,
    "Dn": dihedral_rack,
    "trivial": trivial_rack,
}


def parse_rack_name(name: str) -> RackTable:
    """
    Build a named rack.

    Accepted: "octahedral", "Xn:<odd n>", "Dn:<n>", "trivial:<n>",
    "square:<name>" (recursive).

    Raises:
        InputError: On an unknown name or bad parameter.
    """
    text = name.strip()
    if text == "octahedral":
        return octahedral_rack()
    if text.startswith("square:"):
        return square_rack(parse_rack_name(text[len("square:"):]))
    kind, sep, arg = text.partition(":")
    if sep and kind in _NAMED:
        try:
            n = int(arg)
        except ValueError:
            raise InputError(f"Bad size in rack name {name!r}") from None
        return _NAMED[kind](n)
    raise InputError(f"Unknown rack name {name!r}")
