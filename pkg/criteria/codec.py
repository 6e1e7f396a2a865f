"""Groups, classes and families to and from JSON values."""

from typing import Any, Dict, Tuple, Union

from rackit.dtype.types import Dp2Family, DpFamily
from rackit.errors import InputError
from rackit.groups.base import BaseGroup
from rackit.matgrp.group import GeneralLinearGroup, diagonal_class_data
from rackit.matgrp.ops import diagonal_matrix, in_diagonal_class
from rackit.matgrp.types import DiagonalClassData
from rackit.otype.types import Octa2Family, OctaFamily
from rackit.perm import ops
from rackit.perm.group import SymmetricGroup
from rackit.perm.types import ClassData

Family = Union[DpFamily, Dp2Family, OctaFamily, Octa2Family]
AnyClass = Union[ClassData, DiagonalClassData]


def parse_group_spec(spec: str) -> Tuple[str, Tuple[int, ...]]:
    """
    "sym:8" -> ("sym", (8,)), "gl:4:7" -> ("gl", (4, 7)).

    Raises:
        InputError: On an unknown or malformed spec.
    """
    head, _, rest = spec.strip().partition(":")
    try:
        args = tuple(int(x) for x in rest.split(":")) if rest else ()
    except ValueError:
        raise InputError(f"Malformed group spec {spec!r}") from None
    if head == "sym" and len(args) == 1:
        return head, args
    if head == "gl" and len(args) == 2:
        return head, args
    raise InputError(f"Unknown group spec {spec!r}; expected sym:<m> or gl:<n>:<p>")


def group_from_spec(spec: str) -> BaseGroup:
    kind, args = parse_group_spec(spec)
    if kind == "sym":
        return SymmetricGroup(args[0])
    return GeneralLinearGroup(args[0], args[1])


# === Classes ===

def class_to_json(c: AnyClass) -> Dict[str, Any]:
    if isinstance(c, ClassData):
        return {
            "m": c.degree,
            "type": str(c.cycle_type),
            "size": c.size,
            "order": c.element_order,
            "real": c.is_real,
        }
    return {
        "n": c.n,
        "p": c.p,
        "diagonal": list(c.diagonal),
        "label": c.label,
        "size": c.size,
        "order": c.element_order,
        "real": c.is_real,
    }


def class_from_json(group: BaseGroup, data: Dict[str, Any]) -> AnyClass:
    """
    Recompute the class from its defining part ("type" or "diagonal").

    Raises:
        InputError: If the data does not name a class of the group.
    """
    if isinstance(group, SymmetricGroup):
        t = ops.parse_cycle_type(str(data["type"]), group.degree)
        return ops.class_data(group.degree, t)
    if isinstance(group, GeneralLinearGroup):
        c = diagonal_class_data(group.p, data["diagonal"])
        if c.n != group.n:
            raise InputError(f"Diagonal of length {c.n} in {group.spec}")
        return c
    raise InputError(f"No class codec for {group.spec}")


def in_class(c: AnyClass, element: Any) -> bool:
    if isinstance(c, ClassData):
        return element.degree == c.degree and ops.cycle_type(element) == c.cycle_type
    return in_diagonal_class(element, c.diagonal)


def class_representative(group: BaseGroup, c: AnyClass) -> Any:
    if isinstance(c, ClassData):
        return c.representative
    return diagonal_matrix(c.p, c.diagonal)


# === Families ===

def family_to_json(group: BaseGroup, fam: Family) -> Dict[str, Any]:
    data = fam.to_json(group)
    if isinstance(fam, DpFamily):
        data = {"kind": "dp", **data}
    return data


def family_from_json(group: BaseGroup, data: Dict[str, Any]) -> Family:
    """
    Decode a family without verifying it.

    Raises:
        InputError: On an unknown kind or malformed members.
    """
    kind = data.get("kind", "dp")
    decode = group.element_from_json
    try:
        if kind == "dp":
            return DpFamily(int(data["p"]), tuple(decode(x) for x in data["mu"]))
        if kind == "dp2":
            p = int(data["p"])
            g_inf = decode(data["g_inf"]) if data.get("g_inf") is not None else None
            return Dp2Family(
                DpFamily(p, tuple(decode(x) for x in data["mu"])),
                DpFamily(p, tuple(decode(x) for x in data["nu"])),
                g_inf,
            )
        if kind == "octa":
            return OctaFamily(tuple(decode(x) for x in data["sigma"]))
        if kind == "octa2":
            g = decode(data["g"]) if data.get("g") is not None else None
            return Octa2Family(
                OctaFamily(tuple(decode(x) for x in data["sigma"])),
                OctaFamily(tuple(decode(x) for x in data["tau"])),
                g,
            )
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"Malformed {kind} family: {e}") from None
    raise InputError(f"Unknown family kind {kind!r}")
