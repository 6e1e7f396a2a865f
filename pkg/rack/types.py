"""Rack data types.

Racks are dense multiplication tables over 0-based indices with display
labels; table[i][j] = i ▷ j.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

from rackit.errors import InputError


@dataclass(frozen=True)
class RackTable:
    """
    Finite rack (or candidate rack) as a multiplication table.

    The constructor only checks shape; the rack axioms are checked by
    check_rack.
    """

    table: Tuple[Tuple[int, ...], ...]
    labels: Tuple[str, ...] = ()
    name: str = ""

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        size = len(table)
        for i, row in enumerate(table):
            if len(row) != size:
                raise InputError(f"Row {i} has length {len(row)}, expected {size}")
            for x in row:
                if not 0 <= x < size:
                    raise InputError(f"Entry {x} in row {i} outside 0..{size - 1}")
        labels = tuple(str(x) for x in self.labels) or tuple(str(i) for i in range(size))
        if len(labels) != size:
            raise InputError(f"{len(labels)} labels for a rack of size {size}")
        if len(set(labels)) != size:
            raise InputError(f"Duplicate labels: {labels}")
        object.__setattr__(self, "labels", labels)

    @property
    def size(self) -> int:
        return len(self.table)

    def op(self, i: int, j: int) -> int:
        """i ▷ j."""
        return self.table[i][j]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise InputError(f"Unknown label {label!r} in rack {self.name or self.size}") from None

    def label_op(self, a: str, b: str) -> str:
        """a ▷ b on display labels."""
        return self.labels[self.op(self.index(a), self.index(b))]

    def to_json(self) -> Dict[str, Any]:
        return {"labels": list(self.labels), "table": [list(row) for row in self.table]}

    @classmethod
    def from_json(cls, data: Dict[str, Any], name: str = "") -> "RackTable":
        """
        Decode {"labels": [...], "table": [[...], ...]}.

        Raises:
            InputError: If the table key is missing or malformed.
        """
        if "table" not in data:
            raise InputError("Rack JSON needs a 'table' key")
        try:
            return cls(
                table=tuple(tuple(row) for row in data["table"]),
                labels=tuple(data.get("labels") or ()),
                name=name or data.get("name", ""),
            )
        except (TypeError, ValueError) as e:
            raise InputError(f"Malformed rack JSON: {e}") from None


@dataclass(frozen=True)
class RackMorphism:
    """Index map source -> target; a morphism when map(i ▷ j) = map(i) ▷ map(j)."""
    source: RackTable
    target: RackTable
    mapping: Tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(int(x) for x in self.mapping)
        object.__setattr__(self, "mapping", mapping)
        if len(mapping) != self.source.size:
            raise InputError(f"Map has {len(mapping)} entries for a source of size {self.source.size}")
        for x in mapping:
            if not 0 <= x < self.target.size:
                raise InputError(f"Map value {x} outside target")

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    @property
    def is_bijective(self) -> bool:
        return self.source.size == self.target.size and len(set(self.mapping)) == self.source.size

    def label_map(self) -> Dict[str, str]:
        return {
            self.source.labels[i]: self.target.labels[j]
            for i, j in enumerate(self.mapping)
        }

    @classmethod
    def identity(cls, rack: RackTable) -> "RackMorphism":
        return cls(rack, rack, tuple(range(rack.size)))

    @classmethod
    def from_labels(cls, source: RackTable, target: RackTable, pairs: Dict[str, str]) -> "RackMorphism":
        mapping: List[int] = [0] * source.size
        for a, b in pairs.items():
            mapping[source.index(a)] = target.index(b)
        return cls(source, target, tuple(mapping))


def indices_of(rack: RackTable, labels: Sequence[str]) -> Tuple[int, ...]:
    return tuple(rack.index(label) for label in labels)
