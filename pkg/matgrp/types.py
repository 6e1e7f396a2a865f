"""Prime-field matrix types."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from rackit.errors import InputError


@dataclass(frozen=True)
class PrimeFieldMatrix:
    """
    n×n matrix over GF(p), entries in [0, p).

    Entries are reduced mod p on construction. Singular matrices are
    representable (mat_inv rejects them); GeneralLinearGroup only admits
    invertible ones.
    """

    p: int
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) % self.p for x in row) for row in self.rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise InputError(f"Matrix must be square and nonempty, got {len(rows)} rows")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(x) for x in row) for row in self.rows) + "]"

    def to_json(self) -> Dict[str, Any]:
        return {"p": self.p, "n": self.n, "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "PrimeFieldMatrix":
        """
        Decode {"p": 7, "n": 2, "rows": [[0, 1], [6, 0]]}.

        Raises:
            InputError: On missing keys or a size mismatch.
        """
        try:
            matrix = cls(p=int(data["p"]), rows=tuple(tuple(row) for row in data["rows"]))
        except (KeyError, TypeError, ValueError) as e:
            raise InputError(f"Malformed matrix JSON: {e}") from None
        if "n" in data and int(data["n"]) != matrix.n:
            raise InputError(f"Matrix declares n={data['n']} but has {matrix.n} rows")
        return matrix


@dataclass(frozen=True)
class DetCharacter:
    """
    χ = φ(det^h) with φ fixed by a generator γ of GF(p)^×.

    χ(A) = e^{2πi·h·dlog_γ(det A)/(p-1)}.
    """

    p: int
    generator: int
    h: int = 0


@dataclass(frozen=True)
class DiagonalClassData:
    """Conjugacy class of a diagonal matrix in GL(N, p)."""
    p: int
    diagonal: Tuple[int, ...]
    size: int
    element_order: int
    is_real: bool

    @property
    def n(self) -> int:
        return len(self.diagonal)

    @property
    def group_spec(self) -> str:
        return f"gl:{self.n}:{self.p}"

    @property
    def label(self) -> str:
        return "diag(" + ",".join(str(x) for x in self.diagonal) + ")"


@dataclass
class GLCriterionReport:
    """Exact evaluation of the determinant-character criterion on a diagonal class."""
    p: int
    diagonal: Tuple[int, ...]
    generator: int
    h: int
    determinant: int
    chi_exponent: int
    chi_is_minus_one: bool
    twists_with_minus_one: List[int] = field(default_factory=list)
    omega: Optional[int] = None
    hypotheses: Dict[str, bool] = field(default_factory=dict)
