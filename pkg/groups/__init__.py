"""Group abstraction shared by the family verifiers."""

from rackit.groups.base import BaseGroup
from rackit.groups.dihedral import DihedralElement, DihedralGroup

__all__ = ["BaseGroup", "DihedralElement", "DihedralGroup"]
