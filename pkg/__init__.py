"""
rackit - subrack detection and certificates for Nichols algebras over conjugacy classes

Finds D_p, D_p^(2), 𝔒 and 𝔒^(2) configurations inside conjugacy classes
of S_m and GL(N, p) with exact arithmetic, and records every verdict as a
certificate that can be re-verified from its data alone.
"""

from rackit.version import __version__

# Errors
from rackit.errors import BudgetExceeded, DefectError, Diagnosis, FamilyCheck, InputError, RackitError

# Groups
from rackit.groups import BaseGroup
from rackit.perm import Permutation, SymmetricGroup
from rackit.matgrp import GeneralLinearGroup, PrimeFieldMatrix

# Racks and families
from rackit.rack import RackTable, octahedral_rack, parse_rack_name
from rackit.dtype import Dp2Family, DpFamily, verify_dp, verify_dp2
from rackit.otype import Octa2Family, OctaFamily, verify_octa, verify_octa2

# Classification
from rackit.criteria import Certificate, Verdict, classify_gl_class, classify_sym_class, verify_certificate

# Configuration and logging
from rackit.config import RunConfig, load_run_config
from rackit.log import PathManager, setup_logging

__all__ = [
    "__version__",
    # Errors
    "BudgetExceeded",
    "DefectError",
    "Diagnosis",
    "FamilyCheck",
    "InputError",
    "RackitError",
    # Groups
    "BaseGroup",
    "Permutation",
    "SymmetricGroup",
    "GeneralLinearGroup",
    "PrimeFieldMatrix",
    # Racks and families
    "RackTable",
    "octahedral_rack",
    "parse_rack_name",
    "Dp2Family",
    "DpFamily",
    "verify_dp",
    "verify_dp2",
    "Octa2Family",
    "OctaFamily",
    "verify_octa",
    "verify_octa2",
    # Classification
    "Certificate",
    "Verdict",
    "classify_gl_class",
    "classify_sym_class",
    "verify_certificate",
    # Configuration and logging
    "RunConfig",
    "load_run_config",
    "PathManager",
    "setup_logging",
]
