"""Shared fixtures.

The repository root is the rackit package (flat layout); when it is not
installed it is registered under that name before the tests import it.
"""

import importlib.util
import sys
from pathlib import Path

import pytest
from hypothesis import settings

ROOT = Path(__file__).resolve().parent.parent


def _register_package() -> None:
    try:
        import rackit  # noqa: F401
        return
    except ImportError:
        pass
    spec = importlib.util.spec_from_file_location(
        "rackit", ROOT / "__init__.py", submodule_search_locations=[str(ROOT)]
    )
    module = importlib.util.module_from_spec(spec)
    sys.modules["rackit"] = module
    spec.loader.exec_module(module)


_register_package()

settings.register_profile("deterministic", derandomize=True, max_examples=60, deadline=None)
settings.load_profile("deterministic")

from rackit.otype.symmetric import s4_sextuple, sym_o2_8cycle  # noqa: E402
from rackit.perm import ops  # noqa: E402
from rackit.perm.group import SymmetricGroup  # noqa: E402


def representative(m: int, t: str):
    return ops.class_data(m, ops.parse_cycle_type(t, m)).representative


@pytest.fixture
def s4():
    return SymmetricGroup(4)


@pytest.fixture
def s6():
    return SymmetricGroup(6)


@pytest.fixture
def s8():
    return SymmetricGroup(8)


@pytest.fixture
def octa_s4():
    """The octahedral sextuple of 4-cycles in S_4."""
    return s4_sextuple()


@pytest.fixture
def eight_cycle():
    """The 𝔒^(2) family of the 8-cycle (1 ... 8) in S_8."""
    return sym_o2_8cycle(representative(8, "8"))
