"""
Pytest configuration and fixtures.

Root-level fixtures shared across all test modules.
"""

import os
from fractions import Fraction
from pathlib import Path
from typing import Generator

import pytest

from dedekind.core import config as core_config
from dedekind.models import ApproximationPlan
from dedekind.services.approximator import build_plan


# === Project Paths ===

@pytest.fixture(scope="session")
def project_root() -> Path:
    """Return the project root directory."""
    return Path(__file__).parent.parent


# === Marker Configuration ===

def pytest_configure(config):
    """Configure custom markers."""
    config.addinivalue_line("markers", "cli: Command-line surface tests")
    config.addinivalue_line("markers", "slow: Tests that take longer to run")


def pytest_collection_modifyitems(config, items):
    """Automatically add markers based on test location."""
    for item in items:
        if "test_cli" in str(item.fspath):
            item.add_marker(pytest.mark.cli)


# === Settings ===

@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch: pytest.MonkeyPatch) -> Generator[None, None, None]:
    """Isolate every test from DEDEKIND_* variables and the settings cache."""
    for name in list(os.environ):
        if name.upper().startswith("DEDEKIND_"):
            monkeypatch.delenv(name, raising=False)
    core_config.get_settings.cache_clear()
    yield
    core_config.get_settings.cache_clear()


# === Reference example: 7/11 within 1/100 ===

@pytest.fixture
def reference_plan() -> ApproximationPlan:
    """Plan approximating 7/11 within 1/100."""
    return build_plan(Fraction(7, 11), Fraction(1, 100))


@pytest.fixture
def reference_value() -> Fraction:
    """S(627251, 172769740)."""
    return Fraction(55599441, 86384870)
