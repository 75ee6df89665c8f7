import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ivqrof import load_problem
from ivqrof.data import bundled_path


@pytest.fixture(scope="session")
def case_problem():
    """Canonical case file: numeric tables as printed, labels attached."""
    return load_problem(bundled_path("case"))


@pytest.fixture(scope="session")
def consistent_problem():
    """Consistency-adjusted case file (pure numeric cells)."""
    return load_problem(bundled_path("case-consistent"))
