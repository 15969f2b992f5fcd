import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cuspcover.fixtures import FixtureRunner
from cuspcover.groebner import Budget

REPO = Path(__file__).resolve().parent.parent


@pytest.fixture(scope="session")
def fixture_dir():
    return REPO / "fixtures"


@pytest.fixture(scope="session")
def runner(fixture_dir):
    """Shared runner so heavy presentation computations happen once."""
    return FixtureRunner(fixture_dir=fixture_dir, budget=Budget(pairs=60000))


@pytest.fixture(scope="session")
def report(runner):
    return runner.run_all()
