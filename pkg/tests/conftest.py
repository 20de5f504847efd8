import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sigmagroups import corpus  # noqa: E402
from sigmagroups.perm import Permutation  # noqa: E402


def perm(text: str, degree: int) -> Permutation:
    return Permutation.from_cycles(text, degree)


@pytest.fixture(scope="session")
def s3():
    return corpus.symmetric(3)


@pytest.fixture(scope="session")
def s4():
    return corpus.symmetric(4)


@pytest.fixture(scope="session")
def a5():
    return corpus.alternating(5)


@pytest.fixture(scope="session")
def g294():
    return corpus.example_294()


@pytest.fixture(scope="session")
def g42():
    return corpus.example_42()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        status, text = results[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {text}")
