import numpy as np
import pytest

from quasipack.cluster import EmbeddingMatrix, preset
from quasipack.strip import build_constraints

_acceptance: list[tuple[str, str]] = []


@pytest.fixture(scope="session")
def icosa3():
    B, config = preset("icosa3")
    return B, build_constraints(B), config


@pytest.fixture(scope="session")
def fibonacci():
    B, config = preset("fibonacci")
    return B, build_constraints(B), config


@pytest.fixture(scope="session")
def octagonal():
    """Synthetic D=2, M=4 embedding (eightfold star of unit vectors)."""
    angles = np.arange(4) * np.pi / 4
    B = EmbeddingMatrix(np.vstack([np.cos(angles), np.sin(angles)]))
    return B, build_constraints(B)


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
