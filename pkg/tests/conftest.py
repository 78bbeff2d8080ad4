import numpy as np
import pytest

from alphaspec.graph import Graph


def oracle_spectrum(m) -> np.ndarray:
    """Descending eigenvalues from LAPACK, independent of the package solver."""
    return np.sort(np.linalg.eigvalsh(np.asarray(m, dtype=float)))[::-1]


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    upper = np.triu(rng.random((n, n)) < p, 1)
    return Graph(upper | upper.T)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


# acceptance lines, filled by test_acceptance and echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
