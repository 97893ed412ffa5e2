import pytest

from qcert.qtable import compute_q_table, load_or_build

# Largest index any theorem verification touches: seam 18502 + shift 1 + 6.
FULL_TABLE_SIZE = 20000

# One line per acceptance criterion, printed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def table2k():
    """Reference-DP table for tests that exercise the plain algorithm."""
    return compute_q_table(2000)


@pytest.fixture(scope="session")
def table20k():
    """Full table for verification runs; disk-cached between sessions."""
    return load_or_build(FULL_TABLE_SIZE)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
