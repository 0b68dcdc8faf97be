from __future__ import annotations

from hermsig.cli import table_grid

# Every descriptor reproduced by the default table commands, exceptional pairs included.
GRID = table_grid(2) + table_grid(3)
CLASSICAL_GRID = table_grid(3)


def pytest_generate_tests(metafunc):
    if "grid_desc" in metafunc.fixturenames:
        metafunc.parametrize("grid_desc", GRID, ids=[d.label for d in GRID])


# Acceptance results, filled by test_acceptance.py and printed after the run.
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
