import pytest

from knotforge.cjones import BraidWord, jones_table

TREFOIL = BraidWord(2, (1, 1, 1))
FIGURE_EIGHT = BraidWord(3, (1, -2, 1, -2))
UNKNOT = BraidWord(1, ())

# criterion label -> (passed, detail), filled by tests/test_acceptance.py
ACCEPTANCE_RESULTS = {}


@pytest.fixture(scope="session")
def table_cache(tmp_path_factory):
    return str(tmp_path_factory.mktemp("jones-cache"))


@pytest.fixture(scope="session")
def trefoil_table(table_cache):
    return jones_table(TREFOIL, 12, table_cache)


@pytest.fixture(scope="session")
def figure_eight_table(table_cache):
    return jones_table(FIGURE_EIGHT, 12, table_cache)


@pytest.fixture(scope="session")
def unknot_table():
    return jones_table(UNKNOT, 8)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE_RESULTS, key=lambda x: (int(x.split()[0]), x)):
        ok, detail = ACCEPTANCE_RESULTS[label]
        terminalreporter.write_line(f"criterion {label:<18} {'PASS' if ok else 'FAIL'}  {detail}")
