import pytest

from mintrans import Hypergraph

_acceptance = []


@pytest.fixture
def path5():
    return Hypergraph.from_named([["a", "b"], ["b", "x"], ["x", "c"], ["c", "d"]])


def named(H, *sets):
    """Translate families of vertex-name strings into id frozensets."""
    return {frozenset(H.vertex_id(v) for v in s) for s in sets}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
