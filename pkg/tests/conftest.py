import pytest

from mstsens.graph import WeightedGraph

_CRITERIA = {}


@pytest.fixture
def criterion():
    """Record an acceptance criterion outcome for the end-of-run summary."""
    def record(number, title, ok, detail=""):
        _CRITERIA[number] = (title, bool(ok), detail)
        print(f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} {detail}")
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok, detail = _CRITERIA[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail}")


@pytest.fixture
def triangle():
    # vertices 1,2,3 in files are 0,1,2 here
    return WeightedGraph.from_edges(3, [(0, 1, 1), (1, 2, 2), (0, 2, 5)])
