import pytest

from oracles import make

_VERDICTS = []


@pytest.fixture
def path_pair():
    # A_1 = 1->2->3, A_2 = 1->3->2
    return make(3, [(1, 2), (2, 3)], [(1, 3), (3, 2)])


@pytest.fixture
def verdict():
    """Record one PASS/FAIL line per acceptance criterion; printed at session end."""

    def record(number, title, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title}" + (f" | {detail}" if detail else "")
        _VERDICTS.append((number, line))
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _VERDICTS:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_VERDICTS, key=lambda t: t[0]):
            terminalreporter.write_line(line)
