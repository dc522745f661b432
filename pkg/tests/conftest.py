import pytest

from revforge import Language, TPO

_scorecard = []


@pytest.fixture(scope="session")
def scorecard():
    """Shared list of acceptance verdict lines, echoed after the run."""
    return _scorecard


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _scorecard:
        terminalreporter.section("acceptance scorecard")
        for line in _scorecard:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def lang2():
    return Language(("A", "B"))


@pytest.fixture(scope="session")
def lang3():
    return Language(("A", "B", "C"))


def tpo(*blocks) -> TPO:
    """Shorthand: tpo({0}, {1, 2}) builds the two-block preorder."""
    return TPO(tuple(frozenset(b) for b in blocks))
