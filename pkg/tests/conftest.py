import pytest

from workspan import build_graph, fixture_leiserson


@pytest.fixture
def fixture_graph():
    return fixture_leiserson()


@pytest.fixture
def chain3():
    return build_graph([("a", 1), ("b", 1), ("c", 1)], [("a", "b"), ("b", "c")])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
