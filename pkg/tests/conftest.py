import pytest
from hypothesis import strategies as st

from staropen.space import discrete, generate_topology, indiscrete, to_bits
from staropen.zoo import particular_point, sierpinski, t3


@pytest.fixture
def s2():
    return sierpinski()


@pytest.fixture
def t3_space():
    return t3()


@pytest.fixture
def p3():
    return particular_point(3)


@pytest.fixture
def d2():
    return discrete(2)


@pytest.fixture
def i2():
    return indiscrete(2)


def B(*points):
    return to_bits(points)


@st.composite
def spaces(draw, max_n=6):
    """Random finite spaces, generated from a random subbasis."""
    n = draw(st.integers(0, max_n))
    subbasis = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=6))
    return generate_topology(n, subbasis)


@st.composite
def space_and_set(draw, max_n=6):
    s = draw(spaces(max_n))
    return s, draw(st.integers(0, s.full))


_criteria = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and (report.when == "call" or report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        if report.when == "call" or name not in _criteria:
            _criteria[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _criteria.items():
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
