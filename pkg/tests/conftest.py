import pytest

from xyangian.backends import Abstract, Oracle
from xyangian.tensor import AlgebraContext


@pytest.fixture(scope="session")
def ctx_b1():
    return AlgebraContext.of("B", 1)


@pytest.fixture(scope="session")
def ctx_c2():
    return AlgebraContext.of("C", 2)


@pytest.fixture(scope="session")
def ctx_d2():
    return AlgebraContext.of("D", 2)


@pytest.fixture(scope="session")
def abstract_b1(ctx_b1):
    return Abstract(ctx_b1, 3)


@pytest.fixture(scope="session")
def abstract_c2(ctx_c2):
    return Abstract(ctx_c2, 3)


@pytest.fixture(scope="session")
def oracle_c2(ctx_c2):
    return Oracle(ctx_c2, 4)


def assert_cases_pass(cases):
    bad = []
    for c in cases:
        out = c.run()
        if not out.ok:
            bad.append((c.id, out.witness))
    assert not bad, bad


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num][1])
