import pytest

from ruledscroll.curve_model import CurveModel, DivisorClass

_ACCEPTANCE = pytest.StashKey[list]()


def pt(name, k=1):
    return DivisorClass.point(name, k)


@pytest.fixture
def g1():
    return CurveModel(1, ["P", "Q", "R"])


@pytest.fixture
def g2():
    # W a Weierstrass point, P + Q a fiber of the g^1_2
    K = pt("W", 2)
    return CurveModel(2, ["W", "P", "Q"], {K: 2}, aliases=[(pt("P") + pt("Q"), K)], canonical=K)


@pytest.fixture
def acceptance_log(request):
    log = request.config.stash.setdefault(_ACCEPTANCE, [])
    return log.append


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
