from pathlib import Path

import pytest

from cmsha import make_curve_context
from cmsha.orbit import read_gpoly

DATA = Path(__file__).parent / "data"

_H = {}


def load_h(D):
    if D not in _H:
        _H[D] = read_gpoly(DATA / f"h{D}.gpoly")
    return _H[D]


@pytest.fixture(scope="session")
def h17():
    return load_h(17)


@pytest.fixture(scope="session")
def h14():
    return load_h(-14)


@pytest.fixture(scope="session")
def curve17():
    return make_curve_context(17)


@pytest.fixture(scope="session")
def curve14():
    return make_curve_context(-14)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
