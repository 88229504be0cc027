import math
import sys

import numpy as np
import pytest

from fracdyson.models import PRESET_NAMES, get_preset

ALPHAS = (0.25, 0.5, 0.75, 1.0)
R = math.sqrt(0.5)
BASKET = [
    np.array([1, 0], dtype=complex),
    np.array([0, 1], dtype=complex),
    np.array([R, R], dtype=complex),
    np.array([R, 1j * R], dtype=complex),
]


@pytest.fixture(params=PRESET_NAMES)
def preset(request):
    return get_preset(request.param)


@pytest.fixture(params=ALPHAS)
def alpha(request):
    return request.param


@pytest.fixture(scope="session")
def grid20():
    return np.linspace(0.0, 20.0, 401)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.format_line(n, *mod.RESULTS[n]))
