import sys

import numpy as np
import pytest
from hypothesis import strategies as st

from ncbell import NCParams

PAIRS = [(0.0, 0.0), (0.1, 0.1), (0.2, 0.1), (0.5, 0.5), (0.9, 0.9), (1e-3, 1e-6)]

# theta, eta >= 0 with theta*eta < 1
nc_pairs = st.tuples(
    st.floats(0.0, 3.0, allow_nan=False), st.floats(0.0, 3.0, allow_nan=False)
).filter(lambda te: te[0] * te[1] < 0.95)
r_values = st.floats(0.0, 3.0, allow_nan=False)


@pytest.fixture(params=PAIRS, ids=lambda te: f"th{te[0]:g}-eta{te[1]:g}")
def nc(request):
    return NCParams(*request.param)


def max_abs(a, b):
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
