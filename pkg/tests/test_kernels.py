"""The numba and numpy kernel bodies must agree."""

import numpy as np
import pytest

from ncbell import _kernels

pytestmark = pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")


def test_rk4_numba_matches_numpy():
    rng = np.random.default_rng(3)
    gens = rng.normal(size=(5, 4, 4))
    spans = rng.uniform(0, 1.5, size=5)
    a = _kernels.rk4_transfer_nb(gens, spans, 500)
    b = _kernels.rk4_transfer_np(gens, spans, 500)
    np.testing.assert_allclose(a, b, rtol=1e-12, atol=1e-12)


def test_quadratic_forms_numba_matches_numpy():
    rng = np.random.default_rng(4)
    m = rng.normal(size=(4, 4))
    pts = rng.normal(size=(1000, 4))
    np.testing.assert_allclose(
        _kernels.quadratic_forms_nb(m, pts), _kernels.quadratic_forms_np(m, pts), rtol=1e-12, atol=1e-12
    )


def test_bell_profile_numba_matches_numpy():
    i = np.linspace(0, 3, 1001)
    np.testing.assert_allclose(
        _kernels.bell_profile_nb(i, 3.7, -3.6), _kernels.bell_profile_np(i, 3.7, -3.6), rtol=1e-14, atol=1e-16
    )


def test_backend_flag(monkeypatch):
    import importlib

    monkeypatch.setenv("NCBELL_DISABLE_NUMBA", "1")
    mod = importlib.reload(_kernels)
    try:
        assert mod.BACKEND == "numpy"
        assert mod.rk4_transfer is mod.rk4_transfer_np
    finally:
        monkeypatch.delenv("NCBELL_DISABLE_NUMBA")
        importlib.reload(_kernels)
