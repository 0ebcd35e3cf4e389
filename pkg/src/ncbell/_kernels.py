"""Hot numeric kernels.

Each kernel exists twice: a vectorised numpy body (``*_np``) and an
explicit-loop body compiled with numba (``*_nb``).  The public names
(``rk4_transfer``, ``quadratic_forms``, ``bell_profile``) point at the numba
versions unless numba is missing or ``NCBELL_DISABLE_NUMBA`` is set to a
truthy value before import.
"""

import os

import numpy as np

_FLAG = os.environ.get("NCBELL_DISABLE_NUMBA", "").strip().lower()

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and _FLAG not in ("1", "true", "yes", "on")


# --------------------------------------------------------------------------
# numpy bodies
# --------------------------------------------------------------------------

def rk4_transfer_np(gens, spans, steps):
    """Fixed-step RK4 for dM/dr = G M, M(0) = I, over a batch of generators.

    Parameters
    ----------
    gens : ndarray, shape (k, 4, 4)
    spans : ndarray, shape (k,)
        Final value of r for each generator.
    steps : int

    Returns
    -------
    ndarray, shape (k, 4, 4)
    """
    gens = np.asarray(gens, dtype=np.float64)
    h = (np.asarray(spans, dtype=np.float64) / steps)[:, None, None]
    m = np.broadcast_to(np.eye(4), gens.shape).copy()
    half = 0.5 * h
    for _ in range(steps):
        k1 = gens @ m
        k2 = gens @ (m + half * k1)
        k3 = gens @ (m + half * k2)
        k4 = gens @ (m + h * k3)
        m = m + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return m


def quadratic_forms_np(mat, points):
    """Return ``p^T mat p`` for every row ``p`` of ``points``."""
    points = np.asarray(points, dtype=np.float64)
    return np.einsum("ij,jk,ik->i", points, mat, points)


def bell_profile_np(intensities, n, t1):
    """Closed-form squeezed-state Bell value at every displacement intensity."""
    i = np.asarray(intensities, dtype=np.float64)
    return 0.25 * (1.0 + 2.0 * np.exp(-0.5 * n * i) - np.exp(-(n - t1) * i))


# --------------------------------------------------------------------------
# numba bodies
# --------------------------------------------------------------------------

def _rk4_transfer_loops(gens, spans, steps):
    k = gens.shape[0]
    out = np.empty((k, 4, 4))
    m = np.empty((4, 4))
    tmp = np.empty((4, 4))
    acc = np.empty((4, 4))
    kk = np.empty((4, 4))
    for b in range(k):
        g = gens[b]
        h = spans[b] / steps
        for i in range(4):
            for j in range(4):
                m[i, j] = 1.0 if i == j else 0.0
        for _ in range(steps):
            # stage 1
            for i in range(4):
                for j in range(4):
                    s = 0.0
                    for l in range(4):
                        s += g[i, l] * m[l, j]
                    kk[i, j] = s
                    acc[i, j] = s
            # stages 2 and 3 share the half-step update
            for stage in range(2):
                for i in range(4):
                    for j in range(4):
                        tmp[i, j] = m[i, j] + 0.5 * h * kk[i, j]
                for i in range(4):
                    for j in range(4):
                        s = 0.0
                        for l in range(4):
                            s += g[i, l] * tmp[l, j]
                        kk[i, j] = s
                        acc[i, j] += 2.0 * s
            # stage 4
            for i in range(4):
                for j in range(4):
                    tmp[i, j] = m[i, j] + h * kk[i, j]
            for i in range(4):
                for j in range(4):
                    s = 0.0
                    for l in range(4):
                        s += g[i, l] * tmp[l, j]
                    acc[i, j] += s
            for i in range(4):
                for j in range(4):
                    m[i, j] += (h / 6.0) * acc[i, j]
        for i in range(4):
            for j in range(4):
                out[b, i, j] = m[i, j]
    return out


def _quadratic_forms_loops(mat, points):
    npts = points.shape[0]
    dim = points.shape[1]
    out = np.empty(npts)
    for p in range(npts):
        s = 0.0
        for i in range(dim):
            row = 0.0
            for j in range(dim):
                row += mat[i, j] * points[p, j]
            s += points[p, i] * row
        out[p] = s
    return out


def _bell_profile_loops(intensities, n, t1):
    out = np.empty(intensities.shape[0])
    for k in range(intensities.shape[0]):
        i = intensities[k]
        out[k] = 0.25 * (1.0 + 2.0 * np.exp(-0.5 * n * i) - np.exp(-(n - t1) * i))
    return out


if HAVE_NUMBA:
    _rk4_nb = njit(cache=True)(_rk4_transfer_loops)
    _qf_nb = njit(cache=True)(_quadratic_forms_loops)
    _bell_nb = njit(cache=True)(_bell_profile_loops)

    def rk4_transfer_nb(gens, spans, steps):
        return _rk4_nb(
            np.ascontiguousarray(gens, dtype=np.float64),
            np.ascontiguousarray(spans, dtype=np.float64),
            int(steps),
        )

    def quadratic_forms_nb(mat, points):
        return _qf_nb(
            np.ascontiguousarray(mat, dtype=np.float64),
            np.ascontiguousarray(points, dtype=np.float64),
        )

    def bell_profile_nb(intensities, n, t1):
        return _bell_nb(
            np.ascontiguousarray(intensities, dtype=np.float64), float(n), float(t1)
        )
else:  # pragma: no cover
    rk4_transfer_nb = rk4_transfer_np
    quadratic_forms_nb = quadratic_forms_np
    bell_profile_nb = bell_profile_np


if USE_NUMBA:
    rk4_transfer = rk4_transfer_nb
    quadratic_forms = quadratic_forms_nb
    bell_profile = bell_profile_nb
else:
    rk4_transfer = rk4_transfer_np
    quadratic_forms = quadratic_forms_np
    bell_profile = bell_profile_np

BACKEND = "numba" if USE_NUMBA else "numpy"
