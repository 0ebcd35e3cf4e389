"""Bipartite Gaussian states: Wigner function, local invariants, standard form.

Vacuum covariance is the identity, so the Wigner normalisation ``1/pi^2``
integrates to 4 over R^4.  :func:`wigner_unit` divides that out.
"""

from dataclasses import dataclass
import math

import numpy as np

from ncbell import _kernels

SYM_TOL = 1e-12
MAX_CONDITION = 1e12


class UnphysicalStateError(ValueError):
    """Covariance matrix is not symmetric positive-definite (or too ill-conditioned)."""


def is_physical(cov):
    cov = np.asarray(cov, dtype=float)
    if cov.shape != (4, 4) or not np.all(np.isfinite(cov)):
        return False
    if np.max(np.abs(cov - cov.T)) > SYM_TOL * max(1.0, np.max(np.abs(cov))):
        return False
    return bool(np.all(np.linalg.eigvalsh(cov) > 0))


def _checked_cov(cov):
    cov = np.array(cov, dtype=float)
    if not is_physical(cov):
        raise UnphysicalStateError("covariance is not symmetric positive-definite")
    cond = np.linalg.cond(cov)
    if cond > MAX_CONDITION:
        raise UnphysicalStateError(f"covariance condition number {cond:.3g} exceeds {MAX_CONDITION:g}")
    return cov


@dataclass(frozen=True, eq=False)
class GaussianState:
    """Mean 4-vector and covariance of a two-mode Gaussian state."""

    mean: np.ndarray
    cov: np.ndarray

    def __post_init__(self):
        mean = np.array(self.mean, dtype=float).reshape(4)
        if not np.all(np.isfinite(mean)):
            raise ValueError("mean must be finite")
        cov = _checked_cov(self.cov)
        mean.flags.writeable = False
        cov.flags.writeable = False
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)
        object.__setattr__(self, "_inv", np.linalg.inv(cov))
        object.__setattr__(self, "_norm", 1.0 / (math.pi**2 * math.sqrt(np.linalg.det(cov))))

    @classmethod
    def centered(cls, cov):
        return cls(np.zeros(4), cov)

    @classmethod
    def vacuum(cls):
        return cls(np.zeros(4), np.eye(4))

    @property
    def inv_cov(self):
        return self._inv

    def wigner_many(self, points):
        """Vectorised :func:`wigner` over an ``(N, 4)`` array of phase points."""
        pts = np.atleast_2d(np.asarray(points, dtype=float)) - self.mean
        return self._norm * np.exp(-0.5 * _kernels.quadratic_forms(self._inv, pts))


def wigner(state, point):
    """Wigner function at a phase point, normalised to 4 over R^4."""
    return float(state.wigner_many(np.reshape(point, (1, 4)))[0])


def wigner_unit(state, point):
    """Unit-normalised variant of :func:`wigner` (integrates to 1)."""
    return wigner(state, point) / 4.0


@dataclass(frozen=True)
class LocalInvariants:
    i1: float
    i2: float
    i3: float
    i4: float

    def as_tuple(self):
        return (self.i1, self.i2, self.i3, self.i4)


@dataclass(frozen=True)
class StandardForm:
    n: float
    m: float
    c1: float
    c2: float

    def matrix(self):
        """Assemble the standard-form covariance."""
        n, m, c1, c2 = self.n, self.m, self.c1, self.c2
        return np.array(
            [
                [n, 0.0, c1, 0.0],
                [0.0, n, 0.0, c2],
                [c1, 0.0, m, 0.0],
                [0.0, c2, 0.0, m],
            ]
        )


def local_invariants(cov):
    """Block determinants det(alpha), det(beta), det(gamma), det(cov)."""
    cov = np.asarray(cov, dtype=float)
    return LocalInvariants(
        float(np.linalg.det(cov[:2, :2])),
        float(np.linalg.det(cov[2:, 2:])),
        float(np.linalg.det(cov[:2, 2:])),
        float(np.linalg.det(cov)),
    )


def standard_form(cov, rtol=1e-9):
    """Recover ``(n, m, c1, c2)`` from the four local invariants.

    ``c1**2`` and ``c2**2`` are the roots of
    ``z**2 - s z + I3**2`` with ``s = (n^2 m^2 + I3^2 - I4) / (n m)``.
    Convention: ``c1 >= |c2|``, ``c1 >= 0``, sign of ``c2`` from ``I3``.
    """
    inv = local_invariants(cov)
    if inv.i1 <= 0 or inv.i2 <= 0:
        raise UnphysicalStateError("local blocks must have positive determinant")
    n, m = math.sqrt(inv.i1), math.sqrt(inv.i2)
    nm = n * m
    s = (nm * nm + inv.i3 * inv.i3 - inv.i4) / nm
    p = inv.i3 * inv.i3
    disc = s * s - 4.0 * p
    scale = max(s * s, 1.0)
    if disc < 0:
        if disc < -rtol * scale:
            raise UnphysicalStateError("invariants admit no real standard form")
        disc = 0.0
    root = math.sqrt(disc)
    hi, lo = (s + root) / 2.0, (s - root) / 2.0
    if lo < 0:
        if lo < -rtol * scale:
            raise UnphysicalStateError("invariants admit no real standard form")
        lo = 0.0
    c1 = math.sqrt(hi)
    c2 = math.copysign(math.sqrt(lo), inv.i3) if inv.i3 != 0 else 0.0
    return StandardForm(n, m, c1, c2)
