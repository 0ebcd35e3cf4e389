"""Bell-CHSH functional built from the Wigner function.

The displacement family is one-parameter: ``alpha1 = +sqrt(I)``,
``alpha2 = -sqrt(I)`` with ``I >= 0``.  For the squeezed family this
turns the four-term CHSH combination into

    B(I) = (1 + 2 exp(-n I / 2) - exp(-(n - t1) I)) / 4,

whose maximiser and maximum depend on ``(n, t1)`` only through the ratio
``t1/n`` (the maximum) or scale as ``1/n`` (the maximiser).
"""

from dataclasses import dataclass
import math

import numpy as np

from ncbell import _kernels
from ncbell.gaussian import GaussianState
from ncbell.phase_space import COMMUTATIVE
from ncbell.squeezing import InvCovParams, inv_cov_params, nc_covariance

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class Displacement:
    alpha1: complex = 0j
    alpha2: complex = 0j

    def __post_init__(self):
        a1, a2 = complex(self.alpha1), complex(self.alpha2)
        if not all(map(math.isfinite, (a1.real, a1.imag, a2.real, a2.imag))):
            raise ValueError("displacement components must be finite")
        object.__setattr__(self, "alpha1", a1)
        object.__setattr__(self, "alpha2", a2)

    @classmethod
    def dichotomic(cls, intensity):
        """``alpha1 = +sqrt(I)``, ``alpha2 = -sqrt(I)``."""
        if intensity < 0:
            raise ValueError("intensity must be non-negative")
        s = math.sqrt(intensity)
        return cls(s, -s)


def _phase_point(a1, a2):
    return (a1.real, a1.imag, a2.real, a2.imag)


def bell_from_wigner(state, d):
    """``(pi^2/4) [W(0,0) + W(a1,0) + W(0,a2) - W(a1,a2)]``."""
    zero = 0j
    pts = np.array(
        [
            _phase_point(zero, zero),
            _phase_point(d.alpha1, zero),
            _phase_point(zero, d.alpha2),
            _phase_point(d.alpha1, d.alpha2),
        ]
    )
    w = state.wigner_many(pts)
    return float(math.pi**2 / 4.0 * (w[0] + w[1] + w[2] - w[3]))


def _nt1(params):
    if isinstance(params, InvCovParams):
        return params.n, params.t1
    n, t1 = params
    return float(n), float(t1)


def bell_closed(intensity, params):
    """Closed-form Bell value for the squeezed family at displacement ``I``."""
    if intensity < 0:
        raise ValueError(f"intensity must be >= 0, got {intensity!r}")
    n, t1 = _nt1(params)
    return 0.25 * (1.0 + 2.0 * math.exp(-0.5 * n * intensity) - math.exp(-(n - t1) * intensity))


def bell_profile(intensities, params):
    """Vectorised :func:`bell_closed` over an array of intensities."""
    n, t1 = _nt1(params)
    return _kernels.bell_profile(np.asarray(intensities, dtype=float), n, t1)


def _check_optimum_domain(n, t1):
    if not (n > 0 and n - t1 > 0 and n - 2.0 * t1 != 0):
        raise ValueError(f"no stationary point for n={n!r}, t1={t1!r}")


def optimal_displacement(params):
    """Stationary point ``2/(n - 2 t1) * ln((n - t1)/n)``."""
    n, t1 = _nt1(params)
    _check_optimum_domain(n, t1)
    return 2.0 / (n - 2.0 * t1) * math.log1p(-t1 / n)


def bell_at_optimum(params):
    return bell_closed(optimal_displacement(params), params)


def bell_at_optimum_reduced(params):
    """Substituted form ``(1 + (n-2t1)/(n-t1) * (1 - t1/n)^(-n/(n-2t1))) / 4``."""
    n, t1 = _nt1(params)
    _check_optimum_domain(n, t1)
    return 0.25 * (1.0 + (n - 2.0 * t1) / (n - t1) * (1.0 - t1 / n) ** (-n / (n - 2.0 * t1)))


def bell_at_optimum_printed(params):
    """Published coefficient ``(3n - 2t1)``; kept only for regression comparison.

    Disagrees with direct substitution, e.g. it gives 1 instead of 1/2 for
    the unsqueezed vacuum.
    """
    n, t1 = _nt1(params)
    _check_optimum_domain(n, t1)
    return 0.25 * (1.0 + (3.0 * n - 2.0 * t1) * (1.0 - t1 / n) ** (-n / (n - 2.0 * t1)) / (n - t1))


def optimal_displacement_nc(spec, p=COMMUTATIVE):
    return optimal_displacement(inv_cov_params(spec, p))


def nc_commutative_gap(spec, p=COMMUTATIVE):
    return bell_at_optimum(inv_cov_params(spec, p)) - bell_at_optimum(inv_cov_params(spec, COMMUTATIVE))


def golden_max(f, lo, hi, tol=1e-12, max_iter=200):
    """Golden-section search for the maximiser of a unimodal ``f`` on [lo, hi]."""
    x1 = hi - INV_PHI * (hi - lo)
    x2 = lo + INV_PHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        if f1 >= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - INV_PHI * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + INV_PHI * (hi - lo)
            f2 = f(x2)
    return (x1, f1) if f1 >= f2 else (x2, f2)


def grid_maximize(params, i_max, points):
    """Dense scan of :func:`bell_closed` on [0, i_max] plus golden refinement.

    Ties (within a few ulps) are broken toward the smallest intensity, so a
    profile that is flat at the origin returns ``I = 0`` exactly.
    """
    if not (i_max > 0 and math.isfinite(i_max)):
        raise ValueError(f"i_max must be positive and finite, got {i_max!r}")
    if int(points) != points or points < 3:
        raise ValueError(f"points must be an integer >= 3, got {points!r}")
    grid = np.linspace(0.0, i_max, int(points))
    vals = bell_profile(grid, params)
    k = int(np.argmax(vals))
    lo, hi = grid[max(k - 1, 0)], grid[min(k + 1, len(grid) - 1)]
    x, fx = golden_max(lambda i: bell_closed(i, params), lo, hi)
    if vals[k] >= fx:
        x, fx = float(grid[k]), float(vals[k])
    f0 = bell_closed(0.0, params)
    if fx - f0 <= 4.0 * np.finfo(float).eps * abs(f0):
        return 0.0, f0
    return float(x), float(fx)


def stationarity_residual(params, rel_step=1e-5):
    """Central-difference derivative of :func:`bell_closed` at the optimum.

    The step is ``rel_step * I`` (or ``rel_step`` at ``I = 0``) since the
    profile narrows like ``1/n`` under strong squeezing.
    """
    i = optimal_displacement(params)
    h = rel_step * i if i > 0 else rel_step
    lo = max(i - h, 0.0)
    return (bell_closed(i + h, params) - bell_closed(lo, params)) / (i + h - lo)


def is_nonlocal(b):
    return abs(b) > 2.0


@dataclass(frozen=True)
class BellResult:
    i_opt: float
    b_opt: float
    b_commutative: float
    gap: float
    nonlocal_: bool


def evaluate(spec, p=COMMUTATIVE):
    """Optimal Bell value for the NC squeezed state and its commutative baseline."""
    params = inv_cov_params(spec, p)
    i_opt = optimal_displacement(params)
    b_opt = bell_closed(i_opt, params)
    b_comm = bell_at_optimum(inv_cov_params(spec, COMMUTATIVE))
    return BellResult(i_opt, b_opt, b_comm, b_opt - b_comm, is_nonlocal(b_opt))


def squeezed_state(spec, p=COMMUTATIVE):
    """Centered Gaussian state with covariance ``S^NC(r)^T S^NC(r)``."""
    return GaussianState.centered(nc_covariance(spec, p))
