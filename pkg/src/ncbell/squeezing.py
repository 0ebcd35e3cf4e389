"""Two-mode squeeze transfer matrices, commutative and noncommutative.

The NC transfer matrix contains ``sqrt(theta/eta) * sinh(xi r)`` and
``sqrt(eta/theta) * sinh(xi r)``.  Both are rewritten as
``theta * r * sinhc(xi r)`` and ``eta * r * sinhc(xi r)``, which agree with
the closed form away from the boundary and stay finite when either
constant vanishes.  The same rewrite handles the ratio terms of the
inverse covariance.
"""

from dataclasses import dataclass
import math

import numpy as np

from ncbell.phase_space import COMMUTATIVE

R_MAX = 14.0
SERIES_CUTOFF = 1e-6


def sinhc(x):
    """``sinh(x)/x`` with its Taylor series below ``SERIES_CUTOFF``."""
    if abs(x) < SERIES_CUTOFF:
        return 1.0 + x * x / 6.0
    return math.sinh(x) / x


@dataclass(frozen=True)
class SqueezeSpec:
    """Squeezing parameter ``r = k t`` at zero pump phase."""

    r: float

    def __post_init__(self):
        r = float(self.r)
        if not math.isfinite(r) or r < 0 or r > R_MAX:
            raise ValueError(f"r must lie in [0, {R_MAX}], got {self.r!r}")
        object.__setattr__(self, "r", r)


def _as_spec(spec):
    return spec if isinstance(spec, SqueezeSpec) else SqueezeSpec(spec)


def _xi(p):
    prod = p.theta * p.eta
    if prod < 0:
        raise ValueError("theta*eta < 0 gives a complex xi; not supported")
    return math.sqrt(prod)


def squeeze_commutative(spec):
    r = _as_spec(spec).r
    ch, sh = math.cosh(r), math.sinh(r)
    return np.array(
        [
            [ch, 0.0, sh, 0.0],
            [0.0, ch, 0.0, -sh],
            [sh, 0.0, ch, 0.0],
            [0.0, -sh, 0.0, ch],
        ]
    )


def squeeze_nc(spec, p=COMMUTATIVE):
    """NC Bogoliubov transfer matrix mapping (x0, px0, y0, py0) to (x, px, y, py)."""
    r = _as_spec(spec).r
    xi = _xi(p)
    ch, sh = math.cosh(r), math.sinh(r)
    cx = math.cosh(xi * r)
    sc = sinhc(xi * r)
    a = p.theta * r * sc  # sqrt(theta/eta) sinh(xi r)
    b = p.eta * r * sc  # sqrt(eta/theta) sinh(xi r)
    return np.array(
        [
            [cx * ch, a * ch, cx * sh, -a * sh],
            [b * ch, cx * ch, b * sh, -cx * sh],
            [cx * sh, a * sh, cx * ch, -a * ch],
            [-b * sh, -cx * sh, -b * ch, cx * ch],
        ]
    )


def covariance_of(S):
    """``S^T S``."""
    S = np.asarray(S, dtype=float)
    return S.T @ S


@dataclass(frozen=True)
class InvCovParams:
    """Six scalars parameterising the inverse NC covariance."""

    n: float
    m: float
    d: float
    c: float
    t1: float
    t2: float

    def as_tuple(self):
        return (self.n, self.m, self.d, self.c, self.t1, self.t2)

    def scaled(self, kappa):
        return InvCovParams(*(kappa * v for v in self.as_tuple()))


def inv_cov_params(spec, p=COMMUTATIVE):
    r = _as_spec(spec).r
    xi = _xi(p)
    xr = xi * r
    big = 2.0 * xr
    ch2, sh2 = math.cosh(2.0 * r), math.sinh(2.0 * r)
    one_plus = 1.0 + math.cosh(big)
    sc = sinhc(xr)
    # (theta/eta)(1 - cosh 2 xi r) = -2 theta^2 r^2 sinhc(xi r)^2, and mirrored
    ratio_theta = -2.0 * (p.theta * r * sc) ** 2
    ratio_eta = -2.0 * (p.eta * r * sc) ** 2
    bracket_n = one_plus - ratio_theta
    bracket_m = one_plus - ratio_eta
    # (theta+eta)/(2 xi) * sinh(2 xi r) = (theta+eta) r sinhc(2 xi r)
    cross = (p.theta + p.eta) * r * sinhc(big)
    return InvCovParams(
        n=0.5 * ch2 * bracket_n,
        m=0.5 * ch2 * bracket_m,
        d=-cross * ch2,
        c=cross * sh2,
        t1=-0.5 * sh2 * bracket_n,
        t2=0.5 * sh2 * bracket_m,
    )


def assemble_inverse(params):
    n, m, d, c, t1, t2 = params.as_tuple()
    return np.array(
        [
            [n, d, t1, -c],
            [d, m, c, t2],
            [t1, c, n, -d],
            [-c, t2, -d, m],
        ]
    )


def nc_covariance(spec, p=COMMUTATIVE):
    """Convenience: ``covariance_of(squeeze_nc(spec, p))``."""
    return covariance_of(squeeze_nc(spec, p))
