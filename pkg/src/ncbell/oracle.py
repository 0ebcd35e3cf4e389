"""Independent check of the NC transfer matrix by integrating the flow.

Converting the Heisenberg equations for ``a, a+, b, b+`` to quadratures
(``a = (x + i px)/sqrt(2)``, ``b = (y + i py)/sqrt(2)``) gives the real
linear system dz/dr = G z with

    dx/dr  =  theta px + y
    dpx/dr =  eta x    - py
    dy/dr  =  x        - theta py
    dpy/dr = -px       - eta y

where db+/dr is taken as the Hermitian conjugate of db/dr.
"""

from dataclasses import dataclass
import math

import numpy as np

from ncbell import _kernels
from ncbell.phase_space import COMMUTATIVE, omega_matrix
from ncbell.squeezing import SqueezeSpec, squeeze_nc

DEFAULT_STEPS = 20000


@dataclass(frozen=True, eq=False)
class QuadratureGenerator:
    g: np.ndarray

    def __post_init__(self):
        g = np.array(self.g, dtype=float)
        g.flags.writeable = False
        object.__setattr__(self, "g", g)


@dataclass(frozen=True)
class IntegrationReport:
    transfer: np.ndarray
    max_abs_residual_vs_closed_form: float
    steps: int
    step_size: float


def generator(p=COMMUTATIVE):
    th, et = p.theta, p.eta
    return QuadratureGenerator(
        [
            [0.0, th, 1.0, 0.0],
            [et, 0.0, 0.0, -1.0],
            [1.0, 0.0, 0.0, -th],
            [0.0, -1.0, -et, 0.0],
        ]
    )


def hamiltonian_asymmetry(G, p):
    """Max-abs antisymmetric part of ``G Omega``; zero for a Hamiltonian flow."""
    g = G.g if isinstance(G, QuadratureGenerator) else np.asarray(G, dtype=float)
    go = g @ omega_matrix(p)
    return float(np.max(np.abs(go - go.T)))


def _check_steps(r, steps):
    if int(steps) != steps or steps < 1:
        raise ValueError(f"steps must be a positive integer, got {steps!r}")
    if not math.isfinite(r):
        raise ValueError(f"r must be finite, got {r!r}")


def integrate_transfer(G, r, steps=DEFAULT_STEPS):
    """RK4 solution of dM/dr = G M with M(0) = I."""
    _check_steps(r, steps)
    g = G.g if isinstance(G, QuadratureGenerator) else np.asarray(G, dtype=float)
    return _kernels.rk4_transfer(g[None], np.array([float(r)]), int(steps))[0]


def integrate_many(gens, spans, steps=DEFAULT_STEPS):
    """Batched :func:`integrate_transfer`; one RK4 run per (generator, r) pair."""
    spans = np.asarray(spans, dtype=float)
    for r in spans:
        _check_steps(r, steps)
    gs = np.stack([G.g if isinstance(G, QuadratureGenerator) else np.asarray(G, float) for G in gens])
    return _kernels.rk4_transfer(gs, spans, int(steps))


def validate_closed_form(spec, p=COMMUTATIVE, steps=DEFAULT_STEPS):
    spec = spec if isinstance(spec, SqueezeSpec) else SqueezeSpec(spec)
    transfer = integrate_transfer(generator(p), spec.r, steps)
    resid = float(np.max(np.abs(transfer - squeeze_nc(spec, p))))
    return IntegrationReport(transfer, resid, int(steps), spec.r / steps)
