"""Invariant suite run by ``ncbell verify``.

Every check returns the worst residual over the parameter grid together
with its native bound; a check passes when the residual is at most
``min(bound, tolerance)``.
"""

from dataclasses import dataclass
import math

import numpy as np
from numpy.polynomial.hermite import hermgauss

from ncbell.bell import (
    Displacement,
    bell_closed,
    bell_from_wigner,
    grid_maximize,
    nc_commutative_gap,
    optimal_displacement,
    squeezed_state,
    stationarity_residual,
)
from ncbell.gaussian import GaussianState, local_invariants
from ncbell.oracle import DEFAULT_STEPS, generator, integrate_many
from ncbell.phase_space import NCParams, check_darboux, darboux_map, omega_matrix
from ncbell.squeezing import (
    assemble_inverse,
    inv_cov_params,
    nc_covariance,
    squeeze_nc,
)

DEFAULT_PAIRS = ((0.0, 0.0), (0.1, 0.1), (0.2, 0.1), (0.5, 0.5), (0.9, 0.9), (1e-3, 1e-6))
DEFAULT_R = tuple(round(0.05 * k, 10) for k in range(1, 41))
INTENSITIES = tuple(round(0.1 * k, 10) for k in range(21))


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    bound: float

    @property
    def passed(self):
        return bool(np.isfinite(self.residual)) and self.residual <= self.bound


def gauss_hermite_integral(state, nodes=24, scale=math.sqrt(2.0)):
    """Product Gauss-Hermite estimate of the integral of the Wigner function over R^4.

    The grid is fixed in the original coordinates (node ``x`` maps to
    ``scale * x``) and does not use the state's covariance.
    """
    x, w = hermgauss(nodes)
    grid = np.stack(np.meshgrid(x, x, x, x, indexing="ij"), axis=-1).reshape(-1, 4)
    weights = np.prod(np.stack(np.meshgrid(w, w, w, w, indexing="ij"), axis=-1).reshape(-1, 4), axis=1)
    vals = state.wigner_many(scale * grid) * np.exp(np.sum(grid * grid, axis=1))
    return float(scale**4 * np.sum(weights * vals))


def _rel(a, b):
    return abs(a - b) / max(1.0, abs(b))


def run_checks(r_values=DEFAULT_R, pairs=DEFAULT_PAIRS, ode_steps=DEFAULT_STEPS, tolerance=1e-6, ode_r_max=1.0):
    params = [NCParams(th, et) for th, et in pairs]
    grid = [(r, p) for r in r_values for p in params]
    eye = np.eye(4)
    res = {}

    res["darboux"] = (max(check_darboux(darboux_map(p), p) for p in params), 1e-12)

    sympl = det = inv_eq = inv_cl = 0.0
    for r, p in grid:
        S = squeeze_nc(r, p)
        om = omega_matrix(p)
        sympl = max(sympl, np.max(np.abs(S @ om @ S.T - om)))
        cov = S.T @ S
        det = max(det, abs(np.linalg.det(cov) - 1.0))
        a = local_invariants(cov).as_tuple()
        b = local_invariants(nc_covariance(r)).as_tuple()
        inv_eq = max(inv_eq, max(_rel(x, y) for x, y in zip(a, b)))
        inv_cl = max(inv_cl, np.max(np.abs(assemble_inverse(inv_cov_params(r, p)) @ cov - eye)))
    res["omega_symplecticity"] = (sympl, 1e-10)
    res["unit_determinant"] = (det, 1e-9)
    res["invariants_equal"] = (inv_eq, 1e-9)
    res["inverse_closed_form"] = (inv_cl, 1e-9)
    res["envelope_at_origin"] = (max(np.max(np.abs(nc_covariance(0.0, p) - eye)) for p in params), 1e-15)

    ode_pts = [(r, p) for r, p in grid if r <= ode_r_max]
    if ode_pts:
        transfers = integrate_many([generator(p) for _, p in ode_pts], [r for r, _ in ode_pts], ode_steps)
        worst = {}
        for M, (r, p) in zip(transfers, ode_pts):
            key = "ode_oracle_commutative" if p.is_commutative else "ode_oracle_nc"
            worst[key] = max(worst.get(key, 0.0), float(np.max(np.abs(M - squeeze_nc(r, p)))))
        for key, bound in (("ode_oracle_nc", 1e-6), ("ode_oracle_commutative", 1e-8)):
            if key in worst:
                res[key] = (worst[key], bound)

    stat = gridm = recon = gap = 0.0
    for r, p in grid:
        icp = inv_cov_params(r, p)
        i_opt = optimal_displacement(icp)
        stat = max(stat, abs(stationarity_residual(icp)))
        i_star, _ = grid_maximize(icp, 2.0, 10_000)
        gridm = max(gridm, abs(i_star - i_opt))
        state = squeezed_state(r, p)
        for i in INTENSITIES:
            recon = max(recon, abs(bell_from_wigner(state, Displacement.dichotomic(i)) - bell_closed(i, icp)))
        gap = max(gap, abs(nc_commutative_gap(r, p)))
    res["stationarity"] = (stat, 1e-6)
    res["grid_maximize_agreement"] = (gridm, 1e-6)
    res["bell_reconstruction"] = (recon, 1e-10)
    res["nc_gap"] = (gap, 1e-10)

    norm = 0.0
    for cov in (eye, nc_covariance(0.5), nc_covariance(0.5, NCParams(0.2, 0.1))):
        norm = max(norm, abs(gauss_hermite_integral(GaussianState.centered(cov)) - 4.0) / 4.0)
    res["wigner_normalization"] = (norm, 1e-6)

    return [CheckResult(name, float(v), min(bound, tolerance)) for name, (v, bound) in res.items()]
