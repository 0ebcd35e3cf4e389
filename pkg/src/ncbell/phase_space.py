"""Noncommutative phase-space algebra on the ordering (x, px, y, py)."""

from dataclasses import dataclass, field
import math

import numpy as np

#: Coordinate order used for every 4-vector and 4x4 matrix in the package.
COORDS = ("x", "px", "y", "py")

_J2 = np.array([[0.0, 1.0], [-1.0, 0.0]])


def _default_scale(theta, eta):
    return math.sqrt((1.0 + math.sqrt(1.0 - theta * eta)) / 2.0)


def constrained_mu(theta, eta, lam):
    """Darboux scale ``mu`` fixed by ``2 lam mu = 1 + sqrt(1 - theta eta)``."""
    if not theta * eta < 1.0:
        raise ValueError(f"theta*eta must be < 1, got {theta * eta!r}")
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    return (1.0 + math.sqrt(1.0 - theta * eta)) / (2.0 * lam)


@dataclass(frozen=True)
class NCParams:
    """Noncommutativity constants and the Darboux scale factors.

    ``lam`` defaults to the symmetric choice ``lam = mu``; if only ``lam``
    is given, ``mu`` is solved from the invertibility constraint.  Negative
    ``theta`` or ``eta`` are rejected unless ``signed=True``.
    """

    theta: float = 0.0
    eta: float = 0.0
    lam: float | None = None
    mu: float | None = None
    signed: bool = field(default=False, compare=False)

    def __post_init__(self):
        theta, eta = float(self.theta), float(self.eta)
        if not (math.isfinite(theta) and math.isfinite(eta)):
            raise ValueError("theta and eta must be finite")
        if not self.signed and (theta < 0 or eta < 0):
            raise ValueError(
                f"theta and eta must be non-negative (got {theta}, {eta}); "
                "pass signed=True to explore signed values"
            )
        if not theta * eta < 1.0:
            raise ValueError(f"theta*eta must be < 1, got {theta * eta!r}")
        lam, mu = self.lam, self.mu
        if lam is None and mu is None:
            lam = mu = _default_scale(theta, eta)
        elif mu is None:
            mu = constrained_mu(theta, eta, lam)
        elif lam is None:
            lam = constrained_mu(theta, eta, mu)
        else:
            target = 1.0 + math.sqrt(1.0 - theta * eta)
            if abs(2.0 * lam * mu - target) > 1e-12 * target:
                raise ValueError(
                    f"2*lam*mu = {2 * lam * mu!r} violates the constraint {target!r}"
                )
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "lam", float(lam))
        object.__setattr__(self, "mu", float(mu))

    @property
    def xi(self):
        """``sqrt(theta*eta)``; NaN for opposite-signed pairs."""
        prod = self.theta * self.eta
        return math.sqrt(prod) if prod >= 0 else math.nan

    @property
    def is_commutative(self):
        return self.theta == 0.0 and self.eta == 0.0


COMMUTATIVE = NCParams()


def symplectic_J():
    """Block-diagonal ``diag(J, J)`` with ``J = [[0, 1], [-1, 0]]``."""
    out = np.zeros((4, 4))
    out[:2, :2] = _J2
    out[2:, 2:] = _J2
    return out


def omega_matrix(p):
    """Full commutator matrix of (x, px, y, py) under the NC algebra."""
    if not p.theta * p.eta < 1.0:
        raise ValueError("omega_matrix requires theta*eta < 1")
    upsilon = np.diag([p.theta, p.eta])
    out = symplectic_J()
    out[:2, 2:] = upsilon
    out[2:, :2] = -upsilon
    return out


def darboux_map(p):
    """Linear map D taking canonical variables to NC ones, ``z = D zc``."""
    lam, mu = p.lam, p.mu
    if lam == 0 or mu == 0:
        raise ValueError("Darboux scales must be nonzero")
    a = p.theta / (2.0 * lam)
    b = p.eta / (2.0 * mu)
    return np.array(
        [
            [lam, 0.0, 0.0, -a],
            [0.0, mu, b, 0.0],
            [0.0, a, lam, 0.0],
            [-b, 0.0, 0.0, mu],
        ]
    )


def check_darboux(D, p):
    """Max-abs residual of ``D diag(J,J) D^T - Omega(p)``."""
    D = np.asarray(D, dtype=float)
    return float(np.max(np.abs(D @ symplectic_J() @ D.T - omega_matrix(p))))
