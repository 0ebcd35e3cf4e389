"""Two-mode squeezed states in noncommutative phase space and their Bell-CHSH value."""

from ncbell._kernels import BACKEND
from ncbell.bell import (
    BellResult,
    Displacement,
    bell_at_optimum,
    bell_closed,
    bell_from_wigner,
    evaluate,
    grid_maximize,
    is_nonlocal,
    nc_commutative_gap,
    optimal_displacement,
    optimal_displacement_nc,
    squeezed_state,
)
from ncbell.gaussian import (
    GaussianState,
    LocalInvariants,
    StandardForm,
    UnphysicalStateError,
    is_physical,
    local_invariants,
    standard_form,
    wigner,
    wigner_unit,
)
from ncbell.oracle import (
    IntegrationReport,
    QuadratureGenerator,
    generator,
    integrate_transfer,
    validate_closed_form,
)
from ncbell.phase_space import (
    COMMUTATIVE,
    NCParams,
    check_darboux,
    constrained_mu,
    darboux_map,
    omega_matrix,
    symplectic_J,
)
from ncbell.squeezing import (
    InvCovParams,
    SqueezeSpec,
    assemble_inverse,
    covariance_of,
    inv_cov_params,
    nc_covariance,
    squeeze_commutative,
    squeeze_nc,
)

__version__ = "0.1.0"
