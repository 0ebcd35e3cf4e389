import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncbell import (
    Displacement,
    GaussianState,
    InvCovParams,
    NCParams,
    bell_at_optimum,
    bell_closed,
    bell_from_wigner,
    evaluate,
    grid_maximize,
    inv_cov_params,
    is_nonlocal,
    nc_commutative_gap,
    optimal_displacement,
    optimal_displacement_nc,
    squeezed_state,
)
from ncbell.bell import (
    bell_at_optimum_printed,
    bell_at_optimum_reduced,
    bell_profile,
    golden_max,
    stationarity_residual,
)

from conftest import nc_pairs

I_COMM_05 = 0.290854829109367095848172257424
B_OPT_05 = 0.536104985646762170376718464991
P = NCParams(0.2, 0.1)


def test_bell_from_wigner_vacuum():
    assert bell_from_wigner(GaussianState.vacuum(), Displacement()) == pytest.approx(0.5, abs=1e-15)


def test_bell_from_wigner_origin_general():
    state = squeezed_state(0.8, NCParams(0.3, 0.4))
    expected = 1 / (2 * math.sqrt(np.linalg.det(state.cov)))
    assert bell_from_wigner(state, Displacement()) == pytest.approx(expected, rel=1e-12)


def test_bell_from_wigner_reproduces_closed_form():
    state = squeezed_state(0.5, P)
    icp = inv_cov_params(0.5, P)
    got = bell_from_wigner(state, Displacement.dichotomic(0.2))
    assert got == pytest.approx(bell_closed(0.2, icp), abs=1e-10)


@given(st.floats(0, 2), st.floats(0, 2), nc_pairs)
def test_reconstruction_property(i, r, te):
    p = NCParams(*te)
    got = bell_from_wigner(squeezed_state(r, p), Displacement.dichotomic(i))
    assert got == pytest.approx(bell_closed(i, inv_cov_params(r, p)), abs=1e-10)


def test_complex_displacement_uses_imaginary_axes():
    d = Displacement(1j, 0)
    state = GaussianState.vacuum()
    # W(alpha1 = i) is evaluated at (0, 1, 0, 0)
    expected = math.pi**2 / 4 * (1 + math.exp(-0.5) + 1 - math.exp(-0.5)) / math.pi**2
    assert bell_from_wigner(state, d) == pytest.approx(expected, abs=1e-15)


def test_bell_closed_limits():
    icp = inv_cov_params(0.5, P)
    assert bell_closed(0.0, icp) == 0.5
    assert bell_closed(1e6, icp) == 0.25
    with pytest.raises(ValueError):
        bell_closed(-0.1, icp)


def test_bell_closed_commutative_peak():
    icp = inv_cov_params(0.5)
    assert bell_closed(I_COMM_05, icp) == pytest.approx(B_OPT_05, abs=1e-15)


def test_optimal_displacement_values():
    assert optimal_displacement((1.0, 0.0)) == 0.0
    assert optimal_displacement((2.0, -1.0)) == pytest.approx(0.202732554054082190989006557732, abs=1e-15)
    assert optimal_displacement(inv_cov_params(0.5)) == pytest.approx(I_COMM_05, abs=1e-15)


@pytest.mark.parametrize("params", [(-1.0, 0.0), (1.0, 2.0), (1.0, 0.5)])
def test_optimal_displacement_domain(params):
    with pytest.raises(ValueError):
        optimal_displacement(params)


def test_bell_at_optimum():
    assert bell_at_optimum((1.0, 0.0)) == 0.5
    assert bell_at_optimum(inv_cov_params(0.5)) == pytest.approx(B_OPT_05, abs=1e-15)
    assert bell_at_optimum(inv_cov_params(0.5, P)) == pytest.approx(B_OPT_05, abs=1e-15)


@given(st.floats(0, 5), nc_pairs)
def test_reduced_form_matches_substitution(r, te):
    icp = inv_cov_params(r, NCParams(*te))
    assert bell_at_optimum_reduced(icp) == pytest.approx(bell_at_optimum(icp), abs=1e-13)


def test_printed_coefficient_differs():
    assert bell_at_optimum_printed((1.0, 0.0)) == 1.0
    assert bell_at_optimum((1.0, 0.0)) == 0.5


def test_optimal_displacement_nc():
    assert optimal_displacement_nc(0.5) == pytest.approx(I_COMM_05, abs=1e-15)
    assert optimal_displacement_nc(0.5, P) == pytest.approx(0.28654941930675343990459201874, abs=1e-15)
    assert optimal_displacement_nc(0.5, NCParams(0.3, 0.3)) == pytest.approx(
        0.278239847836997397861616133465, abs=1e-15
    )


@pytest.mark.parametrize("r, te", [(0.5, (0.2, 0.1)), (1.7, (0.9, 0.9)), (0.0, (0.5, 0.3))])
def test_nc_gap_examples(r, te):
    gap = nc_commutative_gap(r, NCParams(*te))
    assert abs(gap) <= 1e-12
    if r == 0:
        assert gap == 0.0


@given(st.floats(0, 14), nc_pairs)
def test_nc_gap_property(r, te):
    assert abs(nc_commutative_gap(r, NCParams(*te))) <= 1e-10


@given(st.floats(0.01, 50), st.floats(-0.99, 0.0), st.floats(0.01, 100))
def test_scale_covariance(n, ratio, kappa):
    t1 = ratio * n
    base = bell_at_optimum((n, t1))
    assert bell_at_optimum((kappa * n, kappa * t1)) == pytest.approx(base, abs=1e-13)
    assert optimal_displacement((kappa * n, kappa * t1)) == pytest.approx(
        optimal_displacement((n, t1)) / kappa, rel=1e-12, abs=1e-300
    )


def test_grid_maximize_examples():
    i_star, b_star = grid_maximize((2.0, -1.0), 2.0, 10_000)
    assert i_star == pytest.approx(0.202732554054082190989006557732, abs=1e-6)
    assert b_star == pytest.approx(bell_closed(0.202732554054082190989006557732, (2.0, -1.0)), abs=1e-12)
    assert grid_maximize((1.0, 0.0), 2.0, 101) == (0.0, 0.5)
    i_star, b_star = grid_maximize(inv_cov_params(0.5), 2.0, 10_000)
    assert i_star == pytest.approx(I_COMM_05, abs=1e-6)
    assert b_star == pytest.approx(B_OPT_05, abs=1e-6)


@pytest.mark.parametrize("i_max, points", [(0.0, 10), (1.0, 2), (math.inf, 10)])
def test_grid_maximize_rejects(i_max, points):
    with pytest.raises(ValueError):
        grid_maximize((2.0, -1.0), i_max, points)


def test_golden_max_parabola():
    x, fx = golden_max(lambda t: -(t - 0.3) ** 2, 0.0, 1.0)
    assert x == pytest.approx(0.3, abs=1e-7)
    assert fx == pytest.approx(0.0, abs=1e-14)


@given(st.floats(0.05, 3.0), nc_pairs)
def test_stationarity(r, te):
    icp = inv_cov_params(r, NCParams(*te))
    assert abs(stationarity_residual(icp)) <= 1e-6


def test_bell_profile_matches_scalar():
    icp = inv_cov_params(1.2, P)
    grid = np.linspace(0, 1, 11)
    np.testing.assert_allclose(bell_profile(grid, icp), [bell_closed(i, icp) for i in grid], rtol=1e-15)


def test_is_nonlocal():
    assert not is_nonlocal(B_OPT_05)
    assert is_nonlocal(2.1)
    assert is_nonlocal(-2.5)
    assert not is_nonlocal(2.0)


def test_evaluate_result():
    res = evaluate(0.5, P)
    assert res.i_opt == pytest.approx(0.28654941930675343990459201874, abs=1e-15)
    assert res.b_opt == pytest.approx(B_OPT_05, abs=1e-15)
    assert abs(res.gap) <= 1e-12
    assert res.nonlocal_ is False


@pytest.mark.parametrize("r", [0.01, 0.5, 2.0, 7.0, 14.0])
def test_bounded_on_squeezed_family(r):
    b = bell_at_optimum(inv_cov_params(r))
    assert 0.25 < b < 1.0


def test_displacement_validation():
    with pytest.raises(ValueError):
        Displacement(complex(math.nan, 0), 0)
    with pytest.raises(ValueError):
        Displacement.dichotomic(-1.0)
    assert Displacement.dichotomic(0.25) == Displacement(0.5, -0.5)


def test_inv_cov_params_type_accepted():
    icp = InvCovParams(2.0, 1.0, 0.0, 0.0, -1.0, 1.0)
    assert optimal_displacement(icp) == optimal_displacement((2.0, -1.0))
