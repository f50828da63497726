import numpy as np
import pytest

from cavity.exceptions import ParameterError
from cavity.kernels import (
    FockPair, MiddleTermReading, ModelParams, evaluate_kernels,
    kernel_A, kernel_B, lambda_theta, u_diag_pair,
)


def test_fock_pair_rejects_negative_and_fractional():
    with pytest.raises(ParameterError):
        FockPair(-1, 0)
    with pytest.raises(ParameterError):
        FockPair(0, 1.5)
    with pytest.raises(ParameterError):
        FockPair(True, 0)


def test_fock_pair_diagonal():
    fock = FockPair.diagonal(3)
    assert fock.is_diagonal
    assert fock.total == 6
    assert str(fock) == '|3,3⟩'
    assert not FockPair(1, 2).is_diagonal


@pytest.mark.parametrize('alpha, gt', [(-1.0, 0.0), (0.0, -0.1), (float('nan'), 1.0), (0.0, float('inf'))])
def test_model_params_rejects_invalid(alpha, gt):
    with pytest.raises(ParameterError):
        ModelParams(alpha, gt)


def test_model_params_at_keeps_alpha():
    params = ModelParams(6.0).at(2.5)
    assert params.alpha == 6.0
    assert params.gt == 2.5


@pytest.mark.parametrize('n, alpha, lam', [(0, 0.0, 2.0), (1, 6.0, 10.0), (2, 1.0, 26.0)])
def test_lambda_theta(n, alpha, lam):
    got_lam, theta = lambda_theta(FockPair.diagonal(n), alpha)
    assert got_lam == lam
    assert theta == pytest.approx(np.sqrt(4 * lam + alpha ** 2))


def test_kernels_require_equal_occupations():
    with pytest.raises(ParameterError):
        lambda_theta(FockPair(0, 1), 0.0)
    with pytest.raises(ParameterError):
        kernel_A(FockPair(2, 1), ModelParams(1.0, 1.0))


@pytest.mark.parametrize('n', [0, 1, 4])
@pytest.mark.parametrize('alpha', [0.0, 1.0, 6.0])
def test_kernels_at_zero_time(n, alpha):
    fock = FockPair.diagonal(n)
    params = ModelParams(alpha, 0.0)
    k = evaluate_kernels(fock, params)
    assert k.A == 0
    assert k.B == 0
    u22, u23 = u_diag_pair(fock, params)
    assert u22 == pytest.approx(1.0)
    assert abs(u23) < 1e-15


def test_kernel_b_matches_sine_form():
    fock = FockPair.diagonal(1)
    params = ModelParams(2.0, 0.7)
    _, theta = lambda_theta(fock, params.alpha)
    expected = -2j * np.exp(-0.5j * params.alpha * params.gt) * np.sin(theta * params.gt / 2)
    assert kernel_B(fock, params) == pytest.approx(expected, abs=1e-14)


@pytest.mark.parametrize('n', [0, 1, 3])
@pytest.mark.parametrize('alpha', [0.0, 1.0, 6.0])
@pytest.mark.parametrize('gt', [0.3, 2.0, 17.5])
def test_antisymmetric_combination_is_a_pure_phase(n, alpha, gt):
    # |+,-⟩ - |-,+⟩ 与场解耦，只积累相位 exp(iα gt)
    u22, u23 = u_diag_pair(FockPair.diagonal(n), ModelParams(alpha, gt))
    assert u22 - u23 == pytest.approx(np.exp(1j * alpha * gt), abs=1e-13)


@pytest.mark.parametrize('reading', [MiddleTermReading.SIGN_FLIPPED, MiddleTermReading.UNHALVED])
def test_other_readings_differ_after_zero_time(reading):
    fock = FockPair.diagonal(0)
    params = ModelParams(1.0, 1.3)
    derived = np.array(u_diag_pair(fock, params))
    other = np.array(u_diag_pair(fock, params, reading))
    assert np.max(np.abs(derived - other)) > 1e-3
    at_zero = np.array(u_diag_pair(fock, params.at(0.0), reading))
    np.testing.assert_allclose(at_zero, [1.0, 0.0], atol=1e-15)


def test_reading_values():
    assert MiddleTermReading('sign-flipped') is MiddleTermReading.SIGN_FLIPPED
    assert [r.value for r in MiddleTermReading] == ['derived', 'sign-flipped', 'unhalved']


def test_kernel_values_at_special_times():
    fock = FockPair.diagonal(0)
    quarter = np.pi / (2 * np.sqrt(2))
    assert kernel_A(fock, ModelParams(0.0, quarter)) == pytest.approx(-1.0, abs=1e-15)
    assert kernel_B(fock, ModelParams(0.0, 4 * quarter)) == pytest.approx(0.0, abs=1e-14)
    assert lambda_theta(fock, 6.0)[1] == pytest.approx(np.sqrt(44))
    assert lambda_theta(FockPair.diagonal(1), 0.0) == pytest.approx((10.0, np.sqrt(40)))


def test_kernels_repeat_without_dipole():
    fock = FockPair.diagonal(0)
    period = np.pi * np.sqrt(2)
    for gt in (0.2, 1.1, 3.7):
        k0 = evaluate_kernels(fock, ModelParams(0.0, gt))
        k1 = evaluate_kernels(fock, ModelParams(0.0, gt + period))
        assert k1.A == pytest.approx(k0.A, abs=1e-12)
        assert k1.B == pytest.approx(k0.B, abs=1e-12)


def test_b_kernel_is_bounded_and_theta_grows():
    for gt in np.linspace(0.0, 25.0, 101):
        assert abs(kernel_B(FockPair.diagonal(2), ModelParams(1.0, gt))) <= 2.0 + 1e-15
    thetas = [lambda_theta(FockPair.diagonal(n), alpha)[1] for n in range(3) for alpha in (0.0, 1.0, 6.0)]
    assert thetas[0] < thetas[1] < thetas[2]
    assert thetas[0] < thetas[3] < thetas[6]


@pytest.mark.parametrize('n', [0, 1])
@pytest.mark.parametrize('alpha', [0.0, 1.0, 6.0])
def test_kernels_change_slowly_under_grid_refinement(n, alpha):
    fock = FockPair.diagonal(n)
    _, theta = lambda_theta(fock, alpha)
    fine = np.linspace(0.0, 25.0, 4001)
    delta = fine[1] - fine[0]
    for kernel in (kernel_A, kernel_B):
        values = np.array([kernel(fock, ModelParams(alpha, gt)) for gt in fine])
        # 加密一倍后新增的点与相邻粗网格点相差不超过 2θδ
        assert np.abs(np.diff(values)).max() <= 2 * theta * delta
