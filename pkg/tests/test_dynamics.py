import numpy as np
import pytest

from cavity.dynamics import (
    AmplitudeVector, AtomicState, BlockBasis, Family, WStateSpec,
    analytic_block_u, analytic_manifold_u, block_basis, evolve, evolve_grid,
    formula_amplitudes, manifold_basis,
)
from cavity.exceptions import BasisError, NormalizationError, ParameterError
from cavity.kernels import FockPair, ModelParams

THIRD = 1 / np.sqrt(3)


def test_family_parse():
    assert Family.parse('2') is Family.FAMILY2
    assert Family.parse(1) is Family.FAMILY1
    assert Family.FAMILY2.manifold == 1
    with pytest.raises(ParameterError):
        Family.parse(3)
    with pytest.raises(ParameterError):
        Family.parse('two')


def test_manifold_zero_has_no_doubly_excited_label():
    basis = manifold_basis(0)
    assert len(basis) == 3
    assert [state for state, _ in basis] == [AtomicState.PM, AtomicState.MP, AtomicState.MM]
    assert basis.fock_labels == [FockPair(0, 0), FockPair(1, 1)]
    assert basis.excitation == 2


@pytest.mark.parametrize('n', [1, 2, 5])
def test_manifold_labels(n):
    basis = manifold_basis(n)
    assert len(basis) == 4
    assert basis.labels[0] == (AtomicState.PP, FockPair.diagonal(n - 1))
    assert basis.labels[3] == (AtomicState.MM, FockPair.diagonal(n + 1))
    assert basis.excitation == 2 * n + 2


def test_family_blocks():
    assert block_basis(Family.FAMILY1) == manifold_basis(0)
    assert block_basis(2) == manifold_basis(1)


def test_manifold_index_must_be_nonnegative_integer():
    with pytest.raises(ParameterError):
        manifold_basis(-1)
    with pytest.raises(ParameterError):
        manifold_basis(0.5)


def test_block_basis_validation():
    with pytest.raises(BasisError):
        BlockBasis(())
    with pytest.raises(BasisError):
        BlockBasis(((AtomicState.PM, FockPair(0, 0)), (AtomicState.PM, FockPair(0, 0))))
    with pytest.raises(BasisError):
        BlockBasis(((AtomicState.PM, FockPair(0, 1)),))
    with pytest.raises(BasisError):
        # 激发数 2 与 4 混在一起
        BlockBasis(((AtomicState.PM, FockPair(0, 0)), (AtomicState.MP, FockPair(1, 1))))


@pytest.mark.parametrize('n', range(7))
@pytest.mark.parametrize('alpha', [0.0, 1.0, 6.0])
def test_manifold_evolution_is_unitary(n, alpha):
    for gt in (0.0, 0.37, 4.2, 25.0):
        u = analytic_manifold_u(n, ModelParams(alpha, gt))
        np.testing.assert_allclose(u.conj().T @ u, np.eye(len(u)), atol=1e-10)


def test_block_evolution_is_symmetric():
    u = analytic_block_u(Family.FAMILY2, ModelParams(1.0, 3.3))
    np.testing.assert_allclose(u, u.T, atol=1e-15)


def test_spec_normalization():
    with pytest.raises(NormalizationError):
        WStateSpec(Family.FAMILY1, 1, 1, 1)
    spec = WStateSpec.normalized(1, 1, 1, 1)
    assert spec.norm_squared == pytest.approx(1.0, abs=1e-15)
    assert spec.a == pytest.approx(THIRD)
    with pytest.raises(NormalizationError):
        WStateSpec.normalized(1, 0, 0, 0)


def test_spec_accepts_complex_coefficients():
    spec = WStateSpec(2, 0.5j, 0.5, np.sqrt(0.5))
    assert spec.family is Family.FAMILY2
    assert spec.a == 0.5j


def test_initial_vectors():
    spec1 = WStateSpec(1, THIRD, THIRD, THIRD)
    spec2 = WStateSpec(2, THIRD, THIRD, THIRD)
    assert spec1.initial_vector().shape == (3,)
    np.testing.assert_array_equal(spec2.initial_vector(), [THIRD, THIRD, THIRD, 0])


@pytest.mark.parametrize('family', [1, 2])
def test_evolve_at_zero_time_returns_initial_state(family):
    spec = WStateSpec(family, np.sqrt(2 / 3), 1 / np.sqrt(6), 1 / np.sqrt(6))
    amps = evolve(spec, ModelParams(6.0, 0.0))
    np.testing.assert_allclose(amps.amps, spec.initial_vector(), atol=1e-15)
    assert amps.gt == 0.0


@pytest.mark.parametrize('family', [1, 2])
@pytest.mark.parametrize('alpha', [0.0, 1.0, 6.0])
def test_evolve_matches_amplitude_formulas(family, alpha):
    spec = WStateSpec(family, 1 / np.sqrt(6), np.sqrt(2 / 3), 1 / np.sqrt(6))
    for gt in np.linspace(0.0, 25.0, 41):
        params = ModelParams(alpha, gt)
        np.testing.assert_allclose(evolve(spec, params).amps,
                                   formula_amplitudes(spec, params), atol=1e-12)


@pytest.mark.parametrize('family', [1, 2])
def test_norm_is_preserved_on_grid(family, coarse_grid):
    spec = WStateSpec(family, THIRD, THIRD, THIRD)
    for alpha in (0.0, 6.0):
        amplitudes = evolve_grid(spec, alpha, coarse_grid)
        assert max(x.norm_deviation for x in amplitudes) <= 1e-10


def test_symmetric_coefficients_stay_symmetric(coarse_grid):
    family1 = evolve_grid(WStateSpec(1, THIRD, THIRD, THIRD), 0.0, coarse_grid)
    family2 = evolve_grid(WStateSpec(2, THIRD, THIRD, THIRD), 6.0, coarse_grid)
    assert all(abs(x[0] - x[1]) < 1e-12 for x in family1)
    assert all(abs(x[1] - x[2]) < 1e-12 for x in family2)


def test_amplitude_vector_checks():
    basis = manifold_basis(0)
    with pytest.raises(BasisError):
        AmplitudeVector(basis, [1, 0], 0.0)
    unnormalized = AmplitudeVector(basis, [1, 1, 0], 0.0)
    with pytest.raises(NormalizationError):
        unnormalized.check_normalized()
    with pytest.raises(ValueError):
        unnormalized.amps[0] = 0


def test_evolve_rejects_non_spec():
    with pytest.raises(ParameterError):
        evolve((1, THIRD, THIRD, THIRD), ModelParams(0.0, 1.0))


@pytest.mark.parametrize('family', [1, 2])
def test_block_evolution_group_property(family):
    for gt1, gt2 in ((0.4, 1.3), (5.0, 7.25), (12.0, 0.01)):
        product = analytic_block_u(family, ModelParams(1.0, gt1)) @ analytic_block_u(family, ModelParams(1.0, gt2))
        np.testing.assert_allclose(analytic_block_u(family, ModelParams(1.0, gt1 + gt2)), product, atol=1e-9)


def test_antisymmetric_state_decouples():
    spec = WStateSpec(1, 1 / np.sqrt(2), -1 / np.sqrt(2), 0)
    for gt in (0.5, 3.0, 11.0):
        amps = evolve(spec, ModelParams(0.0, gt))
        assert abs(amps[0]) == pytest.approx(1 / np.sqrt(2))
        assert abs(amps[1]) == pytest.approx(1 / np.sqrt(2))
        assert abs(amps[2]) < 1e-15
