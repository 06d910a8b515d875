import numpy as np
import pytest

import kduncert as kd
from conftest import HADAMARD, PAULI_X

LIGHT = kd.OptimizerConfig(n_restarts=3, max_iters=300, seed=0)


def _z():
    return kd.rank_one_pvm(np.eye(2))


def test_outcome_probs_examples():
    zero = kd.validate_density([[1, 0], [0, 0]])
    assert np.allclose(kd.outcome_probs(zero, _z().as_povm()), [1.0, 0.0])
    plus = kd.validate_density(np.full((2, 2), 0.5))
    assert np.allclose(kd.outcome_probs(plus, _z().as_povm()), [0.5, 0.5])
    mixed = kd.validate_density(np.eye(4) / 4)
    pvm = kd.rank_one_pvm(kd.haar_random_unitary(4, seed=8)).as_povm()
    assert np.allclose(kd.outcome_probs(mixed, pvm), [0.25] * 4)
    with pytest.raises(kd.DimMismatchError):
        kd.outcome_probs(zero, kd.random_povm(3, 2, seed=0))


def test_s_entropy_examples(derived):
    assert kd.s_entropy([1.0, 0.0, 0.0]) == 0.0
    assert abs(kd.s_entropy([0.25] * 4) - derived["s_entropy_uniform4"]) < 1e-12
    assert abs(kd.s_entropy([0.5, 0.5]) - 1.0) < 1e-12
    with pytest.raises(kd.BadDistributionError):
        kd.s_entropy([0.7, 0.7])
    with pytest.raises(kd.BadDistributionError):
        kd.s_entropy([1.2, -0.2])


def test_t_entropy_examples(derived):
    assert kd.t_entropy([1.0, 0.0]) == 0.0
    assert abs(kd.t_entropy([0.25] * 4) - derived["t_entropy_uniform4"]) < 1e-12
    assert abs(kd.t_entropy([0.5, 0.5]) - derived["t_entropy_half"]) < 1e-12


def test_t_entropy_is_half_tsallis():
    for i in range(20):
        rng = np.random.default_rng(320 + i)
        p = rng.random(2 + i % 5) + 0.01
        p /= p.sum()
        t = kd.t_entropy(p)
        tsallis_half = (np.sqrt(p).sum() - 1.0) / (1.0 - 0.5)
        assert abs(2.0 * t - tsallis_half) < 1e-12


def test_total_uncertainty_examples():
    zero = kd.validate_density([[1, 0], [0, 0]])
    assert kd.total_uncertainty(zero, _z().as_povm(), kd.Flavor.NRE) == 0.0
    assert kd.total_uncertainty(zero, _z().as_povm(), kd.Flavor.NCL) == 0.0

    d = 3
    coherent = kd.validate_density(np.full((d, d), 1.0 / d))
    comp = kd.rank_one_pvm(np.eye(d)).as_povm()
    assert abs(kd.total_uncertainty(coherent, comp, kd.Flavor.NRE) - np.sqrt(2)) < 1e-12

    rho = kd.random_density(4, 2, seed=33)
    degenerate = kd.validate_povm([np.eye(4) / 4] * 4)
    assert abs(kd.total_uncertainty(rho, degenerate, kd.Flavor.NCL) - 1.0) < 1e-12


def test_decompose_fixtures(derived):
    diag = kd.validate_density(np.diag([0.75, 0.25]))
    dec = kd.decompose(diag, _z().as_povm(), kd.Flavor.NRE)
    fx = derived["decompose_diag34_z_nre"]
    assert abs(dec.total - fx["total"]) < 1e-9
    assert abs(dec.quantum - fx["quantum"]) < 1e-9
    assert abs(dec.classical - fx["classical"]) < 1e-9
    assert dec.diagnostics is None

    mix = kd.validate_density(np.eye(2) / 2 + PAULI_X / 4)
    dec = kd.decompose(mix, _z().as_povm(), kd.Flavor.NRE)
    fx = derived["decompose_halfmix_z_nre"]
    assert abs(dec.total - fx["total"]) < 1e-9
    assert abs(dec.quantum - fx["quantum"]) < 1e-9
    assert abs(dec.classical - fx["classical"]) < 1e-9


def test_decompose_pure_rank1_classical_vanishes():
    for i in range(6):
        d = 2 + i % 3
        psi = kd.random_density(d, 1, seed=340 + i)
        pvm = kd.rank_one_pvm(kd.haar_random_unitary(d, seed=350 + i)).as_povm()
        for flavor in kd.Flavor:
            dec = kd.decompose(psi, pvm, flavor, LIGHT)
            assert abs(dec.classical) < 1e-6
            assert abs(dec.classical - (dec.total - dec.quantum)) < 1e-12


def test_decompose_carries_diagnostics_for_ncl():
    rho = kd.random_density(2, 2, seed=36)
    povm = kd.random_povm(2, 2, seed=37)
    dec = kd.decompose(rho, povm, kd.Flavor.NCL, LIGHT)
    assert dec.diagnostics is not None
    assert dec.diagnostics.per_effect_values is not None
    assert dec.quantum == dec.diagnostics.value


def test_impurities(derived):
    pure = kd.random_density(3, 1, seed=38)
    assert kd.impurity_s(pure) < 1e-7
    assert kd.impurity_t(pure) < 1e-7
    mixed4 = kd.validate_density(np.eye(4) / 4)
    assert abs(kd.impurity_s(mixed4) - np.sqrt(3)) < 1e-12
    assert abs(kd.impurity_t(mixed4) - 1.0) < 1e-12
    diag = kd.validate_density(np.diag([0.75, 0.25]))
    assert abs(kd.impurity_s(diag) - derived["impurity_s_diag34"]) < 1e-12
    assert abs(kd.impurity_t(diag) - derived["impurity_t_diag34"]) < 1e-12


def test_infimum_total():
    pure = kd.random_density(3, 1, seed=39)
    value, achieving = kd.infimum_total(pure, kd.Flavor.NRE)
    assert value < 1e-7
    assert achieving.n_outcomes == 3

    half = kd.validate_density(np.eye(2) / 2)
    value, achieving = kd.infimum_total(half, kd.Flavor.NCL)
    assert abs(value - (np.sqrt(2) - 1.0)) < 1e-12
    assert abs(kd.total_uncertainty(half, achieving, kd.Flavor.NCL) - value) < 1e-9

    for i in range(10):
        d = 2 + i % 3
        rho = kd.random_density(d, d, seed=360 + i)
        for flavor in kd.Flavor:
            value, achieving = kd.infimum_total(rho, flavor)
            assert kd.quantum_nonreality(rho, achieving) < 1e-9
            assert abs(kd.total_uncertainty(rho, achieving, flavor) - value) < 1e-9


def test_coarse_grain():
    povm = kd.random_povm(2, 4, seed=40)
    same = kd.coarse_grain(povm, [(0,), (1,), (2,), (3,)])
    for a, b in zip(same.effects, povm.effects):
        assert np.abs(a - b).max() < 1e-12
    merged = kd.coarse_grain(povm, [(0, 1, 2, 3)])
    assert np.abs(merged.effects[0] - np.eye(2)).max() < 1e-9
    assert merged.labels == ("0+1+2+3",)
    with pytest.raises(kd.BadPartitionError):
        kd.coarse_grain(povm, [(0, 1), (1, 2, 3)])
    with pytest.raises(kd.BadPartitionError):
        kd.coarse_grain(povm, [(0, 1)])


def test_bound_asymmetry_fixture(derived):
    plus = kd.validate_density(np.full((2, 2), 0.5))
    bound = kd.bound_asymmetry(plus, _z(), LIGHT)
    assert abs(bound - derived["bound_asym_plus_z"]) < 1e-9
    assert abs(bound - kd.s_entropy([0.5, 0.5])) < 1e-9


def test_bound_asymmetry_commuting_vanishes():
    u = kd.haar_random_unitary(3, seed=41)
    lam = np.array([0.6, 0.3, 0.1])
    rho = kd.validate_density((u * lam) @ u.conj().T)
    assert kd.bound_asymmetry(rho, kd.rank_one_pvm(u), LIGHT) < 1e-10


def test_bound_asymmetry_below_entropy():
    for i in range(20):
        d = 2 + i % 3
        rho = kd.random_density(d, d, seed=370 + i)
        pvm = kd.rank_one_pvm(kd.haar_random_unitary(d, seed=380 + i))
        bound = kd.bound_asymmetry(rho, pvm, LIGHT)
        ent = kd.s_entropy(kd.outcome_probs(rho, pvm.as_povm()))
        assert bound <= ent + 1e-6


def test_uncertainty_relation_fixture(derived):
    yplus = kd.validate_density(np.array([[0.5, -0.5j], [0.5j, 0.5]]))
    bound = kd.uncertainty_relation_bound(yplus, _z(), kd.rank_one_pvm(HADAMARD), LIGHT)
    assert abs(bound - derived["relation_bound_yplus_z_x"]) < 1e-9
    s_sum = kd.s_entropy(kd.outcome_probs(yplus, _z().as_povm())) + kd.s_entropy(
        kd.outcome_probs(yplus, kd.rank_one_pvm(HADAMARD).as_povm())
    )
    assert abs(bound - s_sum) < 1e-9


def test_uncertainty_relation_same_basis_vanishes():
    rho = kd.random_density(3, 3, seed=42)
    pvm = kd.rank_one_pvm(kd.haar_random_unitary(3, seed=43))
    assert kd.uncertainty_relation_bound(rho, pvm, pvm, LIGHT) < 1e-10


def test_uncertainty_relation_below_entropy_sum():
    for i in range(20):
        d = 2 + i % 3
        rho = kd.random_density(d, d, seed=390 + i)
        pvm_a = kd.rank_one_pvm(kd.haar_random_unitary(d, seed=400 + i))
        pvm_b = kd.rank_one_pvm(kd.haar_random_unitary(d, seed=410 + i))
        bound = kd.uncertainty_relation_bound(rho, pvm_a, pvm_b, LIGHT)
        total = kd.s_entropy(kd.outcome_probs(rho, pvm_a.as_povm())) + kd.s_entropy(
            kd.outcome_probs(rho, pvm_b.as_povm())
        )
        assert bound <= total + 1e-6


def test_one_dimensional_edge_case():
    rho = kd.validate_density([[1.0]])
    povm = kd.validate_povm([np.eye(1)])
    for flavor in kd.Flavor:
        dec = kd.decompose(rho, povm, flavor, LIGHT)
        assert dec.total == 0.0
        assert abs(dec.quantum) < 1e-12
    value, achieving = kd.infimum_total(rho, kd.Flavor.NRE)
    assert value == 0.0 and achieving.n_outcomes == 1


def test_decomposition_invariants_random():
    for i in range(10):
        d = 2 + i % 2
        rho = kd.random_density(d, d, seed=420 + i)
        povm = kd.random_povm(d, 2, seed=430 + i)
        for flavor in kd.Flavor:
            dec = kd.decompose(rho, povm, flavor, LIGHT)
            assert dec.quantum <= dec.total + 1e-6
            assert dec.total >= -1e-9 and dec.quantum >= -1e-9 and dec.classical >= -1e-9
