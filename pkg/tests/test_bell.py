import numpy as np
import pytest
from numpy.testing import assert_allclose

from bellcomm import (
    CLASSICAL_CHSH_BOUND,
    ChshSettings,
    DomainError,
    bell_operator,
    chsh_correlations,
    chsh_sum,
    chsh_value,
    classic_bell_operator,
    classic_bell_operator_normalized,
    hs_inner,
    hs_norm,
    is_hermitian,
    singlet_correlation,
    singlet_correlation_trace,
    singlet_projector,
    singlet_state,
    spin_observable,
    tensor,
    unit_vector,
)
from bellcomm.bases import PAULI


def random_direction(rng):
    v = rng.standard_normal(3)
    return v / np.linalg.norm(v)


def test_unit_vector_validation():
    with pytest.raises(DomainError, match="unit norm"):
        unit_vector([1.0, 1.0, 0.0])
    with pytest.raises(DomainError):
        unit_vector([1.0, 0.0])
    with pytest.raises(DomainError):
        unit_vector([np.inf, 0.0, 0.0])
    assert_allclose(unit_vector([0, 0, 1]), [0.0, 0.0, 1.0])


def test_spin_observable_axes():
    assert_allclose(spin_observable([0, 0, 1]), PAULI[3])
    assert_allclose(spin_observable([1, 0, 0]), PAULI[1])
    assert_allclose(spin_observable([0, 1, 0]), PAULI[2])


def test_spin_observable_structure():
    rng = np.random.default_rng(0)
    for _ in range(20):
        a = spin_observable(random_direction(rng))
        assert is_hermitian(a, tol=1e-12)
        assert abs(np.trace(a)) < 1e-12
        assert_allclose(a @ a, np.eye(2), atol=1e-12)


def test_singlet_state_and_projector():
    psi = singlet_state()
    assert_allclose(psi, np.array([0, 1, -1, 0]) / np.sqrt(2))
    p = singlet_projector()
    assert is_hermitian(p, tol=1e-15)
    assert np.trace(p) == pytest.approx(1.0)
    assert_allclose(p @ p, p, atol=1e-15)


def test_singlet_correlation_examples():
    assert singlet_correlation([1, 0, 0], [1, 0, 0]) == pytest.approx(-1.0)
    assert singlet_correlation([1, 0, 0], [0, 1, 0]) == pytest.approx(0.0)
    assert singlet_correlation([0, 0, 1], [0, 0, -1]) == pytest.approx(1.0)


def test_singlet_correlation_matches_trace_path():
    rng = np.random.default_rng(1)
    for _ in range(50):
        a, b = random_direction(rng), random_direction(rng)
        assert singlet_correlation(a, b) == pytest.approx(
            singlet_correlation_trace(a, b), abs=1e-12
        )


def test_chsh_settings_validation():
    with pytest.raises(DomainError):
        ChshSettings(a1=[1, 1, 0], a2=[0, 0, 1], b1=[1, 0, 0], b2=[0, 1, 0])


def test_chsh_equal_settings_reach_classical_bound():
    z = [0.0, 0.0, 1.0]
    s = ChshSettings(a1=z, a2=z, b1=z, b2=z)
    assert chsh_value(s) == pytest.approx(2.0, abs=1e-15)
    assert chsh_value(s) <= CLASSICAL_CHSH_BOUND + 1e-15


def test_chsh_tsirelson_settings():
    s = ChshSettings.tsirelson()
    e11, e12, e21, e22 = chsh_correlations(s)
    r = -1.0 / np.sqrt(2.0)
    assert_allclose([e11, e12, e21, e22], [r, r, r, -r], atol=1e-15)
    assert chsh_value(s) == pytest.approx(2.0 * np.sqrt(2.0), abs=1e-12)
    assert chsh_value(s) > CLASSICAL_CHSH_BOUND


def test_bell_operator_matches_trace_of_projector():
    rng = np.random.default_rng(2)
    for _ in range(20):
        s = ChshSettings(
            a1=random_direction(rng),
            a2=random_direction(rng),
            b1=random_direction(rng),
            b2=random_direction(rng),
        )
        traced = float(np.trace(bell_operator(s) @ singlet_projector()).real)
        assert traced == pytest.approx(chsh_sum(s), abs=1e-12)
        assert is_hermitian(bell_operator(s), tol=1e-12)


def test_tsirelson_settings_produce_classic_operator():
    b = bell_operator(ChshSettings.tsirelson())
    assert_allclose(b, classic_bell_operator(), atol=1e-12)


def test_classic_operator_pauli_expansion():
    b = classic_bell_operator()
    for (i, j), expected in {(1, 1): np.sqrt(2), (3, 3): np.sqrt(2), (1, 3): 0.0}.items():
        coeff = hs_inner(tensor(PAULI[i], PAULI[j]), b) / 4.0
        assert coeff == pytest.approx(expected, abs=1e-12)


def test_classic_operator_normalization():
    bp = classic_bell_operator_normalized()
    assert_allclose(bp, (tensor(PAULI[1], PAULI[1]) + tensor(PAULI[3], PAULI[3])) / np.sqrt(2))
    assert hs_norm(bp) == pytest.approx(2.0, abs=1e-12)
    assert_allclose(bp * np.sqrt(2.0) * np.sqrt(2.0), classic_bell_operator(), atol=1e-12)
