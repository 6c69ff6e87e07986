import numpy as np
import pytest

from bellcomm import (
    Block,
    CoeffTensor,
    DomainError,
    OptimizationConfig,
    OptimizationError,
    commutator,
    generalized_bell,
    generator_to_unitary,
    hs_norm,
    is_unitary,
    local_observable_qubit,
    maximize,
    maximize_m2,
    maximize_md,
    maximize_md_conjugated,
    offblock_mass,
    project,
    qudit_commutator_norm,
    split_point,
)

SMALL = OptimizationConfig(restarts=4, max_iters=4000, seed=0)


class TestConfigValidation:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"restarts": 0},
            {"max_iters": 0},
            {"step_init": 0.0},
            {"step_init": float("inf")},
            {"tol": -1e-9},
            {"seed": -1},
        ],
    )
    def test_bad_config(self, kwargs):
        with pytest.raises(DomainError):
            OptimizationConfig(**kwargs)

    def test_bad_block(self):
        with pytest.raises(DomainError):
            Block("x", "torus", 3)
        with pytest.raises(DomainError):
            Block("x", "sphere", 0)


class TestManifoldHelpers:
    def test_project_normalizes_sphere_blocks(self):
        blocks = [Block("a", "sphere", 2), Block("b", "euclidean", 2)]
        out = project(blocks, np.array([3.0, 4.0, 3.0, 4.0]))
        np.testing.assert_allclose(out, [0.6, 0.8, 3.0, 4.0])

    def test_project_rejects_zero_sphere(self):
        with pytest.raises(OptimizationError) as exc:
            project([Block("a", "sphere", 3)], np.zeros(3))
        assert isinstance(exc.value.point, np.ndarray)

    def test_split_point_copies(self):
        blocks = [Block("a", "sphere", 2), Block("b", "euclidean", 1)]
        x = np.array([1.0, 0.0, 5.0])
        parts = split_point(blocks, x)
        parts["a"][0] = -7.0
        assert x[0] == 1.0
        np.testing.assert_allclose(parts["b"], [5.0])


class TestMaximize:
    def test_linear_objective_on_sphere(self):
        direction = np.array([0.0, 0.6, 0.0, 0.8, 0.0])
        cfg = OptimizationConfig(restarts=3, max_iters=5000, step_init=0.5, tol=1e-12, seed=1)
        res = maximize(lambda x: float(direction @ x) / float(np.linalg.norm(x)),
                       [Block("x", "sphere", 5)], cfg)
        assert res.value == pytest.approx(1.0, abs=1e-7)
        np.testing.assert_allclose(res.argmax["x"], direction, atol=1e-3)
        assert res.converged

    def test_quadratic_objective_on_euclidean_block(self):
        cfg = OptimizationConfig(restarts=2, max_iters=5000, tol=1e-14, seed=2)
        res = maximize(lambda x: -float((x - 3.0) @ (x - 3.0)),
                       [Block("x", "euclidean", 2)], cfg)
        assert res.value == pytest.approx(0.0, abs=1e-6)
        np.testing.assert_allclose(res.argmax["x"], [3.0, 3.0], atol=1e-3)

    def test_restart_values_bookkeeping(self):
        cfg = OptimizationConfig(restarts=5, max_iters=200, seed=3)
        res = maximize(lambda x: float(x[0]) / float(np.linalg.norm(x)),
                       [Block("x", "sphere", 4)], cfg)
        assert len(res.restart_values) == 5
        assert res.value == max(res.restart_values)
        assert res.iterations_used <= 5 * 200

    def test_same_seed_is_bit_identical(self):
        cfg = OptimizationConfig(restarts=3, max_iters=300, seed=11)
        runs = [
            maximize(lambda x: float(x[1]) / float(np.linalg.norm(x)),
                     [Block("x", "sphere", 3)], cfg)
            for _ in range(2)
        ]
        assert runs[0].value == runs[1].value
        assert np.array_equal(runs[0].argmax["x"], runs[1].argmax["x"])
        assert runs[0].restart_values == runs[1].restart_values

    def test_non_finite_objective_carries_point(self):
        cfg = OptimizationConfig(restarts=1, max_iters=10, seed=0)
        with pytest.raises(OptimizationError) as exc:
            maximize(lambda x: float("nan"), [Block("x", "sphere", 2)], cfg)
        assert exc.value.point.shape == (2,)


class TestMaximizeM2:
    def test_joint_search_reaches_four(self):
        res = maximize_m2(OptimizationConfig(restarts=6, max_iters=4000, seed=0))
        assert res.value == pytest.approx(4.0, abs=1e-6)
        assert res.converged

    def test_argmax_is_feasible_and_certified(self):
        res = maximize_m2(SMALL)
        alpha = res.argmax["alpha"]
        r, s = res.argmax["r"], res.argmax["s"]
        assert alpha.shape == (3, 3)
        assert np.linalg.norm(alpha) == pytest.approx(1.0, abs=1e-12)
        assert np.linalg.norm(r) == pytest.approx(1.0, abs=1e-12)
        assert np.linalg.norm(s) == pytest.approx(1.0, abs=1e-12)
        t = CoeffTensor(d=2, alpha=alpha.astype(complex), field_kind="real")
        direct = hs_norm(commutator(generalized_bell(t), local_observable_qubit(r, s)))
        assert direct == pytest.approx(res.value, abs=1e-9)
        assert 4.0 * offblock_mass(t, r, s) == pytest.approx(res.value, abs=1e-9)
        assert offblock_mass(t, r, s) == pytest.approx(1.0, abs=1e-6)

    def test_fixed_classic_tensor_still_reaches_four(self):
        res = maximize_m2(SMALL, fixed_alpha=np.diag([1.0, 0.0, 1.0]))
        assert res.value == pytest.approx(4.0, abs=1e-6)
        np.testing.assert_allclose(res.argmax["alpha"], np.diag([1.0, 0.0, 1.0]) / np.sqrt(2.0))

    def test_fixed_single_corner_tensor_reaches_four(self):
        fixed = np.zeros((3, 3))
        fixed[0, 0] = 1.0
        res = maximize_m2(SMALL, fixed_alpha=fixed)
        assert res.value == pytest.approx(4.0, abs=1e-6)
        t = CoeffTensor(d=2, alpha=fixed.astype(complex), field_kind="real")
        direct = hs_norm(
            commutator(generalized_bell(t), local_observable_qubit(res.argmax["r"], res.argmax["s"]))
        )
        assert direct == pytest.approx(res.value, abs=1e-9)


class TestMaximizeMd:
    def test_d2_reaches_scan_value(self):
        res = maximize_md(2, OptimizationConfig(restarts=6, max_iters=3000, seed=0))
        assert res.value == pytest.approx(4.0, abs=1e-6)
        assert res.converged

    def test_d3_reaches_scan_value(self):
        res = maximize_md(3, OptimizationConfig(restarts=4, max_iters=3000, seed=0))
        assert res.value == pytest.approx(3.0 * np.sqrt(3.0), abs=1e-5)

    def test_argmax_certifies_through_closed_form(self):
        res = maximize_md(3, OptimizationConfig(restarts=3, max_iters=3000, seed=1))
        alpha = res.argmax["alpha"]
        assert alpha.shape == (8, 8)
        t = CoeffTensor(d=3, alpha=alpha)
        assert qudit_commutator_norm(t) == pytest.approx(res.value, abs=1e-9)
        assert res.value <= 6.0 + 1e-9

    def test_dimension_domain(self):
        with pytest.raises(DomainError):
            maximize_md(1)
        with pytest.raises(DomainError):
            maximize_md(7)


class TestGeneratorToUnitary:
    def test_produces_special_unitaries(self):
        rng = np.random.default_rng(0)
        for d in (2, 3, 4):
            u = generator_to_unitary(rng.standard_normal(2 * d * d), d)
            assert is_unitary(u, tol=1e-10)
            assert np.linalg.det(u) == pytest.approx(1.0, abs=1e-10)

    def test_zero_generator_is_identity(self):
        np.testing.assert_allclose(generator_to_unitary(np.zeros(8), 2), np.eye(2), atol=1e-15)

    def test_size_check(self):
        with pytest.raises(DomainError):
            generator_to_unitary(np.zeros(7), 2)


class TestMaximizeMdConjugated:
    def test_d2_cross_check(self):
        res = maximize_md_conjugated(2, OptimizationConfig(restarts=2, max_iters=2000, seed=3))
        assert res.value == pytest.approx(4.0, abs=1e-5)
        assert res.value <= 4.0 + 1e-9
        assert res.argmax["alpha"].shape == (3, 3)
        assert res.argmax["u_gen"].shape == (8,)

    def test_dimension_domain(self):
        with pytest.raises(DomainError):
            maximize_md_conjugated(9)
