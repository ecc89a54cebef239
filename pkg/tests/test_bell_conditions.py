import numpy as np
import pytest
from numpy.testing import assert_allclose

from bellforge import qstate as qs
from bellforge.bell import (
    condition_three_setting,
    condition_wwwzb,
    condition_wzlpzb,
    ghz4_modified_tensor_max,
    multilinear_max,
    plane_sum,
    rotinv_condition,
    rotinv_critical_visibility,
)


def _tensor(state):
    rho = state if isinstance(state, qs.DensityOperator) else state.density()
    return qs.correlation_tensor(rho)


def test_wwwzb_singlet_optimized():
    val = condition_wwwzb(_tensor(qs.singlet()), restarts=20)
    assert_allclose(val, 2.0, atol=1e-9)


@pytest.mark.parametrize("v", [0.6, 0.8, 1.0])
def test_wwwzb_noisy_w3(v):
    val = condition_wwwzb(_tensor(qs.noisy(qs.w_state(3), v)), restarts=30)
    assert_allclose(val, (7.0 / 3.0) * v**2, atol=1e-6)


def test_wwwzb_generalized_ghz_xz_plane():
    normals = [np.array([0.0, 1.0, 0.0])] * 3
    for alpha in np.linspace(0.05, np.pi / 4, 10):
        t = _tensor(qs.generalized_ghz(3, alpha))
        val = condition_wwwzb(t, mode="fixed", normals=normals)
        assert abs(val - 1.0) < 1e-9


def test_wwwzb_plane_invariance(rng):
    """The plane sum is unchanged by rotations within the chosen planes."""
    t = _tensor(qs.noisy(qs.w_state(3), 0.9))
    normals = [np.array([0.0, 0.0, 1.0])] * 3
    base = plane_sum(t, normals)
    for _ in range(5):
        phis = rng.uniform(0, 2 * np.pi, size=3)
        rots = [
            np.array(
                [[np.cos(p), -np.sin(p), 0], [np.sin(p), np.cos(p), 0], [0, 0, 1]]
            )
            for p in phis
        ]
        assert abs(plane_sum(t.rotated(rots), normals) - base) < 1e-9


def test_wzlpzb3_noisy_w_threshold():
    vc = 1.0 / np.sqrt(3 - 2 / 3)
    for v, expect_violation in ((0.97 * vc, False), (1.03 * vc, True)):
        t = _tensor(qs.noisy(qs.w_state(3), v))
        val = condition_wzlpzb(t, 3, restarts=20)
        assert_allclose(val, (3 - 2 / 3) * v**2, atol=1e-6)
        assert (val > 1.0) == expect_violation


def test_wzlpzb4_noisy_w_threshold():
    vc = 1.0 / np.sqrt(3 - 2 / 4)
    for v, expect_violation in ((0.95 * vc, False), (1.05 * vc, True)):
        t = _tensor(qs.noisy(qs.w_state(4), v))
        val = condition_wzlpzb(t, 4, restarts=20)
        assert_allclose(val, (3 - 2 / 4) * v**2, atol=1e-5)
        assert (val > 1.0) == expect_violation


def test_wzlpzb3_generalized_ghz():
    for alpha in (0.1, 0.25, 0.4):
        t = _tensor(qs.generalized_ghz(3, alpha))
        val = condition_wzlpzb(t, 3, restarts=20)
        assert val > 1.0
        assert val >= 1.0 + np.sin(2 * alpha) ** 2 - 1e-7


def test_wzlpzb_product_states_bounded(rng):
    for arity in (3, 4):
        for _ in range(3):
            t = _tensor(qs.random_product_pure((2,) * arity, rng))
            val = condition_wzlpzb(t, arity, restarts=15)
            assert val <= 1.0 + 1e-7


def test_three_setting_conditions_ghz():
    t = _tensor(qs.ghz(3))
    out1 = condition_three_setting(t, "ineq1", restarts=25)
    assert 0.0 <= out1["common_basis"] <= 3.0 + 1e-9
    assert out1["optimized"] <= 3.0 + 1e-6
    assert out1["optimized"] >= out1["common_basis"] - 1e-9
    out2 = condition_three_setting(t, "ineq2", restarts=25)
    assert out2["optimized"] <= 3.0 + 1e-6


def test_three_setting_product_bounded(rng):
    for _ in range(3):
        t = _tensor(qs.random_product_pure((2, 2, 2), rng))
        out = condition_three_setting(t, "ineq1", restarts=15)
        assert out["optimized"] <= 1.0 + 1e-7


def test_three_setting_consistency_with_quantum_value(rng):
    """No violation found by the see-saw whenever the condition stays <= 1."""
    from bellforge.bell import quantum_value, three_setting

    f = three_setting("three_settings_223")
    for _ in range(4):
        rho = qs.random_separable((2, 2, 2), rng, n_terms=3)
        t = qs.correlation_tensor(rho)
        cond = condition_three_setting(t, "ineq1", restarts=10)["optimized"]
        val, _ = quantum_value(f, rho, restarts=10)
        assert cond <= 1.0 + 1e-7
        assert val <= 1.0 + 1e-7


def test_rotinv_ghz3_planar():
    rep = rotinv_condition(_tensor(qs.ghz(3)), "planar", restarts=16)
    assert_allclose(rep.t_max, 1.0, atol=1e-9)
    assert_allclose(rep.sum_sq, 4.0, atol=1e-9)
    assert_allclose(rep.ratio, (np.pi / 4) ** 3 * 4, atol=1e-6)
    assert rep.violated


def test_rotinv_maximally_mixed():
    rep = rotinv_condition(_tensor(qs.maximally_mixed((2, 2, 2))), "planar")
    assert rep.sum_sq == 0.0
    assert not rep.violated


def test_rotinv_monotone_in_visibility():
    t_pure = _tensor(qs.ghz(3)).block()
    ratios = []
    for v in (0.4, 0.6, 0.8, 1.0):
        rep = rotinv_condition(v * t_pure, "planar", restarts=12)
        ratios.append(rep.ratio)
    assert all(b > a for a, b in zip(ratios, ratios[1:]))


@pytest.mark.parametrize("n", [3, 4])
def test_rotinv_critical_visibility(n):
    v = rotinv_critical_visibility(n)
    assert abs(v - 2 * (2 / np.pi) ** n) < 1e-3


def test_rotinv_full_mode_ghz():
    rep = rotinv_condition(_tensor(qs.ghz(3)), "full", restarts=16)
    # full block: 4 planar entries plus T333; largest value still 1
    assert_allclose(rep.sum_sq, 5.0, atol=1e-9)
    assert_allclose(rep.t_max, 1.0, atol=1e-8)
    assert rep.ratio == pytest.approx((2 / 3) ** 3 * 5.0, abs=1e-6)


def test_multilinear_max_planar_grid_seeds():
    block = _tensor(qs.ghz(4)).block()
    val, vecs = multilinear_max(block, planar=True, restarts=8)
    assert_allclose(val, 1.0, atol=1e-9)
    for v in vecs:
        assert abs(v[2]) < 1e-9


@pytest.mark.parametrize("alpha", [0.2, 0.5, np.pi / 4])
def test_ghz4_modified_tensor_max(alpha):
    val = ghz4_modified_tensor_max(alpha, restarts=12)
    assert_allclose(val, np.sqrt(1 + np.sin(2 * alpha) ** 2), atol=1e-9)
