import numpy as np
import pytest
from numpy.testing import assert_allclose

from bellforge import qstate as qs
from bellforge.bell import (
    ardehali,
    chsh,
    ghz_avn_check,
    lhv_bound,
    lhv_bound_via_vertices,
    mabk,
    mermin,
    named_functionals,
    quantum_value,
    three_setting,
    wu_zong_3q,
    wwwzb_family_max,
)
from bellforge.errors import DomainError


def test_chsh_lhv_bound_exact():
    f = chsh()
    assert lhv_bound(f) == 2.0
    assert lhv_bound_via_vertices(f) == 2.0


def test_single_term_functional_bound():
    from bellforge.bell.functionals import BellFunctional, Scenario

    f = BellFunctional(Scenario(2, (2, 2)), np.array([[1.0, 0.0], [0.0, 0.0]]))
    assert lhv_bound(f) == 1.0


@pytest.mark.parametrize("n", [3, 4, 5])
def test_mermin_bounds_and_ghz_values(n):
    f = mermin(n)
    assert lhv_bound(f) == 2.0 ** (n // 2)
    val, _ = quantum_value(f, qs.ghz(n).density(), restarts=32)
    assert abs(val - 2.0 ** (n - 1)) < 1e-5


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_mabk_recursion_bounds(n):
    f = mabk(n)
    assert lhv_bound(f) == 1.0
    if n == 2:
        assert_allclose(f.coeffs, chsh().coeffs / 2, atol=1e-14)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_ardehali_bounds(n):
    f = ardehali(n)
    assert lhv_bound(f) == 2.0 ** (n // 2)


def test_ardehali_even_beats_mermin_on_ghz():
    f = ardehali(4)
    val, _ = quantum_value(f, qs.ghz(4).density(), restarts=48)
    assert val > 2.0 ** (4 - 0.5) - 1e-4  # 2^(N-1/2)


def test_wu_zong_bound_by_enumeration():
    f = wu_zong_3q()
    # printed constants disagree; the 1024-strategy scan is authoritative
    assert lhv_bound(f) == 4.0


@pytest.mark.parametrize(
    "name",
    ["three_settings_223", "three_settings_233a", "three_settings_233b",
     "three_settings_333"],
)
def test_three_setting_bounds(name):
    f = three_setting(name)
    assert lhv_bound(f) == 1.0
    scaled = f.coeffs * 4
    assert np.abs(scaled - np.round(scaled)).max() < 1e-12
    assert abs((f.coeffs**2).sum() - 1.0) < 1e-12
    assert abs(abs(f.coeffs.sum()) - 1.0) < 1e-12


def test_named_catalog_bounds_stored():
    cat = named_functionals()
    for f in cat.values():
        assert f.lhv_bound is not None
        assert lhv_bound(f, store=False) == pytest.approx(f.lhv_bound, abs=1e-12)


def test_vertex_path_agrees_with_enumeration():
    for f in (chsh(), mermin(3), mabk(4), three_setting("three_settings_333")):
        assert lhv_bound(f, store=False) == pytest.approx(
            lhv_bound_via_vertices(f), abs=1e-12
        )


def test_chsh_quantum_value_on_singlet():
    val, obs = quantum_value(chsh(), qs.singlet().density(), restarts=24)
    assert abs(val - 2 * np.sqrt(2)) < 1e-6
    for a in obs:
        assert_allclose(np.linalg.norm(a, axis=1), 1.0, atol=1e-12)


def test_chsh_on_product_states_bounded(rng):
    f = chsh()
    for _ in range(15):
        rho = qs.random_product_pure((2, 2), rng).density()
        val, _ = quantum_value(f, rho, restarts=12)
        assert val <= 2.0 + 1e-6


def test_quantum_value_never_below_lhv_on_designated_states():
    for name, state in [
        ("chsh", qs.singlet()),
        ("mermin3", qs.ghz(3)),
        ("mabk3", qs.ghz(3)),
    ]:
        f = named_functionals()[name]
        val, _ = quantum_value(f, state.density(), restarts=24)
        assert val >= f.lhv_bound - 1e-9


def test_quantum_value_on_separable_states_bounded(rng):
    cat = named_functionals()
    for name in ("chsh", "mermin3"):
        f = cat[name]
        n = f.scenario.n_parties
        for _ in range(10):
            rho = qs.random_separable((2,) * n, rng, n_terms=4)
            val, _ = quantum_value(f, rho, restarts=8)
            assert val <= f.lhv_bound + 1e-6


def test_scenario_size_guard():
    from bellforge.bell.functionals import BellFunctional, Scenario

    f = BellFunctional(Scenario(2, (13, 13)), np.zeros((13, 13)))
    with pytest.raises(DomainError):
        lhv_bound(f)


def test_avn_ghz3():
    rep = ghz_avn_check(3)
    assert rep.stabilizer_consistent
    assert rep.contradiction
    assert_allclose(rep.all_x_mean, -1.0, atol=1e-10)
    assert_allclose(rep.lhv_prediction, 1.0, atol=1e-10)
    for v in rep.pair_means.values():
        assert_allclose(v, 1.0, atol=1e-10)


def test_avn_maximally_mixed_silent():
    rep = ghz_avn_check(3, qs.maximally_mixed((2, 2, 2)))
    assert not rep.contradiction
    assert all(abs(v) < 1e-12 for v in rep.pair_means.values())
    assert abs(rep.all_x_mean) < 1e-12


@pytest.mark.parametrize("n", [4, 5, 6])
def test_avn_higher_n(n):
    rep = ghz_avn_check(n)
    assert rep.stabilizer_consistent
    assert rep.contradiction


def test_wwwzb_family_max_singlet():
    factor, _ = wwwzb_family_max(qs.singlet().density(), restarts=12)
    assert abs(factor - np.sqrt(2)) < 1e-6  # CHSH member attains 2*sqrt(2)/2


def test_functional_json_roundtrip(tmp_path):
    from bellforge.bell.functionals import catalog_from_json, catalog_to_json

    cat = [chsh(), mermin(3)]
    text = catalog_to_json(cat, tmp_path / "cat.json")
    back = catalog_from_json(text)
    assert back[0].name == "chsh"
    assert_allclose(back[1].coeffs, mermin(3).coeffs)
    assert back[1].lhv_bound == 2.0
