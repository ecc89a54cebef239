import numpy as np
import pytest
from numpy.testing import assert_allclose

from bellforge import qstate as qs
from bellforge.errors import DimensionError, DomainError


def test_singlet_correlation_tensor():
    t = qs.correlation_tensor(qs.singlet().density()).entries
    assert_allclose([t[1, 1], t[2, 2], t[3, 3]], [-1, -1, -1], atol=1e-12)
    assert_allclose(t[0, 0], 1.0, atol=1e-12)
    mask = np.ones((4, 4), dtype=bool)
    mask[[0, 1, 2, 3], [0, 1, 2, 3]] = False
    assert np.abs(t[mask]).max() < 1e-12


def test_maximally_mixed_tensor_is_trivial():
    t = qs.correlation_tensor(qs.maximally_mixed((2, 2))).entries
    expected = np.zeros((4, 4))
    expected[0, 0] = 1.0
    assert_allclose(t, expected, atol=1e-14)


def test_ghz3_stabilizer_entries():
    t = qs.correlation_tensor(qs.ghz(3, sign=-1).density()).entries
    assert_allclose(
        [t[1, 2, 2], t[2, 1, 2], t[2, 2, 1], t[1, 1, 1]], [1, 1, 1, -1], atol=1e-12
    )


def test_tensor_roundtrip_random_states(rng):
    for n in (2, 3, 4):
        rho = qs.random_density((2,) * n, rng)
        t = qs.correlation_tensor(rho)
        back, positive = qs.state_from_tensor(t)
        assert positive
        assert np.abs(back.matrix - rho.matrix).max() < 1e-10


def test_state_from_tensor_identity_and_unphysical():
    t = np.zeros((4, 4))
    t[0, 0] = 1.0
    rho, positive = qs.state_from_tensor(qs.CorrelationTensor(t))
    assert positive
    assert_allclose(rho.matrix, np.eye(4) / 4, atol=1e-14)
    # an unphysical tensor is reported, not rejected
    t2 = t.copy()
    t2[1, 1] = t2[2, 2] = t2[3, 3] = 1.5
    rho2, positive2 = qs.state_from_tensor(qs.CorrelationTensor(t2))
    assert not positive2
    assert abs(np.trace(rho2.matrix) - 1) < 1e-12


def test_state_from_tensor_requires_unit_leading_entry():
    t = np.zeros((4, 4))
    t[0, 0] = 0.5
    with pytest.raises(DomainError):
        qs.state_from_tensor(qs.CorrelationTensor(t))


@pytest.mark.parametrize("l", [0.5, 1.0, 1.5])
def test_partial_trace_spin_singlet(l):
    d = int(2 * l + 1)
    red = qs.partial_trace(qs.spin_singlet(l).density(), [0])
    assert_allclose(red.matrix, np.eye(d) / d, atol=1e-12)
    assert_allclose(qs.von_neumann_entropy(red), np.log2(d), atol=1e-12)


def test_partial_trace_product_and_ghz(rng):
    r1 = qs.random_density((2,), rng)
    r2 = qs.random_density((2,), rng)
    prod = qs.DensityOperator(np.kron(r1.matrix, r2.matrix), (2, 2))
    assert np.abs(qs.partial_trace(prod, [0]).matrix - r1.matrix).max() < 1e-12
    red = qs.partial_trace(qs.ghz(3).density(), [1, 2])
    expected = np.zeros((4, 4))
    expected[0, 0] = expected[3, 3] = 0.5
    assert_allclose(red.matrix, expected, atol=1e-12)


def test_partial_trace_validates_keep():
    rho = qs.maximally_mixed((2, 2))
    with pytest.raises(DimensionError):
        qs.partial_trace(rho, [])
    with pytest.raises(DimensionError):
        qs.partial_trace(rho, [5])


def test_partial_transpose_min_eig():
    assert_allclose(
        qs.partial_transpose_min_eig(qs.singlet().density(), 0), -0.5, atol=1e-12
    )
    with pytest.raises(DimensionError):
        qs.partial_transpose_min_eig(qs.singlet().density(), 3)


def test_partial_transpose_separable_nonnegative(rng):
    for _ in range(20):
        rho = qs.random_separable((2, 2), rng)
        assert qs.partial_transpose_min_eig(rho, 0) >= -1e-10


def test_concurrence_singlet_and_products(rng):
    assert_allclose(qs.concurrence(qs.singlet().density()), 1.0, atol=1e-10)
    for _ in range(10):
        rho = qs.random_product_pure((2, 2), rng).density()
        assert qs.concurrence(rho) < 1e-8


def test_concurrence_matches_schmidt_angle(rng):
    for _ in range(25):
        psi = qs.random_pure((2, 2), rng)
        alpha, _ = qs.schmidt_decompose(psi)
        conc = qs.concurrence(psi.density())
        assert abs(conc - np.sin(2 * alpha)) < 1e-9


def test_schmidt_reconstruction(rng):
    for psi in [qs.singlet(), qs.generalized_ghz(2, 0.3), qs.random_pure((2, 2), rng)]:
        alpha, bases = qs.schmidt_decompose(psi)
        assert 0 <= alpha <= np.pi / 4 + 1e-12
        rec = qs.schmidt_reconstruct(alpha, bases)
        overlap = abs(np.vdot(rec.amplitudes, psi.amplitudes))
        assert abs(overlap - 1) < 1e-10


def test_schmidt_tensor_structure():
    alpha = 0.3
    psi = qs.generalized_ghz(2, alpha)
    t = qs.correlation_tensor(psi.density()).entries
    assert_allclose(t[1, 1], np.sin(2 * alpha), atol=1e-12)
    assert_allclose(t[2, 2], -np.sin(2 * alpha), atol=1e-12)
    assert_allclose(t[3, 3], 1.0, atol=1e-12)
    assert_allclose(t[0, 3], np.cos(2 * alpha), atol=1e-12)
    assert_allclose(t[3, 0], np.cos(2 * alpha), atol=1e-12)


def test_jamiolkowski_transposition_and_identity():
    w = qs.jamiolkowski_operator(lambda m: m.T, 2, 2)
    cs = qs.choi_state(lambda m: m.T, 2, 2)
    assert np.abs(cs - w.W / 2).max() < 1e-12
    assert_allclose(np.linalg.eigvalsh(w.W / 2)[0], -0.5, atol=1e-12)
    wid = qs.jamiolkowski_operator(lambda m: m, 2, 2)
    psi_plus = np.array([1, 0, 0, 1]) / np.sqrt(2)
    assert np.abs(wid.W / 2 - np.outer(psi_plus, psi_plus)).max() < 1e-12


def test_jamiolkowski_apply_matches_map(rng):
    k1 = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    k2 = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    norm = np.linalg.eigvalsh(k1.conj().T @ k1 + k2.conj().T @ k2)[-1]
    k1, k2 = k1 / np.sqrt(norm), k2 / np.sqrt(norm)

    def cp_map(m):
        return k1 @ m @ k1.conj().T + k2 @ m @ k2.conj().T

    w = qs.jamiolkowski_operator(cp_map, 2, 2)
    # complete positivity <=> the map matrix is positive semidefinite
    assert np.linalg.eigvalsh(w.W)[0] > -1e-10
    rho = qs.random_density((2,), rng)
    rho_in = qs.DensityOperator(rho.matrix, (2,))
    out = qs.jamiolkowski_apply(w, rho_in)
    assert np.abs(out - cp_map(rho.matrix)).max() < 1e-12


def test_entropy_values():
    assert qs.von_neumann_entropy(qs.singlet().density()) < 1e-10
    mix = qs.DensityOperator(np.diag([0.5, 0.5, 0, 0]), (2, 2))
    assert_allclose(qs.von_neumann_entropy(mix), 1.0, atol=1e-12)


def test_local_unitary_invariance(rng):
    for _ in range(10):
        rho = qs.random_density((2, 2), rng)
        us = [qs.random_unitary(2, rng), qs.random_unitary(2, rng)]
        rotated = qs.apply_local_unitaries(rho, us)
        assert abs(qs.concurrence(rho) - qs.concurrence(rotated)) < 1e-9
        assert (
            abs(qs.von_neumann_entropy(rho) - qs.von_neumann_entropy(rotated)) < 1e-9
        )


def test_tensor_covariance_under_rotations(rng):
    """Rotating each party's observables equals rotating the (1..3) block."""
    from scipy.spatial.transform import Rotation

    rho = qs.random_density((2, 2, 2), rng)
    t = qs.correlation_tensor(rho)
    rots = [Rotation.random(random_state=7 + k).as_matrix() for k in range(3)]
    rotated = t.rotated(rots).entries
    # contracting the rotated block with a equals measuring along R^T a
    for _ in range(5):
        vecs = [v / np.linalg.norm(v) for v in rng.standard_normal((3, 3))]
        op = np.array([[1.0]])
        for r, v in zip(rots, vecs):
            pauli_vec = np.tensordot(r.T @ v, qs.PAULI[1:], axes=([0], [0]))
            op = np.kron(op, pauli_vec)
        direct = float(np.real(np.trace(rho.matrix @ op)))
        block = rotated[1:, 1:, 1:]
        contracted = block
        for v in vecs:
            contracted = np.tensordot(v, contracted, axes=([0], [0]))
        assert abs(direct - float(contracted)) < 1e-10


def test_density_operator_validation():
    with pytest.raises(DomainError):
        qs.DensityOperator(np.array([[0.6, 0.3], [0.1, 0.4]]), (2,))
    with pytest.raises(DomainError):
        qs.DensityOperator(np.diag([0.7, 0.7]), (2,))
    with pytest.raises(DimensionError):
        qs.DensityOperator(np.eye(4) / 4, (2, 3))
    with pytest.raises(DomainError):
        qs.DensityOperator(np.diag([1.5, -0.5]), (2,))


def test_w_state_normalization():
    for n in (2, 3, 5):
        w = qs.w_state(n)
        assert abs(np.linalg.norm(w.amplitudes) - 1) < 1e-12
        assert np.count_nonzero(w.amplitudes) == n
