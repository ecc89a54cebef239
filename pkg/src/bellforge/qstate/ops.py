"""State-level operations: correlation tensors, partial trace/transpose,
concurrence, Schmidt decomposition, Jamiolkowski correspondence, entropy."""

import numpy as np

from bellforge.errors import DimensionError, DomainError
from bellforge.qstate.states import PAULI
from bellforge.qstate.types import (
    CorrelationTensor,
    DensityOperator,
    LinearMapMatrix,
    PureState,
)


def correlation_tensor(rho: DensityOperator) -> CorrelationTensor:
    """Expectation values of all Pauli strings of an N-qubit state.

    entries[a1..aN] = Tr(rho sigma_a1 x ... x sigma_aN), sigma_0 = identity.
    """
    if any(d != 2 for d in rho.factor_dims):
        raise DimensionError("correlation tensors are defined for qubit factors")
    n = rho.n_factors
    cur = rho.matrix.reshape((2,) * (2 * n))
    for _ in range(n):
        # after i contractions the leading row axis sits at 0 and the
        # matching column axis at ndim - n (Pauli axes accumulate at the end)
        cur = np.tensordot(cur, PAULI, axes=([0, cur.ndim - n], [2, 1]))
    if np.abs(cur.imag).max() > 1e-10:
        raise DomainError("correlation tensor came out non-real; state corrupt?")
    return CorrelationTensor(cur.real)


def state_from_tensor(t: CorrelationTensor) -> tuple[DensityOperator, bool]:
    """Reconstruct rho = 2^-N sum_a T_a sigma_a1 x ... x sigma_aN.

    Returns ``(rho, positive)``.  An unphysical tensor yields a Hermitian
    unit-trace operator with ``positive=False``; it is reported, not
    rejected.
    """
    n = t.n_parties
    idx0 = (0,) * n
    if abs(t.entries[idx0] - 1.0) > 1e-10:
        raise DomainError("entry (0,...,0) must be 1 for a unit-trace state")
    cur = t.entries.astype(complex)
    for _ in range(n):
        cur = np.tensordot(cur, PAULI, axes=([0], [0]))
    # axes are now (r1, c1, r2, c2, ...); interleave -> (rows..., cols...)
    order = list(range(0, 2 * n, 2)) + list(range(1, 2 * n, 2))
    m = cur.transpose(order).reshape(2**n, 2**n) / 2**n
    m = (m + m.conj().T) / 2  # scrub rounding asymmetry
    rho = DensityOperator(m, (2,) * n, check_positive=False)
    return rho, rho.is_positive()


def partial_trace(rho: DensityOperator, keep) -> DensityOperator:
    """Trace out every factor not listed in ``keep`` (indices, any order)."""
    keep = sorted(set(int(k) for k in keep))
    n = rho.n_factors
    if not keep or any(k < 0 or k >= n for k in keep):
        raise DimensionError(f"keep set {keep} invalid for {n} factors")
    dims = rho.factor_dims
    cur = rho.matrix.reshape(dims + dims)
    # contract row/col axes of dropped factors, highest index first
    for k in sorted(set(range(n)) - set(keep), reverse=True):
        ncur = cur.ndim // 2
        cur = np.trace(cur, axis1=k, axis2=ncur + k)
    d = int(np.prod([dims[k] for k in keep]))
    return DensityOperator(
        cur.reshape(d, d), tuple(dims[k] for k in keep), check_positive=False
    )


def partial_transpose(rho: DensityOperator, part: int) -> np.ndarray:
    """Matrix of rho with the row/col indices of one factor transposed."""
    n = rho.n_factors
    if part < 0 or part >= n:
        raise DimensionError(f"part {part} out of range for {n} factors")
    dims = rho.factor_dims
    cur = rho.matrix.reshape(dims + dims)
    cur = np.swapaxes(cur, part, n + part)
    return cur.reshape(rho.dim, rho.dim)


def partial_transpose_min_eig(rho: DensityOperator, part: int) -> float:
    """Smallest eigenvalue after partially transposing one factor.

    Negative values certify entanglement; for 2x2 and 2x3 systems the
    criterion is also necessary.
    """
    return float(np.linalg.eigvalsh(partial_transpose(rho, part))[0])


def concurrence(rho: DensityOperator) -> float:
    """Wootters concurrence of a two-qubit state.

    max{0, l1 - l2 - l3 - l4} with l_i the decreasing eigenvalues of
    R = sqrt(rho (s2 x s2) rho* (s2 x s2)).
    """
    if rho.factor_dims != (2, 2):
        raise DimensionError("concurrence is defined for two qubits")
    yy = np.kron(PAULI[2], PAULI[2])
    # factor rho = A A^dag; the lambda_i are the singular values of
    # A^T (s2 x s2) A, where eigenvalue noise enters only quadratically
    w, v = np.linalg.eigh(rho.matrix)
    if w.min() < -1e-8:
        raise DomainError(f"state eigenvalue {w.min():.3e} too negative")
    a = v * np.sqrt(np.clip(w, 0.0, None))
    lam = np.linalg.svd(a.T @ yy @ a, compute_uv=False)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def schmidt_decompose(psi: PureState):
    """Schmidt decomposition of a two-qubit pure state.

    Returns ``(alpha, (basis_a, basis_b))`` with alpha in [0, pi/4] such that
    cos(alpha)|0'0'> + sin(alpha)|1'1'> reproduces psi up to a global phase.
    ``basis_a[:, k]`` and ``basis_b[:, k]`` are the local kets |k'>.
    """
    if psi.factor_dims != (2, 2):
        raise DimensionError("schmidt_decompose expects two qubits")
    c = psi.amplitudes.reshape(2, 2)
    u, s, vh = np.linalg.svd(c)
    alpha = float(np.arctan2(s[1], s[0]))
    return alpha, (u, vh.T)


def schmidt_reconstruct(alpha: float, bases) -> PureState:
    u, b = bases
    v = np.cos(alpha) * np.kron(u[:, 0], b[:, 0]) + np.sin(alpha) * np.kron(
        u[:, 1], b[:, 1]
    )
    return PureState(v, (2, 2))


def jamiolkowski_operator(map_func, d_in: int, d_out: int) -> LinearMapMatrix:
    """Matrix W of a linear map, W[k1 l1, k2 l2] = map(|k1><k2|)[l1, l2]."""
    w = np.zeros((d_in * d_out, d_in * d_out), dtype=complex)
    for k1 in range(d_in):
        for k2 in range(d_in):
            e = np.zeros((d_in, d_in), dtype=complex)
            e[k1, k2] = 1.0
            out = np.asarray(map_func(e), dtype=complex)
            if out.shape != (d_out, d_out):
                raise DimensionError("map output has wrong dimension")
            for l1 in range(d_out):
                for l2 in range(d_out):
                    w[k1 * d_out + l1, k2 * d_out + l2] = out[l1, l2]
    return LinearMapMatrix(d_in, d_out, w)


def jamiolkowski_apply(w: LinearMapMatrix, rho_in: DensityOperator) -> np.ndarray:
    """Apply the map encoded by W to a state; result may be unnormalized
    or non-positive for maps that are not trace-preserving/CP."""
    if rho_in.dim != w.d_in:
        raise DimensionError("state dimension does not match the map input")
    wt = w.W.reshape(w.d_in, w.d_out, w.d_in, w.d_out)
    return np.einsum("kalb,kl->ab", wt, rho_in.matrix)


def choi_state(map_func, d_in: int, d_out: int) -> np.ndarray:
    """(1 x map) applied to the maximally entangled projector, computed
    directly from the map action on basis operators.  Equals W/d_in."""
    out = np.zeros((d_in * d_out, d_in * d_out), dtype=complex)
    for i in range(d_in):
        for j in range(d_in):
            e = np.zeros((d_in, d_in), dtype=complex)
            e[i, j] = 1.0
            blk = np.asarray(map_func(e), dtype=complex) / d_in
            out[i * d_out : (i + 1) * d_out, j * d_out : (j + 1) * d_out] = blk
    return out


def von_neumann_entropy(rho: DensityOperator) -> float:
    """-sum p log2 p over the spectrum, with 0 log 0 := 0."""
    ev = np.linalg.eigvalsh(rho.matrix)
    if ev.min() < -1e-8:
        raise DomainError(f"eigenvalue {ev.min():.3e} too negative for entropy")
    ev = np.clip(ev, 0.0, None)
    nz = ev[ev > 0]
    return float(-np.sum(nz * np.log2(nz)))


def apply_local_unitaries(state, unitaries):
    """Conjugate a state by a tensor product of per-factor unitaries."""
    if isinstance(state, PureState):
        u = np.array([[1.0]], dtype=complex)
        for uk, d in zip(unitaries, state.factor_dims):
            u = np.kron(u, np.eye(d) if uk is None else uk)
        return PureState(u @ state.amplitudes, state.factor_dims)
    u = np.array([[1.0]], dtype=complex)
    for uk, d in zip(unitaries, state.factor_dims):
        u = np.kron(u, np.eye(d) if uk is None else uk)
    return DensityOperator(
        u @ state.matrix @ u.conj().T, state.factor_dims, check_positive=False
    )
