"""Named states and random-state generators used throughout the tests
and the Bell/thermal analyses."""

import numpy as np

from bellforge.errors import DimensionError
from bellforge.qstate.types import DensityOperator, PureState

PAULI = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)


def ket(bits: str) -> PureState:
    """Computational-basis qubit ket, e.g. ket("01")."""
    n = len(bits)
    v = np.zeros(2**n, dtype=complex)
    v[int(bits, 2)] = 1.0
    return PureState(v, (2,) * n)


def singlet() -> PureState:
    """(|01> - |10>)/sqrt(2)."""
    v = np.zeros(4, dtype=complex)
    v[0b01] = 1 / np.sqrt(2)
    v[0b10] = -1 / np.sqrt(2)
    return PureState(v, (2, 2))


def ghz(n: int, sign: int = +1) -> PureState:
    """(|0...0> + sign |1...1>)/sqrt(2)."""
    v = np.zeros(2**n, dtype=complex)
    v[0] = 1 / np.sqrt(2)
    v[-1] = sign / np.sqrt(2)
    return PureState(v, (2,) * n)


def generalized_ghz(n: int, alpha: float) -> PureState:
    """cos(alpha)|0...0> + sin(alpha)|1...1>."""
    v = np.zeros(2**n, dtype=complex)
    v[0] = np.cos(alpha)
    v[-1] = np.sin(alpha)
    return PureState(v, (2,) * n)


def w_state(n: int) -> PureState:
    """Equal superposition of all single-excitation basis states.

    Normalization is 1/sqrt(n); anything else would not give a unit vector.
    """
    v = np.zeros(2**n, dtype=complex)
    for k in range(n):
        v[1 << (n - 1 - k)] = 1 / np.sqrt(n)
    return PureState(v, (2,) * n)


def spin_singlet(l) -> PureState:
    """Two-spin-l singlet sum_m (-1)^(l-m)|m,-m>/sqrt(2l+1).

    Basis per factor is |m=l>, |m=l-1>, ..., |m=-l>.
    """
    d = int(round(2 * l + 1))
    if abs(2 * l + 1 - d) > 1e-12:
        raise DimensionError(f"spin magnitude {l} is not half-integer")
    v = np.zeros(d * d, dtype=complex)
    for i in range(d):  # i indexes m = l - i
        v[i * d + (d - 1 - i)] = (-1) ** i
    v /= np.linalg.norm(v)
    return PureState(v, (d, d))


def maximally_mixed(factor_dims) -> DensityOperator:
    d = int(np.prod(factor_dims))
    return DensityOperator(np.eye(d) / d, tuple(factor_dims))


def noisy(state, visibility: float) -> DensityOperator:
    """V * rho + (1-V) * I/d (white-noise admixture)."""
    rho = state.density() if isinstance(state, PureState) else state
    d = rho.dim
    m = visibility * rho.matrix + (1 - visibility) * np.eye(d) / d
    return DensityOperator(m, rho.factor_dims)


def werner(visibility: float) -> DensityOperator:
    return noisy(singlet(), visibility)


def product_state(kets) -> PureState:
    """Tensor product of single-factor kets (each a 1-d array)."""
    v = np.array([1.0], dtype=complex)
    dims = []
    for k in kets:
        k = np.asarray(k, dtype=complex).ravel()
        k = k / np.linalg.norm(k)
        v = np.kron(v, k)
        dims.append(k.size)
    return PureState(v, tuple(dims))


def random_unitary(d: int, rng) -> np.ndarray:
    """Haar-random unitary from the QR decomposition of a Ginibre matrix."""
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_pure(factor_dims, rng) -> PureState:
    d = int(np.prod(factor_dims))
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return PureState(v / np.linalg.norm(v), tuple(factor_dims))


def random_density(factor_dims, rng, rank: int | None = None) -> DensityOperator:
    """Mixed state from a Ginibre ensemble of the requested rank."""
    d = int(np.prod(factor_dims))
    r = rank or d
    g = rng.standard_normal((d, r)) + 1j * rng.standard_normal((d, r))
    m = g @ g.conj().T
    return DensityOperator(m / m.trace(), tuple(factor_dims))


def random_product_pure(factor_dims, rng) -> PureState:
    kets = []
    for d in factor_dims:
        v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        kets.append(v)
    return product_state(kets)


def random_separable(factor_dims, rng, n_terms: int = 8) -> DensityOperator:
    """Convex combination of <= n_terms random product states."""
    k = int(rng.integers(1, n_terms + 1))
    w = rng.random(k)
    w /= w.sum()
    d = int(np.prod(factor_dims))
    m = np.zeros((d, d), dtype=complex)
    for p in w:
        psi = random_product_pure(factor_dims, rng)
        m += p * np.outer(psi.amplitudes, psi.amplitudes.conj())
    return DensityOperator(m, tuple(factor_dims))
