"""Core state-carrier types.

All states live on tensor products of finite-dimensional factors; the
factor dimensions are carried explicitly so that partial operations
(trace, transpose, per-party rotations) know the product structure.
"""

from dataclasses import dataclass, field

import numpy as np

from bellforge.errors import DimensionError, DomainError

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
NEG_EIG_TOL = 1e-10


def _as_complex_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    return a


@dataclass(frozen=True)
class DensityOperator:
    """Hermitian, unit-trace, positive-semidefinite matrix on a product space.

    ``factor_dims`` records the tensor-product structure; its product must
    equal ``dim``.  Construction validates Hermiticity and trace always, and
    positivity unless ``check_positive=False`` (used by tensor round-trips
    that may produce unphysical operators which are reported, not rejected).
    """

    matrix: np.ndarray
    factor_dims: tuple[int, ...]
    dim: int = field(init=False)
    check_positive: bool = True

    def __post_init__(self):
        m = _as_complex_matrix(self.matrix)
        object.__setattr__(self, "matrix", m)
        dims = tuple(int(d) for d in self.factor_dims)
        if not dims or any(d < 1 for d in dims):
            raise DimensionError(f"bad factor_dims {dims}")
        object.__setattr__(self, "factor_dims", dims)
        object.__setattr__(self, "dim", int(np.prod(dims)))
        if self.dim != m.shape[0]:
            raise DimensionError(
                f"factor_dims {dims} inconsistent with matrix dim {m.shape[0]}"
            )
        if np.abs(m - m.conj().T).max() > HERMITICITY_TOL:
            raise DomainError("matrix is not Hermitian within 1e-12")
        if abs(m.trace() - 1.0) > max(TRACE_TOL, 1e-13 * self.dim):
            raise DomainError(f"trace is {m.trace():.15g}, expected 1")
        if self.check_positive and self.min_eigenvalue() < -NEG_EIG_TOL:
            raise DomainError(
                f"smallest eigenvalue {self.min_eigenvalue():.3e} below -1e-10"
            )

    @property
    def n_factors(self) -> int:
        return len(self.factor_dims)

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.matrix)[0])

    def is_positive(self, tol: float = NEG_EIG_TOL) -> bool:
        return self.min_eigenvalue() >= -tol

    @classmethod
    def from_pure(cls, psi: "PureState") -> "DensityOperator":
        v = psi.amplitudes
        return cls(np.outer(v, v.conj()), psi.factor_dims)


@dataclass(frozen=True)
class PureState:
    """Normalized state vector on a product space."""

    amplitudes: np.ndarray
    factor_dims: tuple[int, ...]

    def __post_init__(self):
        v = np.asarray(self.amplitudes, dtype=complex).ravel()
        object.__setattr__(self, "amplitudes", v)
        dims = tuple(int(d) for d in self.factor_dims)
        object.__setattr__(self, "factor_dims", dims)
        if int(np.prod(dims)) != v.size:
            raise DimensionError(
                f"factor_dims {dims} inconsistent with vector length {v.size}"
            )
        if abs(np.linalg.norm(v) - 1.0) > 1e-12:
            raise DomainError(f"norm is {np.linalg.norm(v):.15g}, expected 1")

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    @property
    def n_factors(self) -> int:
        return len(self.factor_dims)

    def density(self) -> DensityOperator:
        return DensityOperator.from_pure(self)


@dataclass(frozen=True)
class CorrelationTensor:
    """Pauli-basis expansion coefficients of an N-qubit state.

    ``entries[a1, ..., aN] = Tr(rho sigma_a1 x ... x sigma_aN)`` with index 0
    the identity.  The (0,...,0) entry is 1 for any unit-trace state and all
    entries of physical states lie in [-1, 1].
    """

    entries: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=float)
        if e.ndim < 1 or any(s != 4 for s in e.shape):
            raise DimensionError(f"expected shape (4,)*n, got {e.shape}")
        object.__setattr__(self, "entries", e)

    @property
    def n_parties(self) -> int:
        return self.entries.ndim

    def block(self) -> np.ndarray:
        """The pure-correlation (1..3)^N block, shape (3,)*n."""
        sl = tuple(slice(1, 4) for _ in range(self.n_parties))
        return self.entries[sl]

    def rotated(self, rotations) -> "CorrelationTensor":
        """Apply a per-party 3x3 orthogonal rotation to the vector indices.

        ``rotations`` is a sequence of 3x3 arrays, one per party (None to
        leave a party untouched).  Index 0 (identity) components are
        unaffected, matching how local frame changes act on observables.
        """
        cur = self.entries.copy()
        for k, r in enumerate(rotations):
            if r is None:
                continue
            r = np.asarray(r, dtype=float)
            big = np.zeros((4, 4))
            big[0, 0] = 1.0
            big[1:, 1:] = r
            cur = np.moveaxis(np.tensordot(big, cur, axes=([1], [k])), 0, k)
        return CorrelationTensor(cur)


@dataclass(frozen=True)
class LinearMapMatrix:
    """Hermitian matrix representation of a linear map on operators.

    ``W[k1*d_out + l1, k2*d_out + l2]`` holds the matrix elements of the map
    applied to basis operators |k1><k2|; Hermiticity of W corresponds to the
    map preserving Hermiticity.
    """

    d_in: int
    d_out: int
    W: np.ndarray

    def __post_init__(self):
        w = _as_complex_matrix(self.W)
        object.__setattr__(self, "W", w)
        if w.shape[0] != self.d_in * self.d_out:
            raise DimensionError(
                f"W has dim {w.shape[0]}, expected {self.d_in * self.d_out}"
            )
        if np.abs(w - w.conj().T).max() > HERMITICITY_TOL:
            raise DomainError("W is not Hermitian within 1e-12")
