"""Exact-diagonalization thermodynamics: spectra, partition functions,
internal energy, heat capacity, magnetization and magnetic
susceptibilities (variance and Kubo forms).  kappa = 1 throughout."""

from dataclasses import dataclass, field

import numpy as np

from bellforge.errors import DomainError
from bellforge.thermal.lattice import SpinLattice, build_hamiltonian, magnetization_ops

MIN_TEMPERATURE = 1e-6
UNDERFLOW = 1e-300


@dataclass
class Spectrum:
    """Eigen-decomposition of a lattice Hamiltonian, energies ascending."""

    energies: np.ndarray
    vectors: np.ndarray
    lattice: SpinLattice | None = None
    _m_eig: np.ndarray | None = field(default=None, repr=False)

    def magnetization_eigenbasis(self) -> np.ndarray:
        """(3, n, n) total-spin components rotated to the eigenbasis."""
        if self._m_eig is None:
            if self.lattice is None:
                raise DomainError("spectrum carries no lattice")
            m = magnetization_ops(self.lattice)
            v = self.vectors
            self._m_eig = np.stack([v.conj().T @ m[a] @ v for a in range(3)])
        return self._m_eig


def diagonalize(lat: SpinLattice) -> Spectrum:
    h = build_hamiltonian(lat)
    energies, vectors = np.linalg.eigh(h)
    return Spectrum(energies, vectors, lat)


def thermal_weights(spec: Spectrum, t: float) -> np.ndarray:
    """Boltzmann probabilities with the ground-energy shift for stability."""
    if t < MIN_TEMPERATURE:
        raise DomainError(f"temperature below {MIN_TEMPERATURE} refused")
    w = np.exp(-(spec.energies - spec.energies[0]) / t)
    return w / w.sum()


def thermo(spec: Spectrum, t: float, with_magnetization: bool = False) -> dict:
    """Z (with its stable logarithm), U, C = var(H)/T^2, optionally the
    magnetization vector, plus the thermal state in the energy basis."""
    p = thermal_weights(spec, t)
    e = spec.energies
    log_z = float(np.log(np.exp(-(e - e[0]) / t).sum()) - e[0] / t)
    u = float(np.sum(p * e))
    c = float(np.sum(p * e**2) - u**2) / t**2
    out = {"logZ": log_z, "Z": float(np.exp(min(log_z, 700.0))), "U": u, "C": c,
           "T": t, "p": p}
    if with_magnetization:
        meig = spec.magnetization_eigenbasis()
        out["M"] = np.array(
            [float(np.real(np.sum(p * np.diag(meig[a])))) for a in range(3)]
        )
    return out


def thermal_state_matrix(spec: Spectrum, t: float) -> np.ndarray:
    p = thermal_weights(spec, t)
    v = spec.vectors
    return (v * p) @ v.conj().T


def _kubo_coefficients(p: np.ndarray) -> np.ndarray:
    """c(p_m, p_n) = (p_m - p_n)/(ln p_m - ln p_n), diagonal limit p, with
    underflowed probabilities treated as exactly zero."""
    q = np.where(p < UNDERFLOW, 0.0, p)
    n = q.size
    pm = np.broadcast_to(q[:, None], (n, n))
    pn = np.broadcast_to(q[None, :], (n, n))
    both = (pm > 0) & (pn > 0)
    with np.errstate(divide="ignore", invalid="ignore"):
        logm = np.where(pm > 0, np.log(np.where(pm > 0, pm, 1.0)), 0.0)
        logn = np.where(pn > 0, np.log(np.where(pn > 0, pn, 1.0)), 0.0)
        dlog = logm - logn
        diff = np.where(both, (pm - pn) / np.where(dlog != 0.0, dlog, 1.0), 0.0)
    # (p-q)/(log p - log q) cancels catastrophically for p ~= q; the
    # midpoint is the same limit with O(dlog^2) error
    near = both & (np.abs(dlog) < 1e-7)
    out = np.where(near, 0.5 * (pm + pn), diff)
    return out


def susceptibility(
    spec: Spectrum, t: float, direction, form: str = "variance"
) -> float:
    """Zero-field magnetic susceptibility along a direction (unit 3-vector
    or axis index 0..2).

    ``variance`` returns var(M)/T; ``kubo`` the canonical correlation form
    (1/T)[sum |<m|M|n>|^2 c(p_m, p_n) - <M>^2], which agrees with the
    variance whenever [H, M] = 0.
    """
    p = thermal_weights(spec, t)
    meig = spec.magnetization_eigenbasis()
    if isinstance(direction, (int, np.integer)):
        m = meig[direction]
    else:
        d = np.asarray(direction, dtype=float)
        d = d / np.linalg.norm(d)
        m = np.tensordot(d, meig, axes=([0], [0]))
    mean = float(np.real(np.sum(p * np.diag(m))))
    if form == "variance":
        msq = np.abs(m) ** 2
        second = float(np.sum(p * msq.sum(axis=1)))
        return (second - mean**2) / t
    if form == "kubo":
        c = _kubo_coefficients(p)
        second = float(np.real(np.sum(c * np.abs(m) ** 2)))
        return (second - mean**2) / t
    raise DomainError(f"unknown susceptibility form {form!r}")


def susceptibility_sum_times_t(spec: Spectrum, t: float, form: str = "variance") -> float:
    """T * (chi_x + chi_y + chi_z) at zero field."""
    return float(t * sum(susceptibility(spec, t, a, form) for a in range(3)))


def ground_space_chi_t_limit(spec: Spectrum, degeneracy_tol: float = 1e-9) -> float:
    """T->0 limit of T * (chi_x + chi_y + chi_z) for a rotation-invariant
    Hamiltonian: total-spin variance over the equal-weight mixture of the
    (possibly degenerate) ground space, without symmetry breaking."""
    e = spec.energies
    g = int(np.sum(e - e[0] < degeneracy_tol * max(1.0, np.abs(e).max())))
    meig = spec.magnetization_eigenbasis()
    total = 0.0
    for a in range(3):
        block = meig[a][:g, :g]
        mean = float(np.real(np.trace(block))) / g
        # [H, M] = 0 keeps M block-diagonal in energy, so the full second
        # moment of the ground mixture is contained in the ground block
        second = float(np.sum(np.abs(block) ** 2)) / g
        total += second - mean**2
    return total
