"""Thermodynamic entanglement witnesses: magnetic susceptibility, internal
energy (bipartite / tripartite / bi-factorisable bounds), heat capacity,
total-spin variance and the magnetization complementarity relation."""

from dataclasses import dataclass

import numpy as np

from bellforge.errors import DomainError
from bellforge.qstate import DensityOperator, concurrence, correlation_tensor, partial_trace
from bellforge.thermal.ed import (
    Spectrum,
    diagonalize,
    ground_space_chi_t_limit,
    susceptibility,
    susceptibility_sum_times_t,
    thermal_state_matrix,
    thermal_weights,
)
from bellforge.thermal.lattice import SpinLattice, magnetization_ops

GOLDEN_TRIPARTITE_BOUND = -(1 + np.sqrt(5)) / 2
BIFACTORISABLE_BOUND = -1.5


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of a witness evaluation: the measured quantity, the
    separable-state threshold, whether the value certifies entanglement and
    a note recording the operator convention."""

    quantity: float
    threshold: float
    entangled: bool
    note: str = ""


def witness_susceptibility(lat: SpinLattice, t: float, spec: Spectrum | None = None) -> WitnessReport:
    """Susceptibility witness T*(chi_x+chi_y+chi_z) < sum_i l_i.

    Requires an isotropic lattice at zero field (otherwise the three
    zero-field susceptibilities are not simultaneously thermodynamically
    meaningful) and the spin convention.
    """
    if not lat.is_isotropic:
        raise DomainError("susceptibility witness needs an isotropic lattice")
    if not lat.field_is_zero:
        raise DomainError("susceptibility witness is a zero-field criterion")
    if lat.convention != "spin":
        raise DomainError("susceptibility witness thresholds assume S operators")
    spec = spec or diagonalize(lat)
    quantity = susceptibility_sum_times_t(spec, t)
    threshold = float(sum(lat.sites))
    return WitnessReport(
        quantity, threshold, bool(quantity < threshold), "spin convention, kappa=1"
    )


def witness_susceptibility_t0(lat: SpinLattice, spec: Spectrum | None = None) -> WitnessReport:
    """T->0 limit of the susceptibility witness via the ground-space
    projector (degenerate ground spaces stay mixed; no symmetry breaking)."""
    if not (lat.is_isotropic and lat.field_is_zero and lat.convention == "spin"):
        raise DomainError("witness inapplicable; need isotropic zero-field spin lattice")
    spec = spec or diagonalize(lat)
    quantity = ground_space_chi_t_limit(spec)
    threshold = float(sum(lat.sites))
    return WitnessReport(
        quantity, threshold, bool(quantity < threshold), "ground-space limit"
    )


def _check_heisenberg_half(lat: SpinLattice, need_ring: bool | None = None):
    if any(l != 0.5 for l in lat.sites):
        raise DomainError("energy witness bounds are for spin-1/2 sites")
    if not lat.is_isotropic or any(jq != 0.0 for (_, _, _, jq) in lat.edges):
        raise DomainError("energy witness bounds are for isotropic bilinear rings/chains")
    if lat.convention != "pauli":
        raise DomainError("energy witness bounds assume Pauli operators")
    n = lat.n_sites
    pairs = {(min(i, j), max(i, j)) for (i, j, _, _) in lat.edges}
    ring = {(i, (i + 1) % n) for i in range(n)}
    ring = {(min(a, b), max(a, b)) for a, b in ring}
    chain = {(i, i + 1) for i in range(n - 1)}
    if need_ring is True and pairs != ring:
        raise DomainError("this bound applies to nearest-neighbor rings")
    if need_ring is False and pairs != chain:
        raise DomainError("this bound applies to open nearest-neighbor chains")
    if need_ring is None and pairs not in (ring, chain):
        raise DomainError("this bound applies to nearest-neighbor rings or chains")


def mean_neighbor_correlation(lat: SpinLattice, t: float, spec: Spectrum | None = None) -> float:
    """< (1/N) sum_edges sigma_i . sigma_j > in the thermal state."""
    spec = spec or diagonalize(lat)
    couplings = [jb for (_, _, jb, _) in lat.edges]
    j = couplings[0]
    if any(abs(c - j) > 1e-12 for c in couplings):
        raise DomainError("uniform coupling required")
    p = thermal_weights(spec, t)
    u = float(np.sum(p * spec.energies))
    # H = J sum sigma.sigma (+ field part); subtract the field contribution
    if not lat.field_is_zero:
        meig = spec.magnetization_eigenbasis()
        b = np.asarray(lat.field)
        # field enters H with sigma = 2S
        mval = sum(
            b[a] * 2.0 * float(np.real(np.sum(p * np.diag(meig[a])))) for a in range(3)
        )
        u -= mval
    return u / (j * lat.n_sites)


def witness_energy(
    lat: SpinLattice, t: float, level: str = "bipartite", spec: Spectrum | None = None
) -> WitnessReport:
    """Internal-energy witnesses for spin-1/2 Heisenberg models.

    bipartite: |per-site neighbor correlation| <= 1 for separable states
    (two-sided Cauchy bound).  tripartite: per-site energy below
    -(1+sqrt(5))/2 J on an odd open chain needs genuine tripartite
    entanglement.  bifactorisable: below -3/2 J on a ring of 4M sites rules
    out two-site-factorized states.
    """
    spec = spec or diagonalize(lat)
    if level == "bipartite":
        _check_heisenberg_half(lat)
        q = mean_neighbor_correlation(lat, t, spec)
        return WitnessReport(
            q, 1.0, bool(abs(q) > 1.0), "two-sided: separable states obey |q| <= 1"
        )
    if level == "tripartite":
        _check_heisenberg_half(lat, need_ring=False)
        if lat.n_sites % 2 == 0:
            raise DomainError("tripartite bound derived for odd open chains")
        q = mean_neighbor_correlation(lat, t, spec)
        return WitnessReport(
            q,
            GOLDEN_TRIPARTITE_BOUND,
            bool(q < GOLDEN_TRIPARTITE_BOUND),
            "flags genuine tripartite entanglement",
        )
    if level == "bifactorisable":
        _check_heisenberg_half(lat, need_ring=True)
        if lat.n_sites % 4 != 0:
            raise DomainError("bi-factorisable bound derived for rings of 4M sites")
        q = mean_neighbor_correlation(lat, t, spec)
        return WitnessReport(
            q,
            BIFACTORISABLE_BOUND,
            bool(q < BIFACTORISABLE_BOUND),
            "rules out products of two-site states",
        )
    raise DomainError(f"unknown level {level!r}")


@dataclass(frozen=True)
class HeatCapacityClass:
    """Low-temperature heat-capacity model: gapless power law
    U = U0 + c (kT)^gamma or gapped activation with gap delta; e_bound is
    the separable-state energy bound, u0 the ground energy (per spin)."""

    kind: str
    e_bound: float
    u0: float
    gamma: float | None = None
    delta_gap: float | None = None

    def __post_init__(self):
        if self.kind not in ("gapless", "gapped"):
            raise DomainError(f"unknown kind {self.kind!r}")
        if self.e_bound < self.u0:
            raise DomainError("e_bound must be >= ground energy u0")
        if self.kind == "gapless" and not (self.gamma and self.gamma > 0):
            raise DomainError("gapless class needs gamma > 0")
        if self.kind == "gapped" and not (self.delta_gap and self.delta_gap > 0):
            raise DomainError("gapped class needs delta_gap > 0")


def heat_capacity_threshold(cls: HeatCapacityClass, t: float) -> float:
    if cls.kind == "gapless":
        return cls.gamma * (cls.e_bound - cls.u0) / t
    return cls.delta_gap * (cls.e_bound - cls.u0) / t**2


def witness_heat_capacity(cls: HeatCapacityClass, c_value: float, t: float) -> WitnessReport:
    """Heat capacity below the class threshold certifies entanglement (at
    low temperature, where the class form applies); a separable ground
    state (e_bound = u0) gives threshold 0 and never flags."""
    thr = heat_capacity_threshold(cls, t)
    return WitnessReport(
        float(c_value), float(thr), bool(c_value < thr), f"{cls.kind} spectrum"
    )


def hofmann_takeuchi(state: DensityOperator, lat: SpinLattice) -> float:
    """Total-spin variance sum_dir var(M_dir); separable states stay at or
    above sum_i l_i."""
    m = magnetization_ops(lat)
    rho = state.matrix
    total = 0.0
    for a in range(3):
        mean = float(np.real(np.trace(rho @ m[a])))
        second = float(np.real(np.trace(rho @ m[a] @ m[a])))
        total += second - mean**2
    return total


def complementarity(state: DensityOperator, lat: SpinLattice) -> dict:
    """Magnetization/variance complementarity for N equal spins-l:
    (1 - var(M)/(N l)) + <M>^2/(N l)^2 <= 1, together with the moment
    inequality <M^2> >= (N l + 1)/(N l) <M>^2."""
    ls = set(lat.sites)
    if len(ls) != 1:
        raise DomainError("complementarity needs equal spin magnitudes")
    l = lat.sites[0]
    n = lat.n_sites
    m = magnetization_ops(lat)
    rho = state.matrix
    means = np.array([float(np.real(np.trace(rho @ m[a]))) for a in range(3)])
    seconds = np.array(
        [float(np.real(np.trace(rho @ m[a] @ m[a]))) for a in range(3)]
    )
    var = float(seconds.sum() - np.dot(means, means))
    nonlocal_term = 1.0 - var / (n * l)
    local_term = float(np.dot(means, means)) / (n * l) ** 2
    lhs = nonlocal_term + local_term
    moment_ok = bool(
        seconds.sum() + 1e-9 >= (n * l + 1) / (n * l) * float(np.dot(means, means))
    )
    return {
        "nonlocal_term": nonlocal_term,
        "local_term": local_term,
        "lhs": lhs,
        "moment_inequality_holds": moment_ok,
    }


def witness_bvz_dimer(chi_single_direction_per_spin: float, t: float) -> WitnessReport:
    """Dimer-compound susceptibility witness in natural units
    (g = mu = hbar = kappa = 1): a per-spin single-direction zero-field
    susceptibility below 1/(6T) implies entanglement; this coincides with
    the single-direction form of the general susceptibility witness for
    spins-1/2."""
    thr = 1.0 / (6.0 * t)
    return WitnessReport(
        float(chi_single_direction_per_spin),
        float(thr),
        bool(chi_single_direction_per_spin < thr),
        "natural units, per spin",
    )


def dimer_chi_per_spin(lat: SpinLattice, t: float, spec: Spectrum | None = None) -> float:
    """Single-direction zero-field susceptibility per spin of a dimer
    lattice, for feeding the dimer witness."""
    spec = spec or diagonalize(lat)
    return susceptibility(spec, t, 2, form="kubo") / lat.n_sites


def wang_zanardi_concurrence(lat: SpinLattice, t: float, spec: Spectrum | None = None) -> dict:
    """Nearest-neighbor thermal concurrence of an isotropic spin-1/2 ring
    and its internal-energy expression.

    For the antiferromagnet the concurrence equals
    max{0, (|T11+T22| - T33 - 1)/2} = max{0, -U/(N J) - 1} (Pauli
    convention).  The ferromagnetic branch max{0, (U/(3NJ) - 1)/2} cannot
    be positive for U <= 0 and is reported for information only.
    """
    _check_heisenberg_half(lat, need_ring=True)
    spec = spec or diagonalize(lat)
    rho = thermal_state_matrix(spec, t)
    state = DensityOperator(rho, lat.dims, check_positive=False)
    red = partial_trace(state, [0, 1])
    red = DensityOperator(red.matrix, (2, 2), check_positive=False)
    conc = concurrence(red)
    tens = correlation_tensor(red).entries
    formula = 0.5 * max(0.0, abs(tens[1, 1] + tens[2, 2]) - tens[3, 3] - 1.0)
    j = lat.edges[0][2]
    p = thermal_weights(spec, t)
    u = float(np.sum(p * spec.energies))
    afm = 0.5 * max(0.0, -u / (lat.n_sites * j) - 1.0) if j > 0 else 0.0
    fm = max(0.0, 0.5 * (u / (3 * lat.n_sites * j) - 1.0)) if j < 0 else 0.0
    return {
        "concurrence": conc,
        "tensor_formula": formula,
        "energy_formula_afm": afm,
        "energy_formula_fm_informational": fm,
        "U": u,
    }
