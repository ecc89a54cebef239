from bellforge.thermal.ed import (
    Spectrum,
    diagonalize,
    ground_space_chi_t_limit,
    susceptibility,
    susceptibility_sum_times_t,
    thermal_state_matrix,
    thermal_weights,
    thermo,
)
from bellforge.thermal.ising import (
    ising_min_variance,
    ising_variance_direct,
    ising_variance_per_site,
)
from bellforge.thermal.katsura import (
    heat_capacity_entanglement_crossing,
    katsura_ising_c,
    katsura_xx,
)
from bellforge.thermal.lattice import (
    MODEL_FACTORIES,
    SpinLattice,
    blbq_ring6,
    build_hamiltonian,
    cube_center,
    dimer_chain,
    ising_ring,
    lattice_from_json,
    magnetization_ops,
    octahedron_center,
    spin_matrices,
    tetrahedron_center,
    xxx_chain,
    xxx_ring,
    xxz_ring,
)
from bellforge.thermal.witnesses import (
    HeatCapacityClass,
    WitnessReport,
    complementarity,
    dimer_chi_per_spin,
    heat_capacity_threshold,
    hofmann_takeuchi,
    mean_neighbor_correlation,
    wang_zanardi_concurrence,
    witness_bvz_dimer,
    witness_energy,
    witness_heat_capacity,
    witness_susceptibility,
    witness_susceptibility_t0,
)

__all__ = [
    "MODEL_FACTORIES",
    "HeatCapacityClass",
    "SpinLattice",
    "Spectrum",
    "WitnessReport",
    "blbq_ring6",
    "build_hamiltonian",
    "complementarity",
    "cube_center",
    "diagonalize",
    "dimer_chain",
    "dimer_chi_per_spin",
    "ground_space_chi_t_limit",
    "heat_capacity_entanglement_crossing",
    "heat_capacity_threshold",
    "hofmann_takeuchi",
    "ising_min_variance",
    "ising_ring",
    "ising_variance_direct",
    "ising_variance_per_site",
    "katsura_ising_c",
    "katsura_xx",
    "lattice_from_json",
    "magnetization_ops",
    "mean_neighbor_correlation",
    "octahedron_center",
    "spin_matrices",
    "susceptibility",
    "susceptibility_sum_times_t",
    "tetrahedron_center",
    "thermal_state_matrix",
    "thermal_weights",
    "thermo",
    "wang_zanardi_concurrence",
    "witness_bvz_dimer",
    "witness_energy",
    "witness_heat_capacity",
    "witness_susceptibility",
    "witness_susceptibility_t0",
    "xxx_chain",
    "xxx_ring",
    "xxz_ring",
]
