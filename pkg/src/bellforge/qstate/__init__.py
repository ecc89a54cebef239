from bellforge.qstate.ops import (
    apply_local_unitaries,
    choi_state,
    concurrence,
    correlation_tensor,
    jamiolkowski_apply,
    jamiolkowski_operator,
    partial_trace,
    partial_transpose,
    partial_transpose_min_eig,
    schmidt_decompose,
    schmidt_reconstruct,
    state_from_tensor,
    von_neumann_entropy,
)
from bellforge.qstate.states import (
    PAULI,
    generalized_ghz,
    ghz,
    ket,
    maximally_mixed,
    noisy,
    product_state,
    random_density,
    random_product_pure,
    random_pure,
    random_separable,
    random_unitary,
    singlet,
    spin_singlet,
    w_state,
    werner,
)
from bellforge.qstate.types import (
    CorrelationTensor,
    DensityOperator,
    LinearMapMatrix,
    PureState,
)

__all__ = [
    "PAULI",
    "CorrelationTensor",
    "DensityOperator",
    "LinearMapMatrix",
    "PureState",
    "apply_local_unitaries",
    "choi_state",
    "concurrence",
    "correlation_tensor",
    "generalized_ghz",
    "ghz",
    "jamiolkowski_apply",
    "jamiolkowski_operator",
    "ket",
    "maximally_mixed",
    "noisy",
    "partial_trace",
    "partial_transpose",
    "partial_transpose_min_eig",
    "product_state",
    "random_density",
    "random_product_pure",
    "random_pure",
    "random_separable",
    "random_unitary",
    "schmidt_decompose",
    "schmidt_reconstruct",
    "singlet",
    "spin_singlet",
    "state_from_tensor",
    "von_neumann_entropy",
    "w_state",
    "werner",
]
