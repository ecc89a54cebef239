"""All-versus-Nothing contradiction check for GHZ states.

For the N-qubit state (|0..0> - |1..1>)/sqrt(2) every operator with
sigma_y on two positions and sigma_x elsewhere has expectation +1 while
the all-sigma_x string has expectation -1.  Deterministic local values
for the pair operators on sites {1,2},{2,3},{1,3} multiply (squares drop
out) to the all-x product, so local realism predicts +1 against the
quantum -1.
"""

from dataclasses import dataclass

import numpy as np

from bellforge.errors import DomainError
from bellforge.qstate import PAULI, DensityOperator, ghz


@dataclass(frozen=True)
class AvnReport:
    n: int
    pair_means: dict
    all_x_mean: float
    lhv_prediction: float
    stabilizer_consistent: bool
    contradiction: bool


def _pauli_string_mean(rho: DensityOperator, labels) -> float:
    op = np.array([[1.0]], dtype=complex)
    for a in labels:
        op = np.kron(op, PAULI[a])
    return float(np.real(np.trace(rho.matrix @ op)))


def ghz_avn_check(n: int, rho: DensityOperator | None = None) -> AvnReport:
    """Evaluate the stabilizer means entering the AvN argument.

    ``rho`` defaults to the N-qubit GHZ state with a relative minus sign.
    ``stabilizer_consistent`` records whether all pair means are +1 and the
    all-x mean is -1 within 1e-10; ``contradiction`` whether the product of
    the three pair means on sites (0,1),(1,2),(0,2) disagrees in sign with
    the all-x mean (the local-realistic product rule forces equality).
    """
    if not 3 <= n <= 6:
        raise DomainError(f"AvN check supported for 3..6 qubits, got {n}")
    if rho is None:
        rho = ghz(n, sign=-1).density()
    pair_means = {}
    for i in range(n):
        for j in range(i + 1, n):
            labels = [1] * n
            labels[i] = labels[j] = 2
            pair_means[(i, j)] = _pauli_string_mean(rho, labels)
    all_x = _pauli_string_mean(rho, [1] * n)
    consistent = all(
        abs(v - 1.0) < 1e-10 for v in pair_means.values()
    ) and abs(all_x + 1.0) < 1e-10
    # product of outcomes for the triangle of pairs on the first 3 sites:
    # each site appears an even number of times in sigma_y and an odd
    # number in sigma_x, so LHV predicts the all-x product.
    lhv = pair_means[(0, 1)] * pair_means[(1, 2)] * pair_means[(0, 2)]
    contradiction = abs(lhv) > 0.5 and abs(all_x) > 0.5 and np.sign(lhv) != np.sign(
        all_x
    )
    return AvnReport(n, pair_means, all_x, lhv, consistent, contradiction)
