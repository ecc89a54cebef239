"""Desk-scale toolkit for Bell inequalities, single-photon Bell tests and
thermodynamic entanglement witnesses.

Subpackages
-----------
qstate
    Dense linear algebra over tensor-product Hilbert spaces: density
    operators, correlation tensors, partial trace/transpose, concurrence,
    Schmidt decomposition, Jamiolkowski correspondence.
bell
    LHV polytope machinery: brute-force classical bounds, see-saw quantum
    optimization, named Bell operators, generation of tight two- and
    three-setting inequalities, correlation-tensor violation conditions.
photonics
    Single-photon interference Bell tests: Tan-Walls-Collett visibilities,
    BJSS detection probabilities and critical curves, detection-loophole
    formulas.
thermal
    Exact diagonalization of small spin lattices and thermodynamic
    entanglement witnesses (energy, susceptibility, heat capacity).
"""

from bellforge.errors import BellforgeError, DimensionError, DomainError

__version__ = "0.1.0"

__all__ = ["BellforgeError", "DimensionError", "DomainError", "__version__"]
