"""Exception types shared across the package."""


class BellforgeError(Exception):
    """Base class for all package errors."""


class DimensionError(BellforgeError):
    """Operands have incompatible or unsupported Hilbert-space dimensions."""


class DomainError(BellforgeError):
    """Inputs are outside the domain an operation is defined on
    (e.g. an anisotropic lattice fed to the susceptibility witness)."""
