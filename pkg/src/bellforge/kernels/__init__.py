"""Hot kernels with a compiled core and a pure-NumPy fallback.

The Cython extension ``_fast`` is built by ``pip install``; when it is
missing (source checkout without a build step) the NumPy implementations
take over transparently.  ``BACKEND`` reports which one is active.
"""

from bellforge.kernels import _pure

try:
    from bellforge.kernels import _fast  # type: ignore[attr-defined]

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on build environment
    _fast = None
    BACKEND = "pure"

_impl = _fast if _fast is not None else _pure

sign_matrix = _pure.sign_matrix
lhv_max_int = _impl.lhv_max_int
canonical_form = _impl.canonical_form

__all__ = ["BACKEND", "canonical_form", "lhv_max_int", "sign_matrix"]
