"""Brute-force classical bounds over deterministic strategies."""

import numpy as np

from bellforge.errors import DomainError
from bellforge.kernels import lhv_max_int, sign_matrix
from bellforge.bell.functionals import BellFunctional

MAX_STRATEGIES = 2**24


def _integer_scaled(coeffs: np.ndarray):
    """Return (scaled int64 tensor, denominator) when all coefficients are
    quarter integers, else None; integer arithmetic keeps the bound exact."""
    for denom in (1, 2, 4):
        scaled = coeffs * denom
        rounded = np.round(scaled)
        if np.abs(scaled - rounded).max() < 1e-9:
            return rounded.astype(np.int64), denom
    return None


def strategy_value_table(coeffs: np.ndarray) -> np.ndarray:
    """Values of the functional on every deterministic strategy.

    Axis k of the result enumerates party k's 2^(m_k) outcome assignments in
    the order of ``kernels.sign_matrix``.
    """
    cur = np.asarray(coeffs)
    for m in coeffs.shape:
        cur = np.tensordot(cur, sign_matrix(m).astype(cur.dtype), axes=([0], [1]))
    return cur


def lhv_bound(f: BellFunctional, store: bool = True) -> float:
    """Exact maximum of |sum coeffs * prod outcomes| over all deterministic
    local strategies; quarter-integer coefficients are evaluated in integer
    arithmetic."""
    if f.scenario.n_strategies > MAX_STRATEGIES:
        raise DomainError(
            f"{f.scenario.n_strategies} strategies exceed the 2^24 budget"
        )
    scaled = _integer_scaled(f.coeffs)
    if scaled is not None:
        ints, denom = scaled
        bound = lhv_max_int(ints) / denom
    else:
        bound = float(np.abs(strategy_value_table(f.coeffs)).max())
    if store:
        f.lhv_bound = float(bound)
    return float(bound)


def lhv_bound_via_vertices(f: BellFunctional) -> float:
    """Classical bound as a maximum over correlation-polytope vertices.

    Vertices are outer products of per-party outcome vectors; the pair
    {v, -v} is identified by fixing the first party's first outcome to +1,
    and the absolute maximum over that half equals the bound over all
    strategies.
    """
    if f.scenario.n_strategies > MAX_STRATEGIES:
        raise DomainError(
            f"{f.scenario.n_strategies} strategies exceed the 2^24 budget"
        )
    cur = np.asarray(f.coeffs, dtype=float)
    m0 = f.scenario.settings[0]
    half = sign_matrix(m0).astype(float)
    half = half[half[:, 0] > 0]  # global-sign identification
    cur = np.tensordot(cur, half, axes=([0], [1]))
    for m in f.scenario.settings[1:]:
        cur = np.tensordot(cur, sign_matrix(m).astype(float), axes=([0], [1]))
    return float(np.abs(cur).max())
