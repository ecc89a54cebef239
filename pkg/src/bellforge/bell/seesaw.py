"""See-saw maximization of Bell functionals over product observables.

The objective sum_j c_j T.(a^1_j1 x ... x a^N_jN) is multilinear in each
party's unit vectors, so coordinate ascent has a closed-form per-party
update: the optimal vector for one setting is the normalized contraction
of the tensor against every other party's current vectors.  Each sweep is
monotonically nondecreasing; random restarts handle local maxima.
"""

import itertools

import numpy as np

from bellforge.errors import DimensionError
from bellforge.bell.functionals import BellFunctional
from bellforge.qstate import correlation_tensor

DEFAULT_RESTARTS = 64
SWEEP_TOL = 1e-12
MAX_SWEEPS = 1000


def _contract_except(block, mats, skip):
    """Contract axis k of ``block`` with mats[k] (m_k, 3) for k != skip.

    Returns an array whose axes are (settings of parties != skip in order,
    3-vector axis of party ``skip``).
    """
    cur = block
    pos = 0
    for k, a in enumerate(mats):
        if k == skip:
            cur = np.moveaxis(cur, pos, -1)
            continue
        cur = np.moveaxis(np.tensordot(a, cur, axes=([1], [pos])), 0, pos)
        pos += 1
    return cur


def _random_obs(settings, rng):
    obs = []
    for m in settings:
        v = rng.standard_normal((m, 3))
        obs.append(v / np.linalg.norm(v, axis=1, keepdims=True))
    return obs


def _sweep(coeffs, block, obs):
    value = 0.0
    n = len(obs)
    for k in range(n):
        rest = _contract_except(block, obs, k)
        # c[j_k, :] = sum over other settings of coeffs * rest
        axes_other = [i for i in range(n) if i != k]
        grad = np.tensordot(
            coeffs, rest, axes=(axes_other, list(range(n - 1)))
        )
        norms = np.linalg.norm(grad, axis=1)
        new = obs[k].copy()
        ok = norms > 1e-300
        new[ok] = grad[ok] / norms[ok, None]
        obs[k] = new
        value = float(norms.sum())
    return value


def evaluate(coeffs, block, obs) -> float:
    cur = block
    for a in obs:
        cur = np.tensordot(a, cur, axes=([1], [0]))
    return float(np.sum(np.asarray(coeffs) * cur))


def quantum_value(
    f: BellFunctional,
    rho,
    restarts: int = DEFAULT_RESTARTS,
    seed: int = 0,
):
    """Best product-observable value of a Bell functional on a state.

    Returns ``(value, observables)`` where observables is a list of
    (m_k, 3) unit-vector arrays.  The search is a see-saw from ``restarts``
    random starts; the value reported is the best local maximum found.
    """
    if any(d != 2 for d in rho.factor_dims):
        raise DimensionError("quantum_value expects qubit factors")
    if rho.n_factors != f.scenario.n_parties:
        raise DimensionError("state and functional party counts differ")
    block = correlation_tensor(rho).block()
    rng = np.random.default_rng(seed)
    best, best_obs = -np.inf, None
    for _ in range(max(1, restarts)):
        obs = _random_obs(f.scenario.settings, rng)
        prev = -np.inf
        for _ in range(MAX_SWEEPS):
            val = _sweep(f.coeffs, block, obs)
            if val - prev < SWEEP_TOL:
                break
            prev = val
        if val > best:
            best, best_obs = val, [a.copy() for a in obs]
    return best, best_obs


def multilinear_max(
    block,
    planar: bool = False,
    restarts: int = 32,
    seed: int = 0,
    grid_seeds: bool = True,
):
    """Maximum of T.(a^1 x ... x a^N) over per-party unit vectors.

    ``planar`` restricts every vector to the xy-plane (projection before
    normalization keeps each update optimal within the plane).  With
    ``grid_seeds`` the 2^N (planar) or 3^N axis-aligned vector choices are
    evaluated first and the best is used as an extra starting point; for a
    planar correlation function those grid values already determine it.
    """
    block = np.asarray(block, dtype=float)
    n = block.ndim
    rng = np.random.default_rng(seed)

    def ascend(vecs):
        val = _eval_vec(block, vecs)
        prev = -np.inf
        for _ in range(MAX_SWEEPS):
            for k in range(n):
                grad = _contract_except(block, vecs, k).reshape(3)
                if planar:
                    grad = grad.copy()
                    grad[2] = 0.0
                nrm = np.linalg.norm(grad)
                if nrm > 1e-300:
                    vecs[k] = (grad / nrm)[None, :]
                val = nrm
            if val - prev < SWEEP_TOL:
                break
            prev = val
        return val, vecs

    starts = []
    axes = [np.eye(3)[0], np.eye(3)[1]] if planar else [np.eye(3)[i] for i in range(3)]
    if grid_seeds and len(axes) ** n <= 1024:
        best_grid, best_combo = -np.inf, None
        for combo in itertools.product(axes, repeat=n):
            vecs = [c[None, :] for c in combo]
            v = _eval_vec(block, vecs)
            if abs(v) > best_grid:
                best_grid = abs(v)
                best_combo = [c.copy()[None, :] for c in combo]
                if v < 0:
                    best_combo[0] = -best_combo[0]
        starts.append(best_combo)
    for _ in range(max(1, restarts)):
        vecs = [rng.standard_normal(3) for _ in range(n)]
        if planar:
            for v in vecs:
                v[2] = 0.0
        starts.append([(v / np.linalg.norm(v))[None, :] for v in vecs])
    best, best_vecs = -np.inf, None
    for vecs in starts:
        val, vv = ascend([v.copy() for v in vecs])
        if val > best:
            best, best_vecs = val, vv
    return best, [v[0] for v in best_vecs]


def _eval_vec(block, vecs) -> float:
    cur = block
    for v in vecs:
        cur = np.tensordot(v[0], cur, axes=([0], [0]))
    return float(cur)


def wwwzb_family_max(rho, restarts: int = 16, seed: int = 0):
    """Largest violation factor over the complete two-setting family.

    Enumerates every sign function S on the 2^N sign vectors (one of each
    +-S pair), builds the corresponding correlation functional with
    classical bound 2^N and see-saws each; returns
    ``(max_factor, best_functional)``.
    """
    n = rho.n_factors
    if n > 3:
        raise DimensionError("family enumeration supported for up to 3 qubits")
    from bellforge.bell.functionals import Scenario

    signs = np.array(
        [[1 - 2 * ((r >> j) & 1) for j in range(n)] for r in range(2**n)]
    )
    best = (-np.inf, None)
    for bits in range(2 ** (2**n - 1)):  # fix S at s=(+,...,+) to +1
        s_vals = np.array(
            [1] + [1 - 2 * ((bits >> i) & 1) for i in range(2**n - 1)]
        )
        coeffs = np.zeros((2,) * n)
        for j in np.ndindex(*coeffs.shape):
            mask = np.array(j)  # 1 where the second setting enters
            coeffs[j] = float(np.sum(s_vals * np.prod(signs**mask, axis=1)))
        f = BellFunctional(Scenario(n, (2,) * n), coeffs, float(2**n))
        val, _ = quantum_value(f, rho, restarts=restarts, seed=seed)
        factor = val / 2**n
        if factor > best[0]:
            best = (factor, f)
    return best
