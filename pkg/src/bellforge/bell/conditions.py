"""Correlation-tensor conditions for satisfying or violating the
two-setting (WWWZB), many-setting (WZLPZB), three-setting and
rotationally-invariant Bell inequality families.

All conditions are quadratic forms in the pure-correlation block of the
tensor, restricted to per-party planes or directions, maximized over the
allowed local frame choices.
"""

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize
from scipy.spatial.transform import Rotation

from bellforge.errors import DimensionError
from bellforge.bell.seesaw import multilinear_max
from bellforge.qstate import CorrelationTensor, correlation_tensor, generalized_ghz


def _block(t) -> np.ndarray:
    if isinstance(t, CorrelationTensor):
        return t.block()
    return np.asarray(t, dtype=float)


def plane_sum(t, normals) -> float:
    """sum of squared tensor entries over per-party planes.

    Each plane is identified by its unit normal; the sum runs over the
    (1..3) block contracted on both sides with the plane projectors
    P = I - n n^T, which equals the frame-rotated sum over in-plane indices.
    """
    w = _block(t)
    n = w.ndim
    cur = w
    for k in range(n):
        nk = np.asarray(normals[k], dtype=float)
        nk = nk / np.linalg.norm(nk)
        p = np.eye(3) - np.outer(nk, nk)
        cur = np.moveaxis(np.tensordot(p, cur, axes=([1], [k])), 0, k)
    return float(np.sum(w * cur))


def condition_wwwzb(
    t,
    mode: str = "optimized",
    normals=None,
    restarts: int = 50,
    seed: int = 0,
) -> float:
    """Largest per-party plane-restricted sum of squared correlations.

    In ``fixed`` mode the sum is evaluated for the given plane normals
    (default: xy-planes).  In ``optimized`` mode the normals are chosen to
    maximize the sum by coordinate ascent: with all other parties fixed the
    objective is tr(P_k M_k) for a PSD matrix M_k, so party k's optimal
    normal is the eigenvector of M_k with the smallest eigenvalue.  A value
    above 1 is necessary and sufficient for a two-qubit violation and a
    sufficient-condition indicator for three or more parties.
    """
    w = _block(t)
    n = w.ndim
    if mode == "fixed":
        if normals is None:
            normals = [np.array([0.0, 0.0, 1.0])] * n
        return plane_sum(w, normals)
    if mode != "optimized":
        raise DimensionError(f"unknown mode {mode!r}")
    rng = np.random.default_rng(seed)

    def ascend(norms):
        prev = -np.inf
        for _ in range(500):
            for k in range(n):
                cur = w
                for kk in range(n):
                    if kk == k:
                        continue
                    nk = norms[kk]
                    p = np.eye(3) - np.outer(nk, nk)
                    cur = np.moveaxis(
                        np.tensordot(p, cur, axes=([1], [kk])), 0, kk
                    )
                axes = [i for i in range(n) if i != k]
                m = np.tensordot(w, cur, axes=(axes, axes))
                m = (m + m.T) / 2
                evals, evecs = np.linalg.eigh(m)
                norms[k] = evecs[:, 0]
                val = float(evals[1] + evals[2])
            if val - prev < 1e-13:
                break
            prev = val
        return val, norms

    starts = [[np.eye(3)[i].copy() for _ in range(n)] for i in range(3)]
    for _ in range(restarts):
        cand = rng.standard_normal((n, 3))
        cand /= np.linalg.norm(cand, axis=1, keepdims=True)
        starts.append(list(cand))
    best = -np.inf
    for s0 in starts:
        val, _ = ascend([np.array(v, dtype=float) for v in s0])
        best = max(best, val)
    return best


def _top2_sq(m: np.ndarray) -> float:
    s = np.linalg.svd(m, compute_uv=False)
    return float(s[0] ** 2 + s[1] ** 2)


def condition_wzlpzb(t, arity: int, restarts: int = 50, seed: int = 0) -> float:
    """Necessary-and-sufficient violation condition value for the
    many-setting family: a sum of plane-restricted quadratic terms with
    independent first-two-party frames per term, maximized over the
    remaining parties' frame choices.  Values above 1 certify violation.
    """
    w = _block(t)
    n = w.ndim
    if arity not in (3, 4) or n != arity:
        raise DimensionError(f"arity {arity} needs a matching {arity}-party tensor")
    rng = np.random.default_rng(seed)

    if arity == 3:

        def objective(params):
            r = Rotation.from_rotvec(params).as_matrix()
            mu = np.tensordot(w, r[:, 0], axes=([2], [0]))
            mv = np.tensordot(w, r[:, 1], axes=([2], [0]))
            return -(_top2_sq(mu) + _top2_sq(mv))

        dims = 3
    else:
        # peeling parties from the last: party 4 contributes one orthonormal
        # frame (w1, w2); each w direction carries its own party-3 frame
        def objective(params):
            r4 = Rotation.from_rotvec(params[:3]).as_matrix()
            r3a = Rotation.from_rotvec(params[3:6]).as_matrix()
            r3b = Rotation.from_rotvec(params[6:9]).as_matrix()
            pairs = (
                (r3a[:, 0], r4[:, 0]),
                (r3a[:, 1], r4[:, 0]),
                (r3b[:, 0], r4[:, 1]),
                (r3b[:, 1], r4[:, 1]),
            )
            total = 0.0
            for p3, w4 in pairs:
                m = np.tensordot(
                    np.tensordot(w, w4, axes=([3], [0])), p3, axes=([2], [0])
                )
                total += _top2_sq(m)
            return -total

        dims = 9

    best = np.inf
    starts = [np.zeros(dims)]
    for _ in range(restarts):
        starts.append(rng.uniform(-np.pi, np.pi, size=dims))
    for x0 in starts:
        res = minimize(objective, x0, method="Nelder-Mead", options={"xatol": 1e-9, "fatol": 1e-12, "maxiter": 4000})
        best = min(best, res.fun)
    return -best


def _unit_from_angles(ab) -> np.ndarray:
    theta, phi = ab
    return np.array(
        [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)]
    )


def condition_three_setting(
    t, which: str, restarts: int = 50, seed: int = 0
) -> dict:
    """Sufficient-condition sums for the generated three-setting
    inequalities on three qubits.

    ``which`` is ``"ineq1"`` (two parties with two settings, one with
    three) or ``"ineq2"``.  Returns the raw input-frame value, the
    common-basis closed form (per-term rotations absorbed analytically) and
    the value of the common-basis form maximized over per-party frames.
    """
    w = _block(t)
    if w.ndim != 3:
        raise DimensionError("three-setting conditions are for 3 qubits")

    def common_basis(ww):
        if which == "ineq1":
            return float(
                ww[1, 0, 0] ** 2
                + np.sum(ww[0, 0, :] ** 2)
                + np.sum(ww[1, :, 1] ** 2)
            )
        if which == "ineq2":
            return float(ww[0, 0, 0] ** 2 + _top2_sq(ww[1]))
        raise DimensionError(f"unknown condition {which!r}")

    raw = (
        float(w[0, 0, 0] ** 2 + w[1, 0, 0] ** 2 + w[1, 0, 1] ** 2)
        if which == "ineq1"
        else float(w[0, 0, 0] ** 2 + np.sum(w[1, :2, :2] ** 2))
    )
    rng = np.random.default_rng(seed)

    def objective(params):
        rs = [Rotation.from_rotvec(params[3 * k : 3 * k + 3]).as_matrix() for k in range(3)]
        ww = w
        for k, r in enumerate(rs):
            ww = np.moveaxis(np.tensordot(r, ww, axes=([1], [k])), 0, k)
        return -common_basis(ww)

    best = np.inf
    starts = [np.zeros(9)]
    for _ in range(restarts):
        starts.append(rng.uniform(-np.pi, np.pi, size=9))
    for x0 in starts:
        res = minimize(objective, x0, method="Nelder-Mead", options={"xatol": 1e-8, "fatol": 1e-11, "maxiter": 6000})
        best = min(best, res.fun)
    return {"raw": raw, "common_basis": common_basis(w), "optimized": -best}


@dataclass(frozen=True)
class RotInvReport:
    """Violation report for the rotational-invariance Bell condition."""

    mode: str
    sum_sq: float
    t_max: float
    prefactor: float
    ratio: float
    violated: bool


def rotinv_condition(t, mode: str = "planar", restarts: int = 32, seed: int = 0) -> RotInvReport:
    """Condition based on assuming a rotationally invariant correlation
    function: compares the squared-correlation content against the largest
    correlation-function value.

    ``planar`` uses the xy-block and prefactor (pi/4)^N; ``full`` uses the
    whole (1..3) block and (2/3)^N.  ``violated`` iff
    prefactor * sum_sq / t_max > 1.
    """
    w = _block(t)
    n = w.ndim
    if mode == "planar":
        sl = tuple(slice(0, 2) for _ in range(n))
        sum_sq = float(np.sum(w[sl] ** 2))
        prefactor = (np.pi / 4) ** n
        t_max, _ = multilinear_max(w, planar=True, restarts=restarts, seed=seed)
    elif mode == "full":
        sum_sq = float(np.sum(w**2))
        prefactor = (2.0 / 3.0) ** n
        t_max, _ = multilinear_max(w, planar=False, restarts=restarts, seed=seed)
    else:
        raise DimensionError(f"unknown mode {mode!r}")
    if t_max <= 0:
        return RotInvReport(mode, sum_sq, t_max, prefactor, 0.0, False)
    ratio = prefactor * sum_sq / t_max
    return RotInvReport(mode, sum_sq, t_max, prefactor, ratio, bool(ratio > 1))


def rotinv_critical_visibility(n: int, mode: str = "planar", tol: float = 1e-4) -> float:
    """Noise threshold at which the rotational-invariance condition starts
    to flag the N-qubit GHZ state, found by bisection on the admixture."""
    from bellforge.qstate import ghz, noisy

    pure = correlation_tensor(ghz(n).density()).block()

    def ratio(v):
        rep = rotinv_condition(v * pure, mode=mode, restarts=16, seed=1)
        return rep.ratio

    lo, hi = 1e-6, 1.0
    if ratio(hi) <= 1:
        return np.inf
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if ratio(mid) > 1:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def ghz4_modified_tensor_max(alpha: float, restarts: int = 32, seed: int = 0) -> float:
    """Largest single entry reachable by local rotations of the
    modulus-modified xz-block of a four-qubit generalized GHZ state.

    Pipeline: keep only x/z indices of the correlation block, rotate the
    first three parties by pi/4 about the y-axis, replace entries by their
    moduli, then maximize the multilinear form over per-party unit vectors.
    """
    w = correlation_tensor(generalized_ghz(4, alpha).density()).block()
    mask = np.zeros_like(w)
    idx = [0, 2]
    for a in idx:
        for b in idx:
            for c in idx:
                for d in idx:
                    mask[a, b, c, d] = 1.0
    w = w * mask
    th = np.pi / 4
    r = np.array(
        [[np.cos(th), 0.0, np.sin(th)], [0.0, 1.0, 0.0], [-np.sin(th), 0.0, np.cos(th)]]
    )
    for k in range(3):
        w = np.moveaxis(np.tensordot(r, w, axes=([1], [k])), 0, k)
    w = np.abs(w)
    val, _ = multilinear_max(w, planar=False, restarts=restarts, seed=seed)
    return float(val)
