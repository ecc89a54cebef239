"""NumPy implementations of the hot kernels.

These are the fallback used when the compiled extension is unavailable;
semantics are identical to ``bellforge.kernels._fast``.
"""

import numpy as np


def sign_matrix(m: int) -> np.ndarray:
    """All 2^m sign vectors of length m as rows, entries +-1 (int64).

    Row r assigns setting j the sign 1 - 2*((r >> j) & 1).
    """
    r = np.arange(2**m)[:, None]
    j = np.arange(m)[None, :]
    return (1 - 2 * ((r >> j) & 1)).astype(np.int64)


def lhv_max_int(coeffs: np.ndarray) -> int:
    """Exact max of |sum coeffs * prod outcomes| over deterministic
    strategies, for an integer coefficient tensor (one axis per party).

    Evaluates the multilinear form on every strategy by contracting one
    party at a time; memory is kept bounded by chunking over the first
    party's strategies.
    """
    coeffs = np.asarray(coeffs, dtype=np.int64)
    settings = coeffs.shape
    mats = [sign_matrix(m) for m in settings]
    total = int(np.prod([2**m for m in settings]))
    chunk_rows = max(1, min(2**settings[0], (1 << 22) // max(1, total >> settings[0])))
    best = 0
    m0 = mats[0]
    for lo in range(0, m0.shape[0], chunk_rows):
        cur = np.tensordot(coeffs, m0[lo : lo + chunk_rows], axes=([0], [1]))
        # cur axes: (remaining parties..., strategies of party 0)
        for mk in mats[1:]:
            cur = np.tensordot(cur, mk, axes=([0], [1]))
        best = max(best, int(np.abs(cur).max()))
    return best


def canonical_form(g: np.ndarray, perms: np.ndarray, signs: np.ndarray) -> np.ndarray:
    """Lexicographically maximal image of a flattened coefficient vector
    under a symmetry group given as index/sign tables.

    ``perms`` is (G, n) integer indices, ``signs`` (G, n) entries +-1; image
    row i is ``signs[i] * g[perms[i]]``.  Works column-by-column, keeping
    only rows still attaining the running maximum, so typically only a
    small fraction of the group is fully expanded.
    """
    g = np.asarray(g, dtype=np.int16)
    first = signs[:, 0].astype(np.int16) * g[perms[:, 0]]
    best = first.max()
    rows = np.nonzero(first == best)[0]
    out = np.empty(g.size, dtype=np.int16)
    out[0] = best
    for col in range(1, g.size):
        vals = signs[rows, col].astype(np.int16) * g[perms[rows, col]]
        m = vals.max()
        out[col] = m
        if rows.size > 1:
            rows = rows[vals == m]
    return out.astype(np.int8)
