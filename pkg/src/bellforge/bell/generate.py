"""Generation of tight correlation Bell inequalities for two and three
parties with up to three settings each.

A correlation inequality sum g_ij(k) E_ij(k) <= 1 defines a polytope face
iff the multilinear form S(s) = sum g * s^1_i s^2_j (s^3_k) takes only the
values +-1 on sign vectors ("sign function"), with quarter-integer
coefficients satisfying sum g^2 = 1 and |sum g| = 1.  Sign functions are
assembled from their first-order differences with respect to one party's
signs: each difference takes values in {-1, 0, 1}, and a composition is
valid iff at every assignment of the remaining signs exactly one
difference is nonzero.  Everything is enumerated exhaustively in scaled
integer arithmetic (denominator 4), so acceptance is exact.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from bellforge.errors import DomainError
from bellforge.kernels import canonical_form, sign_matrix
from bellforge.bell.faces import exact_rank
from bellforge.bell.functionals import BellFunctional, Scenario
from bellforge.bell.lhv import strategy_value_table

_GROUP_CACHE: dict = {}


def projection_vectors() -> list[np.ndarray]:
    """Scaled coefficient 3-vectors v with s.v in {0, +-1} for every sign
    vector s: the sign-permutations of (1,0,0) and (1/2,1/2,0), plus zero
    (all scaled by 4)."""
    out = [np.zeros(3, dtype=np.int64)]
    for i in range(3):
        for s in (4, -4):
            v = np.zeros(3, dtype=np.int64)
            v[i] = s
            out.append(v)
    for i, j in itertools.combinations(range(3), 2):
        for si in (2, -2):
            for sj in (2, -2):
                v = np.zeros(3, dtype=np.int64)
                v[i] = si
                v[j] = sj
                out.append(v)
    return out


def enumerate_first_order_deltas() -> list[np.ndarray]:
    """All 3x3 quarter-integer (scaled x4) matrices M whose bilinear form
    s^T M t / 4 takes values in {-1, 0, 1} on all sign vectors.

    M is determined by its images v_i = M t_i on the four sign vectors
    t with leading +, each of which must be a valid projection vector;
    consistency forces v4 = v2 + v3 - v1.
    """
    vecs = projection_vectors()
    vset = {tuple(v) for v in vecs}
    seen = set()
    out = []
    for v1, v2, v3 in itertools.product(vecs, repeat=3):
        v4 = v2 + v3 - v1
        if tuple(v4) not in vset:
            continue
        m0 = (v2 + v3) // 2
        m1 = (v1 - v3) // 2
        m2 = (v1 - v2) // 2
        m = np.stack([m0, m1, m2], axis=1)
        key = m.tobytes()
        if key not in seen:
            seen.add(key)
            out.append(m)
    return out


def _pair_basis() -> np.ndarray:
    """(64, 9) products s_j t_k over all sign-vector pairs (s, t)."""
    sp = sign_matrix(3)
    return np.einsum("aj,bk->abjk", sp, sp).reshape(64, 9)


def _triple_basis() -> np.ndarray:
    """(512, 27) products s_i t_j u_k over all sign-vector triples."""
    sp = sign_matrix(3)
    return np.einsum("ai,bj,ck->abcijk", sp, sp, sp).reshape(512, 27)


def _local_actions():
    """48 (perm, signs) pairs: setting permutations x per-setting flips."""
    acts = []
    for p in itertools.permutations(range(3)):
        for signs in itertools.product((1, -1), repeat=3):
            acts.append((np.array(p), np.array(signs, dtype=np.int8)))
    return acts


def symmetry_tables(n_parties: int):
    """Index/sign tables of the local symmetry group acting on flattened
    coefficient tensors: party permutations x per-party setting
    permutations x per-party sign flips (global sign is contained in the
    flips).  Returns (perms, signs) with shapes (G, 3^n)."""
    if n_parties in _GROUP_CACHE:
        return _GROUP_CACHE[n_parties]
    n = n_parties
    base = np.arange(3**n).reshape((3,) * n)
    acts = _local_actions()
    perm_rows = []
    for party_perm in itertools.permutations(range(n)):
        t = np.transpose(base, party_perm)
        for combo in itertools.product(range(len(acts)), repeat=n):
            cur = t
            for axis, ai in enumerate(combo):
                cur = np.take(cur, acts[ai][0], axis=axis)
            perm_rows.append(cur.ravel())
    perms = np.array(perm_rows, dtype=np.int16)
    sign_rows = []
    for combo in itertools.product(range(len(acts)), repeat=n):
        s = np.array([1], dtype=np.int16)
        for ai in combo:
            s = np.multiply.outer(s, acts[ai][1].astype(np.int16)).ravel()
        sign_rows.append(s)
    signs_unique = np.array(sign_rows, dtype=np.int8)
    # perm rows iterate (party_perm, local combo); the signs apply in target
    # coordinates and do not depend on the party permutation
    n_perm_groups = len(list(itertools.permutations(range(n))))
    signs = np.tile(signs_unique, (n_perm_groups, 1))
    _GROUP_CACHE[n_parties] = (perms, signs)
    return perms, signs


def canonical_key(coeffs: np.ndarray) -> bytes:
    """Canonical representative (as bytes) of a quarter-integer coefficient
    tensor under the local symmetry group."""
    scaled = np.round(np.asarray(coeffs) * 4).astype(np.int8)
    n = scaled.ndim
    perms, signs = symmetry_tables(n)
    return canonical_form(scaled.ravel(), perms, signs).tobytes()


@dataclass
class GeneratedClass:
    functional: BellFunctional
    canonical: bytes
    multiplicity: int
    n_saturating: int
    rank: int


def _compose_three_party() -> list[np.ndarray]:
    """All valid scaled coefficient tensors for 3 parties x 3 settings."""
    deltas = enumerate_first_order_deltas()
    basis = _pair_basis()
    flat = np.array([m.ravel() for m in deltas], dtype=np.int64)
    vals = flat @ basis.T  # (n_deltas, 64), entries in {-4, 0, 4}
    if not np.isin(vals, (-4, 0, 4)).all():
        raise AssertionError("delta enumeration produced an invalid matrix")
    masks = np.zeros(len(deltas), dtype=np.uint64)
    for i, row in enumerate(vals != 0):
        masks[i] = np.uint64(sum(1 << j for j, b in enumerate(row) if b))
    full = np.uint64((1 << 64) - 1)
    buckets: dict = {}
    for i, mk in enumerate(masks):
        buckets.setdefault(int(mk), []).append(i)
    mask_list = sorted(buckets)
    out = []
    seen = set()
    for ia, m0 in enumerate(mask_list):
        for m1 in mask_list[ia:]:
            if m0 & m1:
                continue
            m2 = int(full ^ np.uint64(m0) ^ np.uint64(m1))
            if m2 < m1 or m2 not in buckets:
                continue
            if m2 & (m0 | m1):
                continue
            for i0 in buckets[m0]:
                for i1 in buckets[m1]:
                    for i2 in buckets[m2]:
                        g = np.stack(
                            [deltas[i0], deltas[i1], deltas[i2]], axis=0
                        )
                        if abs(int(g.sum())) != 4:
                            continue
                        if np.count_nonzero(g) <= 1:
                            continue
                        key = g.tobytes()
                        if key not in seen:
                            seen.add(key)
                            out.append(g)
    return out


def _compose_two_party() -> list[np.ndarray]:
    vecs = projection_vectors()
    sp = sign_matrix(3)
    vals = np.array([sp @ v for v in vecs])  # (19, 8)
    out = []
    seen = set()
    nz = np.abs(vals)
    for i0, i1, i2 in itertools.product(range(len(vecs)), repeat=3):
        if not np.all(nz[i0] + nz[i1] + nz[i2] == 4):
            continue
        g = np.stack([vecs[i0], vecs[i1], vecs[i2]], axis=0)
        if abs(int(g.sum())) != 4:
            continue
        if np.count_nonzero(g) <= 1:
            continue
        key = g.tobytes()
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out


def _settings_signature(scaled: np.ndarray) -> str:
    used = []
    for axis in range(scaled.ndim):
        other = tuple(a for a in range(scaled.ndim) if a != axis)
        used.append(int(np.sum(np.any(scaled != 0, axis=other))))
    return "".join(str(u) for u in sorted(used))


def generate_tight_functionals(n_parties: int, verify: bool = True):
    """Deduplicated catalog of tight correlation inequalities.

    Enumerates all valid sign functions by composing first-order deltas,
    rejects trivial single-term candidates, dedupes up to party
    permutations, setting permutations and sign flips, and (with
    ``verify``) certifies each class: S(s) in {+-1} exhaustively,
    brute-force classical bound exactly 1, and full affine rank of the
    saturating deterministic strategies.
    """
    if n_parties == 3:
        raw = _compose_three_party()
        checker = _triple_basis()
        full_rank = 27
    elif n_parties == 2:
        raw = _compose_two_party()
        checker = _pair_basis()
        full_rank = 9
    else:
        raise DomainError("generation supported for 2 or 3 parties")
    classes: dict[bytes, GeneratedClass] = {}
    sp = sign_matrix(3)
    for g in raw:
        key = canonical_key(g / 4.0)
        if key in classes:
            classes[key].multiplicity += 1
            continue
        canon = np.frombuffer(key, dtype=np.int8).astype(np.int64)
        gc = canon.reshape((3,) * n_parties)
        func = BellFunctional(
            Scenario(n_parties, (3,) * n_parties), gc / 4.0, None,
            name=None,
        )
        svals = (checker @ canon) // 4
        if verify and not np.isin(svals, (-1, 1)).all():
            raise AssertionError("accepted candidate fails sign-function check")
        table = strategy_value_table(gc)
        bound = int(np.abs(table).max())
        if verify and bound != 4:
            raise AssertionError(f"brute-force bound {bound/4} != 1")
        func.lhv_bound = bound / 4.0
        sat = np.argwhere(table == 4)
        rows = []
        for strat in sat:
            vec = sp[strat[0]]
            for r in strat[1:]:
                vec = np.kron(vec, sp[r])
            rows.append(vec)
        rank = exact_rank(rows) if verify else -1
        classes[key] = GeneratedClass(func, key, 1, len(rows), rank)
    ordered = sorted(classes.values(), key=lambda c: c.canonical, reverse=True)
    sig_counts: dict[str, int] = {}
    for cl in ordered:
        scaled = np.round(cl.functional.coeffs * 4).astype(int)
        sig = _settings_signature(scaled)
        sig_counts[sig] = sig_counts.get(sig, 0) + 1
        cl.functional.name = f"tight{n_parties}q_s{sig}_{sig_counts[sig]:02d}"
        cl.functional.meta.update(
            multiplicity=cl.multiplicity,
            n_saturating=cl.n_saturating,
            saturating_rank=cl.rank,
            full_rank=full_rank,
        )
    return ordered
