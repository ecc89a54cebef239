"""Exact hyperplane-membership tests in the two-qubit, three-setting
correlation polytope.

A face candidate is specified by 9 linearly independent vertices; a vector
x lies on their hyperplane iff the bordered 10x10 determinant
det[[1, x], [1, v1], ..., [1, v9]] vanishes, and the determinant's sign
tells which side x falls on.  All arithmetic is exact (integer Bareiss
elimination), since the classification facts are integer statements.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from bellforge.errors import DimensionError


def bareiss_determinant(mat) -> int:
    """Exact determinant of an integer matrix via fraction-free elimination."""
    a = [[int(x) for x in row] for row in mat]
    n = len(a)
    if any(len(row) != n for row in a):
        raise DimensionError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def product_vertex(a: int, b: int, c: int, d: int) -> np.ndarray:
    """Flattened correlation vector (1,a,b) x (1,c,d) with a,b,c,d = +-1."""
    return np.kron(np.array([1, a, b]), np.array([1, c, d]))


@dataclass(frozen=True)
class FaceTest:
    determinant: int
    on_hyperplane: bool
    side: int
    degenerate: bool
    basis_minor: int


def is_face_2q3s(vertices, candidate) -> FaceTest:
    """Signed bordered determinant of a candidate against 9 basis vertices.

    ``determinant`` is D[x, v1..v9]; zero means the candidate lies on the
    hyperplane spanned by the basis.  A zero 9x9 minor marks a degenerate
    (linearly dependent) basis, which cannot define a face.
    """
    vs = [np.asarray(v, dtype=int) for v in vertices]
    x = np.asarray(candidate, dtype=int)
    if len(vs) != 9 or any(v.shape != (9,) for v in vs) or x.shape != (9,):
        raise DimensionError("need nine 9-vectors plus one candidate")
    minor = bareiss_determinant([list(v) for v in vs])
    rows = [[1] + list(x)] + [[1] + list(v) for v in vs]
    det = bareiss_determinant(rows)
    return FaceTest(
        determinant=det,
        on_hyperplane=(det == 0 and minor != 0),
        side=(0 if det == 0 else (1 if det > 0 else -1)),
        degenerate=(minor == 0),
        basis_minor=minor,
    )


def exact_rank(rows) -> int:
    """Rank over the rationals of an integer matrix (Gauss over Fractions)."""
    m = [[Fraction(int(x)) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank
