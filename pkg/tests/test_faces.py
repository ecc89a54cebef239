import itertools

import numpy as np
import pytest

from bellforge.bell import bareiss_determinant, exact_rank, is_face_2q3s, product_vertex
from bellforge.errors import DimensionError


def _face_family():
    """The 16 product vertices (1,a,b)x(1,c,d); nine of them with
    (a,b) != (1,1) and (c,d) != (1,1) form a complete hyperplane basis."""
    basis = []
    others = []
    for a, b, c, d in itertools.product((1, -1), repeat=4):
        v = product_vertex(a, b, c, d)
        if (a, b) != (1, 1) and (c, d) != (1, 1):
            basis.append(v)
        else:
            others.append(v)
    return basis, others


def test_bareiss_matches_numpy(rng):
    for _ in range(10):
        m = rng.integers(-5, 6, size=(6, 6))
        assert bareiss_determinant(m) == round(float(np.linalg.det(m)))


def test_face_contains_all_sixteen_vertices():
    basis, others = _face_family()
    assert len(basis) == 9 and len(others) == 7
    for v in others:
        res = is_face_2q3s(basis, v)
        assert not res.degenerate
        assert res.on_hyperplane


def test_negated_vertex_off_hyperplane():
    basis, _ = _face_family()
    res = is_face_2q3s(basis, -basis[0])
    assert res.determinant != 0
    # D[-v1, v1..v9] = 2 d[v1..v9]
    assert res.determinant == 2 * res.basis_minor


def test_duplicate_vertex_on_hyperplane():
    basis, _ = _face_family()
    res = is_face_2q3s(basis, basis[0])
    assert res.determinant == 0
    assert res.on_hyperplane


def test_degenerate_basis_reported():
    basis, _ = _face_family()
    bad = list(basis)
    bad[8] = basis[0]
    res = is_face_2q3s(bad, basis[1])
    assert res.degenerate
    assert res.basis_minor == 0


def test_all_other_vertices_same_side():
    """Vertices outside the face all fall on one side of its hyperplane."""
    basis, others = _face_family()
    face = set(map(tuple, basis + others))
    sides = set()
    for a, b, c, d in itertools.product((1, -1), repeat=4):
        for sign in (1, -1):
            v = sign * product_vertex(a, b, c, d)
            if tuple(v) in face:
                continue
            res = is_face_2q3s(basis, v)
            assert res.determinant != 0
            sides.add(res.side)
    assert len(sides) == 1


def test_input_validation():
    basis, _ = _face_family()
    with pytest.raises(DimensionError):
        is_face_2q3s(basis[:5], basis[0])


def test_exact_rank():
    assert exact_rank([[1, 0], [0, 1], [1, 1]]) == 2
    assert exact_rank([[2, 4], [1, 2]]) == 1
    assert exact_rank([]) == 0
