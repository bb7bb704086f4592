from __future__ import annotations

import numpy as np
import pytest

from ppd_recognizer.errors import DimensionMismatchError, FieldMismatchError, SingularMatrixError
from ppd_recognizer.finite_field import field_from_order, poly_coeffs, poly_from_coeffs
from ppd_recognizer.matrices import (
    MatrixQ,
    batched_charpoly,
    companion,
    identity,
    mat_charpoly,
    mat_det,
    mat_inverse,
    mat_is_identity,
    mat_mul,
    mat_nullspace,
    mat_poly_eval,
    mat_rank,
    matrix_from_rows,
    parse_matrix,
)


def _random_invertible(field, d, rng):
    while True:
        candidate = matrix_from_rows(field, rng.integers(0, field.q, size=(d, d)))
        if int(mat_det(candidate)) != 0:
            return candidate


def test_identity_is_neutral():
    field = field_from_order(4)
    rng = np.random.default_rng(0)
    a = matrix_from_rows(field, rng.integers(0, 4, size=(3, 3)))
    assert mat_mul(identity(field, 3), a) == a


def test_small_products(gf2, gf3):
    swap = matrix_from_rows(gf2, [[0, 1], [1, 0]])
    assert mat_is_identity(mat_mul(swap, swap))
    product = mat_mul(matrix_from_rows(gf3, [[1, 1], [0, 1]]), matrix_from_rows(gf3, [[1, 0], [1, 1]]))
    assert product.rows() == [[2, 1], [1, 1]]


def test_mismatches(gf2, gf3):
    with pytest.raises(FieldMismatchError):
        mat_mul(identity(gf2, 2), identity(gf3, 2))
    with pytest.raises(DimensionMismatchError):
        mat_mul(identity(gf2, 2), identity(gf2, 3))


def test_inverse(gf3):
    assert mat_inverse(identity(gf3, 3)) == identity(gf3, 3)
    assert mat_inverse(matrix_from_rows(gf3, [[1, 1], [0, 1]])).rows() == [[1, 2], [0, 1]]
    with pytest.raises(SingularMatrixError):
        mat_inverse(matrix_from_rows(gf3, [[0, 0], [0, 0]]))


def test_charpoly_examples(gf2, gf3):
    assert poly_coeffs(mat_charpoly(identity(gf3, 2))) == [1, 1, 1]
    assert poly_coeffs(mat_charpoly(matrix_from_rows(gf2, [[0, 1], [1, 1]]))) == [1, 1, 1]
    f = poly_from_coeffs(gf3, [2, 0, 1, 2, 1])
    assert mat_charpoly(companion(gf3, f)) == f


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_charpoly_is_conjugation_invariant(q):
    field = field_from_order(q)
    rng = np.random.default_rng(q)
    for d in range(1, 7):
        a = matrix_from_rows(field, rng.integers(0, q, size=(d, d)))
        p = _random_invertible(field, d, rng)
        conjugated = mat_mul(mat_mul(mat_inverse(p), a), p)
        assert mat_charpoly(conjugated) == mat_charpoly(a)


@pytest.mark.parametrize("q", [2, 4, 7])
def test_cayley_hamilton(q):
    field = field_from_order(q)
    rng = np.random.default_rng(100 + q)
    for d in range(1, 6):
        a = matrix_from_rows(field, rng.integers(0, q, size=(d, d)))
        image = mat_poly_eval(mat_charpoly(a), a)
        assert not np.any(image.raw)


def test_det_matches_constant_term():
    field = field_from_order(5)
    rng = np.random.default_rng(3)
    for d in range(1, 6):
        a = matrix_from_rows(field, rng.integers(0, 5, size=(d, d)))
        constant = mat_charpoly(a).coeffs[-1]
        sign = field.gf(1) if d % 2 == 0 else -field.gf(1)
        assert mat_det(a) == sign * constant


def test_nullspace(gf2):
    assert mat_nullspace(identity(gf2, 3)).shape[0] == 0
    zero = matrix_from_rows(gf2, [[0] * 3] * 3)
    assert mat_nullspace(zero).shape[0] == 3
    kernel = mat_nullspace(matrix_from_rows(gf2, [[1, 1], [1, 1]]))
    assert kernel.view(np.ndarray).tolist() == [[1, 1]]


def test_rank_plus_nullity():
    field = field_from_order(3)
    rng = np.random.default_rng(11)
    for _ in range(20):
        d = int(rng.integers(1, 6))
        raw = rng.integers(0, 3, size=(d, d))
        raw[0] = raw[-1]
        a = matrix_from_rows(field, raw)
        assert mat_rank(a) + mat_nullspace(a).shape[0] == d


def test_batched_charpoly_matches_single():
    field = field_from_order(4)
    rng = np.random.default_rng(5)
    matrices = [matrix_from_rows(field, rng.integers(0, 4, size=(4, 4))) for _ in range(12)]
    stack = field.gf(np.stack([m.raw for m in matrices]))
    rows = batched_charpoly(field, stack).view(np.ndarray).astype(int).tolist()
    assert rows == [poly_coeffs(mat_charpoly(m)) for m in matrices]


def test_parse_matrix(gf2, companion_t3_t_1):
    assert parse_matrix(gf2, "0 1 0;0 0 1;1 1 0") == companion_t3_t_1
    with pytest.raises(DimensionMismatchError):
        parse_matrix(gf2, "0 1;1")


def test_matrices_are_immutable_and_hashable(gf2, companion_t3_t_1):
    assert isinstance(companion_t3_t_1, MatrixQ)
    assert hash(companion_t3_t_1) == hash(parse_matrix(gf2, "0 1 0;0 0 1;1 1 0"))
    with pytest.raises(ValueError):
        companion_t3_t_1.entries[0, 0] = 1
