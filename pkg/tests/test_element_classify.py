import time

import galois
import pytest

from ppd_recognizer.classical_groups import Family, GroupCase, Level, standard_generators
from ppd_recognizer.errors import InvalidCaseError, SingularInputError
from ppd_recognizer.element_classify import allowed_e, classify_element
from ppd_recognizer.finite_field import field_make, poly_from_coeffs
from ppd_recognizer.matrices import block_diagonal, companion, identity, mat_power, matrix_from_rows
from ppd_recognizer.oracle import classify_by_order, element_order
from ppd_recognizer.random_elements import sampler_init, sampler_next


def order_25_minimal_poly(field):
    big = galois.GF(7**4)
    beta = big.primitive_element ** ((7**4 - 1) // 25)
    minimal = beta.minimal_poly()
    return poly_from_coeffs(field, [int(c) for c in minimal.coeffs[::-1]])


@pytest.mark.parametrize("d", [2, 3, 5])
def test_identity_is_not_ppd(gf2, d):
    assert classify_element(identity(gf2, d)) is None


def test_companion_of_t3_t_1(companion_t3_t_1):
    witness = classify_element(companion_t3_t_1)
    assert witness is not None
    assert (witness.e, witness.is_large, witness.is_basic) == (3, True, True)
    assert witness.describe() == "e=3 ppd=true large=true basic=true factor=1 1 0 1"


def test_ninth_cyclotomic_is_not_ppd(gf2):
    g = companion(gf2, poly_from_coeffs(gf2, [1, 0, 0, 1, 0, 0, 1]))
    assert element_order(g) == 9
    assert classify_element(g) is None


def test_large_requires_square_of_e_plus_one():
    field = field_make(7)
    f = order_25_minimal_poly(field)
    assert f.degree == 4
    g = companion(field, f)
    assert element_order(g) == 25
    witness = classify_element(g)
    assert witness is not None
    assert (witness.e, witness.is_large) == (4, True)

    fifth = mat_power(g, 5)
    assert element_order(fifth) == 5
    witness = classify_element(fifth)
    assert witness is not None
    assert (witness.e, witness.is_large) == (4, False)


def test_singular_input(gf2):
    with pytest.raises(SingularInputError):
        classify_element(matrix_from_rows(gf2, [[1, 0], [0, 0]]))


@pytest.mark.parametrize(
    "rows",
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[1, 1], [0, 1]],
        [[0, 1], [1, 1]],
    ],
)
def test_witness_independent_of_complement_block(gf2, companion_t3_t_1, rows):
    h = matrix_from_rows(gf2, rows)
    witness = classify_element(block_diagonal(gf2, [companion_t3_t_1, h]))
    assert witness is not None
    assert witness.e == 3
    assert witness.factor == classify_element(companion_t3_t_1).factor
    assert (witness.is_large, witness.is_basic) == (True, True)


@pytest.mark.parametrize("group_name", ["gl3_2", "gl2_4", "gl2_5"])
def test_agrees_with_order_oracle(request, group_name):
    group = request.getfixturevalue(group_name)
    for g in group.matrices():
        witness = classify_element(g)
        by_order = classify_by_order(g)
        if witness is None:
            assert by_order is None
            continue
        assert by_order is not None
        assert (witness.e, witness.is_large, witness.is_basic) == (by_order.e, by_order.is_large, by_order.is_basic)
        assert witness.factor.degree == witness.e


def test_dimension_200_trinomial_block(gf2):
    # t^127 + t + 1 is irreducible and 2^127 - 1 is prime
    trinomial = poly_from_coeffs(gf2, [1, 1] + [0] * 125 + [1])
    g = block_diagonal(gf2, [companion(gf2, trinomial), identity(gf2, 73)])
    started = time.perf_counter()
    witness = classify_element(g)
    elapsed = time.perf_counter() - started
    assert witness is not None
    assert (witness.e, witness.is_large, witness.is_basic) == (127, True, True)
    assert elapsed < 2.0


@pytest.mark.slow
def test_sampled_gl_4_3_agrees_with_order_oracle(gf3):
    state = sampler_init(standard_generators(GroupCase(Family.LINEAR, 4, gf3), Level.DELTA), 11)
    for _ in range(2000):
        g, state = sampler_next(state)
        witness = classify_element(g)
        by_order = classify_by_order(g)
        if witness is None:
            assert by_order is None
            continue
        assert by_order is not None
        assert (witness.e, witness.is_large, witness.is_basic) == (by_order.e, by_order.is_large, by_order.is_basic)


@pytest.mark.parametrize(
    "family, d, q, expected",
    [
        ("linear", 5, 2, (3, 4, 5)),
        ("symplectic", 6, 2, (4,)),
        ("orthogonal-plus", 8, 3, (6,)),
        ("orthogonal-minus", 8, 3, (6, 8)),
        ("linear", 8, 2, (5, 7, 8)),
        ("symplectic", 10, 3, (6, 8, 10)),
        ("unitary", 9, 4, (5, 7, 9)),
        ("unitary", 4, 4, (3,)),
        ("orthogonal-circle", 5, 3, (4,)),
    ],
)
def test_allowed_e(family, d, q, expected):
    assert allowed_e(family, d, q) == expected


@pytest.mark.parametrize(
    "family, d, q",
    [("symplectic", 5, 3), ("orthogonal-plus", 7, 3), ("orthogonal-circle", 4, 3), ("unitary", 3, 2), ("linear", 1, 2)],
)
def test_allowed_e_rejects_invalid_cases(family, d, q):
    with pytest.raises(InvalidCaseError):
        allowed_e(family, d, q)


def test_allowed_e_accepts_family_enum():
    assert allowed_e(Family.LINEAR, 3, 2) == (2, 3)
