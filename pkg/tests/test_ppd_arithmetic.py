import math

import pytest
from sympy import factorint

from ppd_recognizer.config import LimitsConfig
from ppd_recognizer.errors import InconsistentFieldError, MagnitudeOverflowError
from ppd_recognizer.ppd_arithmetic import (
    factorize,
    has_ppd,
    is_primitive_divisor,
    mu_distinct_primes,
    phi,
    phi_large_of,
    phi_triple,
    phi_triple_from_factorization,
    ppd_list,
    zsigmondy_exception,
)

GRID = [(b, e) for b in range(2, 17) for e in range(1, 13)]
FULL_GRID = [(b, e) for b in range(2, 17) for e in range(13, 25)]


def brute_force_ppds(b, e):
    found = {}
    for r, v in factorint(b**e - 1).items():
        if all(pow(b, i, r) != 1 for i in range(1, e)):
            found[int(r)] = int(v)
    return found


def closed_form_exception(b, e):
    return (b, e) == (2, 6) or (e == 1 and b == 2) or (e == 2 and (b + 1) & b == 0)


@pytest.mark.parametrize(
    "n, expected",
    [(1, {}), (63, {3: 2, 7: 1}), (2400, {2: 5, 3: 1, 5: 2}), (97, {97: 1})],
)
def test_factorize_examples(n, expected):
    assert factorize(n) == expected


def test_factorize_rejects_nonpositive_and_oversized():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(MagnitudeOverflowError):
        factorize(1 << 80, LimitsConfig(max_power_bits=64))


@pytest.mark.parametrize(
    "b, e, expected",
    [(2, 6, {}), (3, 2, {}), (2, 4, {5: 1}), (2, 3, {7: 1}), (8, 2, {3: 2}), (7, 4, {5: 2}), (2, 12, {13: 1})],
)
def test_ppd_list_examples(b, e, expected):
    assert ppd_list(b, e).primes == expected


def test_ppd_list_overflow():
    with pytest.raises(MagnitudeOverflowError):
        ppd_list(2, 100, LimitsConfig(max_power_bits=64))


@pytest.mark.parametrize("b, e", GRID)
def test_ppd_list_matches_brute_force(b, e):
    ppds = ppd_list(b, e)
    assert ppds.primes == brute_force_ppds(b, e)
    for r in ppds.primes:
        assert r % e == 1
        assert is_primitive_divisor(r, b, e)


@pytest.mark.slow
@pytest.mark.parametrize("b, e", FULL_GRID)
def test_ppd_list_matches_brute_force_large_exponents(b, e):
    ppds = ppd_list(b, e)
    assert ppds.primes == brute_force_ppds(b, e)
    assert all(r % e == 1 for r in ppds.primes)


@pytest.mark.parametrize("b, e, expected", [(2, 6, False), (7, 2, False), (2, 5, True), (2, 1, False), (3, 1, True)])
def test_has_ppd_examples(b, e, expected):
    assert has_ppd(b, e) is expected


@pytest.mark.parametrize("b, e", GRID + FULL_GRID)
def test_zsigmondy_closed_form(b, e):
    assert zsigmondy_exception(b, e) == closed_form_exception(b, e)
    assert has_ppd(b, e) is not closed_form_exception(b, e)


@pytest.mark.parametrize("b, e", GRID)
def test_has_ppd_agrees_with_ppd_list(b, e):
    assert has_ppd(b, e) == bool(ppd_list(b, e))


@pytest.mark.parametrize("b, e", GRID)
def test_gcd_cascade_matches_factorization(b, e):
    assert phi(e, b) == ppd_list(b, e).product()
    assert (b**e - 1) % phi(e, b) == 0


@pytest.mark.parametrize(
    "e, q, p, a, expected",
    [
        (3, 2, 2, 1, (7, 7, 7)),
        (3, 4, 2, 2, (7, 7, 1)),
        (2, 8, 2, 3, (9, 3, 1)),
        (4, 2, 2, 1, (5, 1, 5)),
        (4, 7, 7, 1, (25, 5, 25)),
        (12, 2, 2, 1, (13, 1, 13)),
        (6, 2, 2, 1, (1, 1, 1)),
    ],
)
def test_phi_triple_examples(e, q, p, a, expected):
    triple = phi_triple(e, q, p, a)
    assert (triple.phi, triple.phi_large, triple.phi_basic) == expected


def test_phi_triple_inconsistent_field():
    with pytest.raises(InconsistentFieldError):
        phi_triple(3, 6, 2, 2)


FIELDS = [(2, 2, 1), (3, 3, 1), (4, 2, 2), (5, 5, 1), (7, 7, 1), (8, 2, 3), (9, 3, 2), (11, 11, 1), (16, 2, 4), (25, 5, 2)]


@pytest.mark.parametrize("q, p, a", FIELDS)
@pytest.mark.parametrize("e", range(1, 13))
def test_phi_triple_matches_factorization(e, q, p, a):
    check_triple(e, q, p, a)


@pytest.mark.slow
@pytest.mark.parametrize("q, p, a", FIELDS)
@pytest.mark.parametrize("e", range(13, 21))
def test_phi_triple_matches_factorization_large_exponents(e, q, p, a):
    check_triple(e, q, p, a)


def check_triple(e, q, p, a):
    triple = phi_triple(e, q, p, a)
    assert triple == phi_triple_from_factorization(e, q, p, a)
    assert (q**e - 1) % triple.phi == 0
    assert triple.phi % triple.phi_large == 0
    assert triple.phi % triple.phi_basic == 0
    assert (triple.phi == 1) == (not ppd_list(q, e))


@pytest.mark.parametrize("q, p, a, e", [(4, 2, 2, 5), (7, 7, 1, 4), (9, 3, 2, 4), (2, 2, 1, 10)])
def test_decompose_matches_definitions(q, p, a, e):
    triple = phi_triple(e, q, p, a)
    parts = triple.decompose()
    assert math.prod(r**v for r, v in parts["phi"].items()) == triple.phi
    assert math.prod(r**v for r, v in parts["phi_large"].items()) == triple.phi_large
    assert math.prod(r**v for r, v in parts["phi_basic"].items()) == triple.phi_basic
    for r, v in parts["phi_basic"].items():
        assert parts["phi"][r] == v


def test_phi_large_of_removes_one_factor():
    assert phi_large_of(4, 25) == 5
    assert phi_large_of(4, 5) == 1
    assert phi_large_of(3, 7) == 7


@pytest.mark.parametrize("d, expected", [(1, 0), (12, 2), (30, 3), (64, 1)])
def test_mu_distinct_primes(d, expected):
    assert mu_distinct_primes(d) == expected
