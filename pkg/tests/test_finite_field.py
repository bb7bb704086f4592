from __future__ import annotations

import galois
import numpy as np
import pytest

from ppd_recognizer.config import LimitsConfig
from ppd_recognizer.errors import MagnitudeOverflowError, NotPrimeError, ZeroModulusError
from ppd_recognizer.finite_field import (
    canonical_modulus,
    field_from_order,
    field_make,
    format_poly,
    parse_poly,
    poly_coeffs,
    poly_from_coeffs,
    poly_powmod,
    poly_sfdd,
)


def test_prime_field_has_no_modulus():
    field = field_make(2, 1)
    assert field.q == 2
    assert field.modulus is None
    assert str(field) == "GF(2)"


@pytest.mark.parametrize(
    "p, a, modulus",
    [
        (2, 2, (1, 1, 1)),
        (2, 3, (1, 1, 0, 1)),
        (2, 4, (1, 1, 0, 0, 1)),
        (3, 2, (1, 0, 1)),
        (5, 2, (2, 0, 1)),
        (3, 3, (1, 2, 0, 1)),
    ],
)
def test_canonical_modulus(p, a, modulus):
    assert canonical_modulus(p, a) == modulus
    assert field_make(p, a).modulus == modulus


def test_equal_parameters_give_equal_fields():
    assert field_make(3, 2) == field_make(3, 2)
    assert field_from_order(9) == field_make(3, 2)


def test_not_prime():
    with pytest.raises(NotPrimeError):
        field_make(4, 1)
    with pytest.raises(NotPrimeError):
        field_from_order(12)


def test_field_order_cap():
    with pytest.raises(MagnitudeOverflowError):
        field_make(2, 21)
    with pytest.raises(MagnitudeOverflowError):
        field_make(3, 3, LimitsConfig(max_field_order=20))


def test_element_encoding_round_trips():
    field = field_make(3, 2)
    for rep in range(field.q):
        assert int(field.element(rep)) == rep
    with pytest.raises(ValueError):
        field.element(9)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9, 16, 25])
def test_field_axioms(q):
    field = field_from_order(q)
    rng = np.random.default_rng(q)
    x, y, z = (field.gf(rng.integers(0, q, size=50)) for _ in range(3))
    assert np.array_equal((x * y) * z, x * (y * z))
    assert np.array_equal(x * (y + z), x * y + x * z)
    nonzero = x[x != 0]
    assert np.all(nonzero * nonzero**-1 == 1)


def test_poly_text_form(gf2):
    poly = parse_poly(gf2, "1 1 0 1")
    assert poly.degree == 3
    assert poly_coeffs(poly) == [1, 1, 0, 1]
    assert format_poly(poly) == "1 1 0 1"
    assert format_poly(parse_poly(gf2, "0 0")) == "0"


def test_powmod_examples(gf2):
    t = poly_from_coeffs(gf2, [0, 1])
    gf4_modulus = poly_from_coeffs(gf2, [1, 1, 1])
    gf8_modulus = poly_from_coeffs(gf2, [1, 1, 0, 1])
    assert poly_coeffs(poly_powmod(t, 3, gf4_modulus)) == [1]
    assert poly_coeffs(poly_powmod(t, 0, gf8_modulus)) == [1]
    assert poly_coeffs(poly_powmod(t, 3, gf8_modulus)) == [1, 1]


def test_powmod_large_exponent(gf2):
    t = poly_from_coeffs(gf2, [0, 1])
    modulus = poly_from_coeffs(gf2, [1, 1, 0, 1])
    # t has order 7 modulo t^3 + t + 1
    assert poly_coeffs(poly_powmod(t, 7 * (2**300), modulus)) == [1]


def test_powmod_zero_modulus(gf2):
    t = poly_from_coeffs(gf2, [0, 1])
    with pytest.raises(ZeroModulusError):
        poly_powmod(t, 5, poly_from_coeffs(gf2, [1]))


def test_powmod_exponent_laws(gf3):
    rng = np.random.default_rng(7)
    for _ in range(20):
        modulus = poly_from_coeffs(gf3, [int(c) for c in rng.integers(0, 3, size=4)] + [1])
        base = poly_from_coeffs(gf3, [int(c) for c in rng.integers(0, 3, size=4)])
        x, y = (int(v) for v in rng.integers(0, 200, size=2))
        assert poly_powmod(base, 1, modulus) == base % modulus
        combined = (poly_powmod(base, x, modulus) * poly_powmod(base, y, modulus)) % modulus
        assert poly_powmod(base, x + y, modulus) == combined


def test_sfdd_examples(gf2, gf3):
    # (t+1)^2 (t^2+t+1) = t^4 + t^3 + t + 1
    slots = poly_sfdd(poly_from_coeffs(gf2, [1, 1, 0, 1, 1]))
    assert [(m, poly_coeffs(f)) for m, f in slots] == [(1, [1, 1]), (2, [1, 1, 1])]
    slots = poly_sfdd(poly_from_coeffs(gf2, [1, 1, 0, 1]))
    assert [(m, poly_coeffs(f)) for m, f in slots] == [(3, [1, 1, 0, 1])]
    slots = poly_sfdd(poly_from_coeffs(gf3, [0, 0, 1]))
    assert [(m, poly_coeffs(f)) for m, f in slots] == [(1, [0, 1])]


def test_sfdd_recovers_degree_partition():
    field = field_make(3)
    irreducibles = [
        galois.Poly([1, 0, 1], field=field.gf),  # t^2 + 1
        galois.Poly([1, 0, 2, 1], field=field.gf),  # t^3 + 2t + 1
        galois.Poly([1, 1], field=field.gf),
        galois.Poly([1, 2], field=field.gf),
    ]
    for factor in irreducibles:
        assert factor.is_irreducible()
    product = irreducibles[0] ** 2 * irreducibles[1] * irreducibles[2] * irreducibles[3] ** 3
    degrees = {m: f.degree // m for m, f in poly_sfdd(product)}
    assert degrees == {1: 2, 2: 1, 3: 1}
