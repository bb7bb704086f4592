"""Arithmetic in GF(p^a) and in the polynomial ring GF(q)[t].

Field elements are :mod:`galois` scalars whose integer value is the encoding
``sum(c_i * p**i)`` of ``sum(c_i * x**i)`` in the power basis of the modulus.
Polynomials are :class:`galois.Poly` instances over the same field class.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence
import logging

import galois
from sympy import factorint, isprime

from .config import LimitsConfig
from .errors import MagnitudeOverflowError, NotPrimeError, ZeroModulusError

logger = logging.getLogger(__name__)

FieldElement = galois.FieldArray
Poly = galois.Poly


def _digits(value: int, base: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        value, digit = divmod(value, base)
        out.append(digit)
    return out


@lru_cache(maxsize=None)
def canonical_modulus(p: int, a: int) -> tuple[int, ...]:
    """Return the canonical monic irreducible of degree ``a`` over GF(p).

    Coefficients are constant term first and include the leading 1. Candidates
    are ordered by the integer ``sum(c_i * p**i)`` over the non-leading
    coefficients, so the constant term is the least significant digit and
    ``c_{a-1}`` the most significant. The least irreducible candidate wins:
    over GF(2) that is t^2 + t + 1, t^3 + t + 1 and t^4 + t + 1.
    """
    prime_field = galois.GF(p)
    for value in range(p**a):
        coeffs = _digits(value, p, a) + [1]
        if coeffs[0] == 0:
            continue
        candidate = galois.Poly(coeffs, field=prime_field, order="asc")
        if candidate.is_irreducible():
            return tuple(coeffs)
    raise AssertionError(f"no irreducible polynomial of degree {a} over GF({p})")  # pragma: no cover


@lru_cache(maxsize=None)
def _galois_field(p: int, a: int, modulus: Optional[tuple[int, ...]]) -> type[galois.FieldArray]:
    if modulus is None:
        return galois.GF(p)
    irreducible = galois.Poly(list(modulus), field=galois.GF(p), order="asc")
    return galois.GF(p**a, irreducible_poly=irreducible)


@dataclass(frozen=True, slots=True)
class FieldParams:
    """The field GF(q), q = p^a, with its canonical modulus when a > 1."""

    p: int
    a: int
    q: int
    modulus: Optional[tuple[int, ...]] = None

    @property
    def gf(self) -> type[galois.FieldArray]:
        """The :mod:`galois` field class carrying this field's arithmetic."""
        return _galois_field(self.p, self.a, self.modulus)

    @property
    def is_prime(self) -> bool:
        return self.a == 1

    @property
    def modulus_poly(self) -> Optional[Poly]:
        if self.modulus is None:
            return None
        return galois.Poly(list(self.modulus), field=galois.GF(self.p), order="asc")

    @property
    def primitive_element(self) -> FieldElement:
        return self.gf.primitive_element

    def element(self, rep: int) -> FieldElement:
        """Decode the integer encoding ``rep`` into a field element."""
        if not 0 <= rep < self.q:
            raise ValueError(f"{rep} is not an element encoding of GF({self.q})")
        return self.gf(rep)

    def basis(self) -> list[FieldElement]:
        """Powers of the primitive element spanning GF(q) over GF(p)."""
        omega = self.primitive_element
        return [omega**k for k in range(self.a)]

    def frobenius(self, values, power: int = 1):
        """Apply ``x -> x**(p**power)`` elementwise."""
        return values ** (self.p**power)

    def __str__(self) -> str:
        return f"GF({self.q})"


def field_make(p: int, a: int = 1, limits: Optional[LimitsConfig] = None) -> FieldParams:
    """Return the canonical :class:`FieldParams` for GF(p^a)."""
    limits = limits or LimitsConfig()
    if a < 1:
        raise ValueError("extension degree must be positive")
    if not isprime(p):
        raise NotPrimeError(f"{p} is not prime")
    q = p**a
    if q > limits.max_field_order:
        raise MagnitudeOverflowError(f"field order {q} exceeds cap {limits.max_field_order}")
    modulus = canonical_modulus(p, a) if a > 1 else None
    return FieldParams(p=p, a=a, q=q, modulus=modulus)


def field_from_order(q: int, limits: Optional[LimitsConfig] = None) -> FieldParams:
    """Build GF(q) from the field order alone."""
    if q < 2:
        raise NotPrimeError(f"{q} is not a prime power")
    factors = factorint(q)
    if len(factors) != 1:
        raise NotPrimeError(f"{q} is not a prime power")
    ((p, a),) = factors.items()
    return field_make(int(p), int(a), limits)


# -- polynomials -----------------------------------------------------------


def poly_from_coeffs(field: FieldParams, coeffs: Sequence[int]) -> Poly:
    """Polynomial from integer encodings, constant term first."""
    if not coeffs:
        return galois.Poly.Zero(field=field.gf)
    return galois.Poly(field.gf(list(coeffs)), order="asc")


def poly_coeffs(poly: Poly) -> list[int]:
    """Integer encodings of ``poly``, constant term first (empty for zero)."""
    if is_zero_poly(poly):
        return []
    return [int(c) for c in poly.coeffs[::-1]]


def parse_poly(field: FieldParams, text: str) -> Poly:
    """Parse the whitespace separated text form, constant term first."""
    tokens = text.split()
    coeffs = [int(token) for token in tokens]
    for value in coeffs:
        if not 0 <= value < field.q:
            raise ValueError(f"coefficient {value} outside GF({field.q})")
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return poly_from_coeffs(field, coeffs)


def format_poly(poly: Poly) -> str:
    coeffs = poly_coeffs(poly)
    return " ".join(str(c) for c in coeffs) if coeffs else "0"


def is_zero_poly(poly: Poly) -> bool:
    return poly.degree == 0 and int(poly.coeffs[0]) == 0


def make_monic(poly: Poly) -> Poly:
    lead = poly.coeffs[0]
    if lead == 1:
        return poly
    return galois.Poly(poly.coeffs / lead)


def poly_powmod(base: Poly, exponent: int, modulus: Poly) -> Poly:
    """Return ``base**exponent mod modulus`` by square-and-multiply.

    ``exponent`` is an arbitrary precision integer; the loop runs over its bits
    so exponents like q^e - 1 with hundreds of bits are fine.
    """
    if modulus.degree < 1:
        raise ZeroModulusError("modulus must have degree at least 1")
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    one = galois.Poly.One(field=modulus.field)
    result = one % modulus
    square = base % modulus
    while exponent:
        if exponent & 1:
            result = (result * square) % modulus
        exponent >>= 1
        if exponent:
            square = (square * square) % modulus
    return result


def square_free_part(poly: Poly) -> Poly:
    """Product of the distinct monic irreducible factors of ``poly``."""
    monic = make_monic(poly)
    if monic.degree < 1:
        return monic
    factors, _ = monic.square_free_factors()
    radical = galois.Poly.One(field=monic.field)
    for factor in factors:
        radical = radical * factor
    return radical


def poly_sfdd(poly: Poly) -> list[tuple[int, Poly]]:
    """Square-free then distinct-degree factorization.

    Returns ``(m, product)`` pairs in increasing ``m`` where ``product`` is the
    product of the distinct monic irreducible factors of degree ``m``.
    """
    if poly.degree < 1:
        raise ValueError("sfdd needs a polynomial of degree at least 1")
    field_cls = poly.field
    q = field_cls.order
    rest = square_free_part(poly)
    t = galois.Poly.Identity(field=field_cls)
    slots: list[tuple[int, Poly]] = []
    h = t
    m = 0
    while rest.degree >= 2 * (m + 1):
        m += 1
        h = poly_powmod(h, q, rest)
        g = galois.gcd(rest, h - t)
        if g.degree > 0:
            slots.append((m, g))
            rest = rest // g
            h = h % rest if rest.degree > 0 else h
    if rest.degree > 0:
        slots.append((rest.degree, rest))
    slots.sort(key=lambda item: item[0])
    return slots

