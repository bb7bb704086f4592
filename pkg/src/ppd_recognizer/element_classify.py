"""Decide whether a matrix is a ppd(d, q; e)-element, and whether it is large or basic."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional
import logging

import galois

from .classical_groups import Family, validate_case_shape
from .config import LimitsConfig
from .errors import SingularInputError
from .finite_field import FieldParams, Poly, field_from_order, format_poly, poly_coeffs, poly_from_coeffs, poly_powmod, poly_sfdd
from .matrices import MatrixQ, check_dimension, mat_charpoly
from .ppd_arithmetic import has_ppd, phi_triple

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class PpdWitness:
    """The unique irreducible factor of degree e > d/2 certifying a ppd element."""

    e: int
    factor: Poly
    is_large: bool
    is_basic: bool

    def describe(self) -> str:
        return (
            f"e={self.e} ppd=true large={str(self.is_large).lower()} "
            f"basic={str(self.is_basic).lower()} factor={format_poly(self.factor)}"
        )

    def as_dict(self) -> dict:
        return {
            "e": self.e,
            "is_large": self.is_large,
            "is_basic": self.is_basic,
            "factor": poly_coeffs(self.factor),
        }


def _is_one(poly: Poly) -> bool:
    return poly.degree == 0 and int(poly.coeffs[0]) == 1


def classify_element(g: MatrixQ, limits: Optional[LimitsConfig] = None) -> Optional[PpdWitness]:
    """Classify ``g``; ``None`` means it is not a ppd element for any e > d/2."""
    limits = limits or LimitsConfig()
    check_dimension(g.d, limits)
    charpoly = mat_charpoly(g)
    if int(charpoly.coeffs[-1]) == 0:
        raise SingularInputError("matrix is singular")
    return classify_charpoly(g.field, charpoly, limits)


def classify_charpoly(field: FieldParams, charpoly: Poly, limits: Optional[LimitsConfig] = None) -> Optional[PpdWitness]:
    """Classify by characteristic polynomial alone; results are memoized."""
    limits = limits or LimitsConfig()
    return _classify_cached(field, tuple(poly_coeffs(charpoly)), limits.max_power_bits, limits.max_field_order)


@lru_cache(maxsize=65536)
def _classify_cached(
    field: FieldParams, coeffs: tuple[int, ...], power_bits: int, field_cap: int
) -> Optional[PpdWitness]:
    limits = LimitsConfig(max_field_order=field_cap, max_power_bits=power_bits)
    charpoly = poly_from_coeffs(field, coeffs)
    d = charpoly.degree
    factor = None
    for m, product in poly_sfdd(charpoly):
        if 2 * m > d and product.degree == m:
            factor, e = product, m
            break
    if factor is None:
        return None
    q = field.q
    triple = phi_triple(e, q, field.p, field.a, limits)
    if triple.phi == 1:
        return None
    order = q**e - 1
    t = galois.Poly.Identity(field=field.gf)
    if _is_one(poly_powmod(t, order // triple.phi, factor)):
        return None
    is_large = triple.phi_large > 1 and not _is_one(poly_powmod(t, order // triple.phi_large, factor))
    is_basic = triple.phi_basic > 1 and not _is_one(poly_powmod(t, order // triple.phi_basic, factor))
    return PpdWitness(e=e, factor=factor, is_large=is_large, is_basic=is_basic)


def allowed_e(family: Family | str, d: int, q: int, limits: Optional[LimitsConfig] = None) -> tuple[int, ...]:
    """The e in (d/2, d] for which Omega of the given family can hold ppd(d, q; e)-elements."""
    field = field_from_order(q, limits)
    family = validate_case_shape(family, d, field.p, field.a)
    even_only = family in (
        Family.SYMPLECTIC,
        Family.ORTHOGONAL_PLUS,
        Family.ORTHOGONAL_MINUS,
        Family.ORTHOGONAL_CIRCLE,
    )
    allowed = []
    for e in range(d // 2 + 1, d + 1):
        if even_only and e % 2:
            continue
        if family is Family.UNITARY and e % 2 == 0:
            continue
        if family is Family.ORTHOGONAL_PLUS and e == d:
            continue
        if not has_ppd(q, e):
            continue
        allowed.append(e)
    logger.debug("allowed e for %s d=%d q=%d: %s", family.value, d, q, allowed)
    return tuple(allowed)
