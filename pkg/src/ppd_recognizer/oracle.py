"""Exact ground truth for small groups: enumeration, exact proportions, orders."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Iterator, Optional, Sequence
import logging

import numpy as np

from .config import LimitsConfig, OracleConfig
from .element_classify import classify_charpoly
from .errors import DimensionMismatchError, EnumerationCapError, FieldMismatchError, NoPpdAtDimensionError
from .finite_field import FieldParams, poly_from_coeffs
from .matrices import MatrixQ, as_field_array, batched_charpoly, identity, mat_is_identity, mat_mul
from .ppd_arithmetic import phi, ppd_list

logger = logging.getLogger(__name__)

_CHARPOLY_CHUNK = 4096


def _batched_product(field: FieldParams, stack: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Raw encodings of ``stack[i] @ g`` for every i."""
    if field.is_prime:
        return np.matmul(stack, g) % field.p
    gf = field.gf
    left = as_field_array(field, stack)
    right = as_field_array(field, g)
    out = gf.Zeros(stack.shape)
    for k in range(stack.shape[2]):
        out = out + left[:, :, k, np.newaxis] * right[np.newaxis, k, :]
    return out.view(np.ndarray).astype(np.int64)


@dataclass(frozen=True, slots=True)
class EnumeratedGroup:
    """Every element of a group, as raw encodings of shape ``(order, d, d)``."""

    field: FieldParams
    elements: np.ndarray
    generators: tuple[MatrixQ, ...]
    _keys: frozenset[bytes] = dataclass_field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_keys", frozenset(raw.tobytes() for raw in self.elements))

    @property
    def order(self) -> int:
        return int(self.elements.shape[0])

    @property
    def d(self) -> int:
        return int(self.elements.shape[1])

    def matrices(self) -> Iterator[MatrixQ]:
        for raw in self.elements:
            yield MatrixQ(self.field, as_field_array(self.field, raw))

    def keys(self) -> frozenset[bytes]:
        return self._keys

    def __contains__(self, matrix: MatrixQ) -> bool:
        return matrix.field == self.field and matrix.key() in self._keys


def enumerate_group(
    generators: Sequence[MatrixQ], cap: Optional[int] = None, config: Optional[OracleConfig] = None
) -> EnumeratedGroup:
    """Breadth-first closure of ``generators`` under right multiplication."""
    config = config or OracleConfig()
    cap = config.enumeration_cap if cap is None else cap
    if not generators:
        raise DimensionMismatchError("need at least one generator")
    field, d = generators[0].field, generators[0].d
    for g in generators:
        if g.field != field:
            raise FieldMismatchError(f"generators over {g.field} and {field}")
        if g.d != d:
            raise DimensionMismatchError(f"generators of degree {g.d} and {d}")
    start = identity(field, d).raw[np.newaxis]
    seen = {start[0].tobytes()}
    chunks = [start]
    frontier = start
    while frontier.shape[0]:
        fresh = []
        for g in generators:
            for raw in _batched_product(field, frontier, g.raw):
                key = raw.tobytes()
                if key not in seen:
                    seen.add(key)
                    fresh.append(raw)
                    if len(seen) > cap:
                        raise EnumerationCapError(f"group has more than {cap} elements")
        frontier = np.asarray(fresh, dtype=np.int64).reshape(-1, d, d)
        chunks.append(frontier)
        logger.debug("enumeration frontier %d, total %d", frontier.shape[0], len(seen))
    elements = np.concatenate(chunks, axis=0)
    logger.info("enumerated group of order %d in GL(%d,%d)", elements.shape[0], d, field.q)
    return EnumeratedGroup(field, elements, tuple(generators))


def exact_ppd_profile(group: EnumeratedGroup, limits: Optional[LimitsConfig] = None) -> dict[int, Fraction]:
    """ppd(G, e) for every e > d/2 carried by some element, as exact fractions."""
    field = group.field
    counts: Counter[int] = Counter()
    for begin in range(0, group.order, _CHARPOLY_CHUNK):
        stack = as_field_array(field, group.elements[begin : begin + _CHARPOLY_CHUNK])
        charpolys = batched_charpoly(field, stack).view(np.ndarray).astype(np.int64)
        unique, multiplicity = np.unique(charpolys, axis=0, return_counts=True)
        for row, count in zip(unique, multiplicity):
            witness = classify_charpoly(field, poly_from_coeffs(field, row.tolist()), limits)
            if witness is not None:
                counts[witness.e] += int(count)
    return {e: Fraction(counts[e], group.order) for e in sorted(counts)}


def exact_ppd_proportion(group: EnumeratedGroup, e: int, limits: Optional[LimitsConfig] = None) -> Fraction:
    if not group.d / 2 < e <= group.d:
        raise ValueError(f"e={e} outside (d/2, d]")
    return exact_ppd_profile(group, limits).get(e, Fraction(0))


def gl_proportion(d: int, q: int, e: int) -> Fraction:
    """The exact proportion (1/e)(1 - 1/Phi(e, q)) of ppd(d, q; e)-elements in GL(d, q)."""
    if not d / 2 < e <= d:
        raise ValueError(f"e={e} outside (d/2, d]")
    return Fraction(1, e) * (1 - Fraction(1, phi(e, q)))


def verify_singer_formula(group: EnumeratedGroup, u: int, limits: Optional[LimitsConfig] = None) -> bool:
    """Check ppd(G, d) = (1/u)(1 - 1/Phi(d, q)) exactly."""
    d, q = group.d, group.field.q
    value = phi(d, q)
    if value == 1:
        raise NoPpdAtDimensionError(f"q^{d} - 1 has no primitive prime divisor for q={q}")
    expected = Fraction(1, u) * (1 - Fraction(1, value))
    return exact_ppd_proportion(group, d, limits) == expected


# -- orders ----------------------------------------------------------------------


def element_order(g: MatrixQ, bound: Optional[int] = None) -> int:
    """Multiplicative order by repeated multiplication (small groups only)."""
    bound = bound or g.field.q**g.d
    power = g
    for order in range(1, bound + 1):
        if mat_is_identity(power):
            return order
        power = mat_mul(power, g)
    raise ValueError(f"no order found below {bound}")


@dataclass(frozen=True, slots=True)
class OrderClassification:
    e: int
    is_large: bool
    is_basic: bool


def classify_by_order(
    g: MatrixQ, order: Optional[int] = None, limits: Optional[LimitsConfig] = None
) -> Optional[OrderClassification]:
    """The ppd, large and basic properties read off the element order directly."""
    field = g.field
    q, p, a, d = field.q, field.p, field.a, g.d
    order = element_order(g) if order is None else order
    for e in range(d // 2 + 1, d + 1):
        primes = ppd_list(q, e, limits).primes
        dividing = [r for r in primes if order % r == 0]
        if not dividing:
            continue
        is_large = any(
            r >= 2 * e + 1 or (r == e + 1 and primes[r] >= 2 and order % (r * r) == 0) for r in dividing
        )
        basic_primes = ppd_list(p, a * e, limits).primes
        is_basic = any(r in basic_primes for r in dividing)
        return OrderClassification(e, is_large, is_basic)
    return None
