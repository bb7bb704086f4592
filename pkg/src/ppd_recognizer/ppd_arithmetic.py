"""Primitive prime divisors and the quantities Phi, Phi_l and Phi_b.

A prime ``r`` is a primitive prime divisor of ``b**e - 1`` when it divides
``b**e - 1`` but no ``b**i - 1`` with ``i < e``; equivalently the
multiplicative order of ``b`` modulo ``r`` is ``e``. ``Phi(e, q)`` is the
product of those primes with their full multiplicity in ``q**e - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional
import logging
import math

from sympy import factorint, n_order, primefactors

from .config import LimitsConfig
from .errors import InconsistentFieldError, MagnitudeOverflowError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class PpdSet:
    """The primitive prime divisors of ``b**e - 1`` with their valuations."""

    b: int
    e: int
    primes: dict[int, int] = field(default_factory=dict)

    def product(self) -> int:
        return math.prod(r**v for r, v in self.primes.items())

    def __bool__(self) -> bool:
        return bool(self.primes)


@dataclass(frozen=True, slots=True)
class PhiTriple:
    """Phi(e, q), Phi_l(e, q) and Phi_b(e, q) for q = p^a."""

    e: int
    q: int
    p: int
    a: int
    phi: int
    phi_large: int
    phi_basic: int

    def decompose(self, limits: Optional[LimitsConfig] = None) -> dict[str, dict[int, int]]:
        """Prime-power decompositions of the three products."""
        ppds = ppd_list(self.q, self.e, limits).primes
        basic = ppd_list(self.p, self.a * self.e, limits).primes
        large = {}
        for r, v in ppds.items():
            if r >= 2 * self.e + 1:
                large[r] = v
            elif r == self.e + 1 and v > 1:
                large[r] = v - 1
        return {"phi": dict(ppds), "phi_large": large, "phi_basic": dict(basic)}

    def as_dict(self) -> dict:
        return {
            "e": self.e,
            "q": self.q,
            "phi": self.phi,
            "phi_large": self.phi_large,
            "phi_basic": self.phi_basic,
        }


def _check_power(b: int, e: int, limits: Optional[LimitsConfig]) -> None:
    limits = limits or LimitsConfig()
    cap = limits.max_power_bits
    if e * (b.bit_length() - 1) > cap or b**e > (1 << cap):
        raise MagnitudeOverflowError(f"{b}^{e} exceeds the 2^{cap} magnitude cap")


def factorize(n: int, limits: Optional[LimitsConfig] = None) -> dict[int, int]:
    """Complete prime factorization of ``n >= 1`` as ``{prime: multiplicity}``."""
    limits = limits or LimitsConfig()
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    if n.bit_length() > limits.max_power_bits:
        raise MagnitudeOverflowError(f"{n.bit_length()}-bit integer exceeds the factorization cap")
    return {int(r): int(v) for r, v in sorted(factorint(n).items())}


def ppd_list(b: int, e: int, limits: Optional[LimitsConfig] = None) -> PpdSet:
    """The primitive prime divisors of ``b**e - 1``, found by multiplicative order."""
    if b < 2 or e < 1:
        raise ValueError("ppd_list needs b > 1 and e >= 1")
    _check_power(b, e, limits)
    factors = factorize(b**e - 1, limits)
    primes = {r: v for r, v in factors.items() if n_order(b, r) == e}
    return PpdSet(b=b, e=e, primes=primes)


def zsigmondy_exception(b: int, e: int) -> bool:
    """True exactly for the pairs where ``b**e - 1`` has no primitive prime divisor."""
    if b == 2 and e in (1, 6):
        return True
    if e == 2 and (b + 1) & b == 0:
        return True
    return False


def has_ppd(b: int, e: int) -> bool:
    if b < 2 or e < 1:
        raise ValueError("has_ppd needs b > 1 and e >= 1")
    return not zsigmondy_exception(b, e)


@lru_cache(maxsize=4096)
def phi(e: int, b: int) -> int:
    """Phi(e, b) by the gcd cascade, with no magnitude cap.

    Starts from ``b**e - 1`` and, for each prime ``c`` dividing ``e``, divides
    out ``gcd(Phi, b**(e/c) - 1)`` until the two are coprime.
    """
    value = b**e - 1
    for c in primefactors(e):
        lower = b ** (e // c) - 1
        g = math.gcd(value, lower)
        while g > 1:
            value //= g
            g = math.gcd(value, g)
    return value


def phi_large_of(e: int, value: int) -> int:
    """Phi_l from Phi: a single factor e+1 never makes an element large."""
    if value % (e + 1) == 0:
        return value // (e + 1)
    return value


def phi_triple(e: int, q: int, p: int, a: int, limits: Optional[LimitsConfig] = None) -> PhiTriple:
    """Phi, Phi_l and Phi_b for ``e`` and ``q = p**a`` by gcd arithmetic."""
    if q != p**a:
        raise InconsistentFieldError(f"q={q} is not {p}^{a}")
    if e < 1:
        raise ValueError("e must be positive")
    _check_power(q, e, limits)
    value = phi(e, q)
    return PhiTriple(
        e=e,
        q=q,
        p=p,
        a=a,
        phi=value,
        phi_large=phi_large_of(e, value),
        phi_basic=phi(a * e, p),
    )


def phi_triple_from_factorization(
    e: int, q: int, p: int, a: int, limits: Optional[LimitsConfig] = None
) -> PhiTriple:
    """The same triple computed from complete factorizations of q^e - 1."""
    if q != p**a:
        raise InconsistentFieldError(f"q={q} is not {p}^{a}")
    ppds = ppd_list(q, e, limits).primes
    large = 1
    for r, v in ppds.items():
        if r >= 2 * e + 1:
            large *= r**v
        elif r == e + 1:
            large *= r ** (v - 1)
    return PhiTriple(
        e=e,
        q=q,
        p=p,
        a=a,
        phi=math.prod(r**v for r, v in ppds.items()),
        phi_large=large,
        phi_basic=ppd_list(p, a * e, limits).product(),
    )


def mu_distinct_primes(d: int) -> int:
    if d < 1:
        raise ValueError("d must be positive")
    return len(primefactors(d))


def is_primitive_divisor(r: int, b: int, e: int) -> bool:
    """Whether the prime ``r`` is a primitive prime divisor of ``b**e - 1``."""
    if b % r == 0:
        return False
    return n_order(b, r) == e
