"""Classical group cases, their invariant forms, and generating sets.

Forms use the antidiagonal index pairing ``i* = d - 1 - i``. The symplectic
Gram matrix has ``J[i, i*] = 1`` for ``i < d/2`` and ``-1`` otherwise; the
hermitian Gram matrix is the antidiagonal of ones; quadratic forms are given
by an upper triangular ``U`` with ``Q(v) = v U v^T``, hyperbolic pairs
``U[i, i*] = 1`` and, for minus type, the anisotropic block ``x^2 - nu y^2``
on the two middle coordinates (``nu`` the primitive element, a non-square).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence
import logging
import math

import galois
import numpy as np

from .config import LimitsConfig
from .errors import (
    DimensionMismatchError,
    FieldMismatchError,
    GroupValidationError,
    InvalidCaseError,
    MagnitudeOverflowError,
    NotSimilitudeError,
    UnsupportedCaseError,
)
from .finite_field import FieldElement, FieldParams, field_make
from .matrices import (
    MatrixQ,
    block_diagonal,
    diagonal,
    field_product,
    identity,
    mat_det,
    mat_rank,
    raw_entries,
    scalar_matrix,
)

logger = logging.getLogger(__name__)


class Family(str, Enum):
    LINEAR = "linear"
    SYMPLECTIC = "symplectic"
    UNITARY = "unitary"
    ORTHOGONAL_PLUS = "orthogonal-plus"
    ORTHOGONAL_MINUS = "orthogonal-minus"
    ORTHOGONAL_CIRCLE = "orthogonal-circle"

    @classmethod
    def parse(cls, value: "Family | str") -> "Family":
        if isinstance(value, Family):
            return value
        key = str(value).strip().lower()
        if key in FAMILY_ALIASES:
            return FAMILY_ALIASES[key]
        try:
            return cls(key)
        except ValueError:
            raise InvalidCaseError(f"unknown group case {value!r}") from None

    @property
    def is_orthogonal(self) -> bool:
        return self in (Family.ORTHOGONAL_PLUS, Family.ORTHOGONAL_MINUS, Family.ORTHOGONAL_CIRCLE)

    @property
    def form_kind(self) -> "FormKind":
        if self is Family.LINEAR:
            return FormKind.NONE
        if self is Family.SYMPLECTIC:
            return FormKind.ALTERNATING
        if self is Family.UNITARY:
            return FormKind.SESQUILINEAR
        return FormKind.QUADRATIC

    @property
    def short_name(self) -> str:
        return _SHORT_NAMES[self]


FAMILY_ALIASES = {
    "sl": Family.LINEAR,
    "gl": Family.LINEAR,
    "sp": Family.SYMPLECTIC,
    "gsp": Family.SYMPLECTIC,
    "su": Family.UNITARY,
    "gu": Family.UNITARY,
    "o+": Family.ORTHOGONAL_PLUS,
    "o-": Family.ORTHOGONAL_MINUS,
    "o": Family.ORTHOGONAL_CIRCLE,
    "oc": Family.ORTHOGONAL_CIRCLE,
}

_SHORT_NAMES = {
    Family.LINEAR: "SL",
    Family.SYMPLECTIC: "Sp",
    Family.UNITARY: "SU",
    Family.ORTHOGONAL_PLUS: "Omega+",
    Family.ORTHOGONAL_MINUS: "Omega-",
    Family.ORTHOGONAL_CIRCLE: "Omega",
}


class FormKind(str, Enum):
    NONE = "none"
    ALTERNATING = "alternating-bilinear"
    SESQUILINEAR = "sesquilinear"
    QUADRATIC = "quadratic"


class Level(str, Enum):
    OMEGA = "omega"
    DELTA = "delta"


def validate_case_shape(family: Family | str, d: int, p: int, a: int) -> Family:
    """Check the parity and field conditions a family imposes on (d, q)."""
    family = Family.parse(family)
    if d < 2:
        raise InvalidCaseError(f"dimension {d} is too small for a classical group case")
    if family in (Family.SYMPLECTIC, Family.ORTHOGONAL_PLUS, Family.ORTHOGONAL_MINUS) and d % 2:
        raise InvalidCaseError(f"{family.value} needs even dimension, got {d}")
    if family is Family.ORTHOGONAL_CIRCLE and (d % 2 == 0 or p == 2):
        raise InvalidCaseError("orthogonal-circle needs odd dimension and odd q")
    if family is Family.UNITARY and a % 2:
        raise InvalidCaseError(f"unitary needs a square field order, got {p}^{a}")
    return family


@dataclass(frozen=True, slots=True)
class GroupCase:
    family: Family
    d: int
    field: FieldParams

    def __post_init__(self) -> None:
        family = validate_case_shape(self.family, self.d, self.field.p, self.field.a)
        object.__setattr__(self, "family", family)

    @property
    def q(self) -> int:
        return self.field.q

    def label(self) -> str:
        return f"{self.family.short_name}({self.d},{self.q})"


@dataclass(frozen=True, slots=True)
class FormData:
    """An invariant form; ``gram`` is the upper triangular ``U`` for quadratic forms."""

    kind: FormKind
    gram: Optional[MatrixQ] = None
    automorphism_order: int = 1

    def __post_init__(self) -> None:
        kind = FormKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is FormKind.NONE:
            return
        if self.gram is None:
            raise InvalidCaseError(f"{kind.value} form needs a Gram matrix")
        field = self.gram.field
        gram = self.gram.entries
        if kind is FormKind.ALTERNATING:
            if not np.array_equal(raw_entries(gram), raw_entries(-gram.T)) or np.any(np.diagonal(raw_entries(gram))):
                raise InvalidCaseError("alternating Gram matrix must be antisymmetric with zero diagonal")
            self._require_nonsingular(self.gram)
        elif kind is FormKind.SESQUILINEAR:
            if self.automorphism_order != 2 or field.a % 2:
                raise InvalidCaseError("sesquilinear forms need the order-2 field automorphism")
            if not np.array_equal(raw_entries(gram), raw_entries(conjugate(field, gram).T)):
                raise InvalidCaseError("sesquilinear Gram matrix must be conjugate symmetric")
            self._require_nonsingular(self.gram)
        else:
            if np.any(raw_entries(gram)[np.tril_indices(self.gram.d, -1)]):
                raise InvalidCaseError("quadratic form representative must be upper triangular")
            if field.p == 2:
                raise UnsupportedCaseError("quadratic forms in characteristic 2 are not supported")
            self._require_nonsingular(MatrixQ(field, gram + gram.T))

    @staticmethod
    def _require_nonsingular(matrix: MatrixQ) -> None:
        if mat_rank(matrix) != matrix.d:
            raise InvalidCaseError("form is degenerate")

    @classmethod
    def none(cls) -> "FormData":
        return cls(FormKind.NONE)

    def bilinear(self) -> galois.FieldArray:
        """Gram matrix of the associated bilinear (or sesquilinear) form."""
        gram = self.gram.entries
        if self.kind is FormKind.QUADRATIC:
            return gram + gram.T
        return gram


@dataclass(frozen=True, slots=True)
class GroupInput:
    """Generators of a group G <= GL(d, q) together with its case and form."""

    case: GroupCase
    form: FormData
    generators: tuple[MatrixQ, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))

    @property
    def field(self) -> FieldParams:
        return self.case.field

    @property
    def d(self) -> int:
        return self.case.d

    def validate(self) -> None:
        """Check generators are nonsingular similitudes of the form."""
        if not self.generators:
            raise GroupValidationError("a group input needs at least one generator")
        if self.form.kind is not self.case.family.form_kind:
            raise GroupValidationError(
                f"{self.case.family.value} groups carry a {self.case.family.form_kind.value} form, "
                f"not {self.form.kind.value}"
            )
        for index, generator in enumerate(self.generators):
            if generator.field != self.field:
                raise GroupValidationError(str(FieldMismatchError(f"matrix over {generator.field}")), index)
            if generator.d != self.d:
                raise GroupValidationError(str(DimensionMismatchError(f"matrix of degree {generator.d}")), index)
            if int(mat_det(generator)) == 0:
                raise GroupValidationError("generator is singular", index)
            if self.form.kind is not FormKind.NONE:
                try:
                    similitude_scalar(generator, self.form)
                except NotSimilitudeError as exc:
                    raise GroupValidationError(str(exc), index) from exc


# -- forms ---------------------------------------------------------------------


def conjugate(field: FieldParams, values: galois.FieldArray) -> galois.FieldArray:
    """The order-2 automorphism ``x -> x**sqrt(q)`` applied elementwise."""
    return values ** (field.p ** (field.a // 2))


def _upper_representative(field: FieldParams, m: galois.FieldArray) -> galois.FieldArray:
    d = m.shape[0]
    out = field.gf.Zeros((d, d))
    upper = np.triu_indices(d, 1)
    symmetric = m + m.T
    out[upper] = symmetric[upper]
    diag = np.diag_indices(d)
    out[diag] = m[diag]
    return out


def similitude_scalar(g: MatrixQ, form: FormData) -> FieldElement:
    """The scalar mu(g) with g B g^sigma^T = mu B, or Q(vg) = mu Q(v)."""
    if form.kind is FormKind.NONE:
        raise ValueError("the trivial form has no similitude scalar")
    field = g.field
    if form.gram.field != field or form.gram.d != g.d:
        raise FieldMismatchError("form and matrix disagree on field or dimension")
    gram = form.gram.entries
    entries = g.entries
    if form.kind is FormKind.SESQUILINEAR:
        image = field_product(field, field_product(field, entries, gram), conjugate(field, entries).T)
    else:
        image = field_product(field, field_product(field, entries, gram), entries.T)
    if form.kind is FormKind.QUADRATIC:
        image = _upper_representative(field, image)
    target = raw_entries(gram)
    index = np.unravel_index(int(np.flatnonzero(target)[0]), target.shape)
    scalar = image[index] / gram[index]
    if int(scalar) == 0 or not np.array_equal(raw_entries(image), raw_entries(gram * scalar)):
        raise NotSimilitudeError("matrix does not preserve the form modulo scalars")
    return scalar


def standard_form(case: GroupCase) -> FormData:
    """The canonical form preserved by the standard generators of ``case``."""
    field, d, family = case.field, case.d, case.family
    gf = field.gf
    gram = gf.Zeros((d, d))
    m = d // 2
    if family is Family.LINEAR:
        return FormData.none()
    if family is Family.SYMPLECTIC:
        for i in range(d):
            gram[i, d - 1 - i] = 1 if i < m else -gf(1)
        return FormData(FormKind.ALTERNATING, MatrixQ(field, gram))
    if family is Family.UNITARY:
        for i in range(d):
            gram[i, d - 1 - i] = 1
        return FormData(FormKind.SESQUILINEAR, MatrixQ(field, gram), automorphism_order=2)
    if field.p == 2:
        raise UnsupportedCaseError("orthogonal groups are supported for odd q only")
    nu = field.primitive_element
    hyperbolic = m - 1 if family is Family.ORTHOGONAL_MINUS else m
    for i in range(hyperbolic):
        gram[i, d - 1 - i] = 1
    if family is Family.ORTHOGONAL_MINUS:
        gram[m - 1, m - 1] = 1
        gram[m, m] = -nu
    elif family is Family.ORTHOGONAL_CIRCLE:
        gram[m, m] = 1
    return FormData(FormKind.QUADRATIC, MatrixQ(field, gram))


# -- generators ----------------------------------------------------------------


def _elementary(field: FieldParams, d: int, terms: Sequence[tuple[int, int, FieldElement]]) -> MatrixQ:
    entries = field.gf.Identity(d)
    for i, j, value in terms:
        entries[i, j] = entries[i, j] + value
    return MatrixQ(field, entries)


def _signed_cycle(field: FieldParams, d: int) -> MatrixQ:
    gf = field.gf
    entries = gf.Zeros((d, d))
    for i in range(d - 1):
        entries[i, i + 1] = 1
    entries[d - 1, 0] = 1 if d % 2 else -gf(1)
    return MatrixQ(field, entries)


def _fp_coordinates(field: FieldParams, value: FieldElement) -> list[int]:
    rep = int(value)
    coords = []
    for _ in range(field.a):
        rep, digit = divmod(rep, field.p)
        coords.append(digit)
    return coords


def _fp_independent(field: FieldParams, candidates: Sequence[FieldElement]) -> list[FieldElement]:
    """A maximal GF(p)-independent subset of ``candidates``, in order."""
    prime = galois.GF(field.p)
    chosen: list[FieldElement] = []
    rows: list[list[int]] = []
    for value in candidates:
        trial = rows + [_fp_coordinates(field, value)]
        if np.linalg.matrix_rank(prime(trial)) > len(rows):
            rows = trial
            chosen.append(value)
    return chosen


def _trace_zero_basis(field: FieldParams) -> list[FieldElement]:
    candidates = [x - conjugate(field, x) for x in field.basis()]
    return _fp_independent(field, [c for c in candidates if int(c) != 0])


def _trace_one(field: FieldParams) -> FieldElement:
    elements = field.gf.elements
    mask = raw_entries(elements + conjugate(field, elements)) == 1
    return elements[int(np.flatnonzero(mask)[0])]


def _linear_generators(field: FieldParams, d: int, level: Level) -> list[MatrixQ]:
    """Transvections and the signed cycle.

    Over a prime field the transvection I + E_12 and the signed cycle already
    generate SL(d, p): conjugating by the cycle gives every I + E_{i,i+1} and
    commutators of those give the rest. Over GF(p^a) each basis element of
    the field contributes an upper and a lower transvection.
    """
    gens = []
    for c in field.basis():
        gens.append(_elementary(field, d, [(0, 1, c)]))
        if not field.is_prime:
            gens.append(_elementary(field, d, [(1, 0, c)]))
    gens.append(_signed_cycle(field, d))
    if level is Level.DELTA:
        gens.append(diagonal(field, [field.primitive_element] + [field.gf(1)] * (d - 1)))
    return gens


def _symplectic_generators(field: FieldParams, d: int, level: Level) -> list[MatrixQ]:
    m = d // 2
    gens = []
    for i in range(m - 1):
        for t in field.basis():
            gens.append(_elementary(field, d, [(i, i + 1, t), (d - 2 - i, d - 1 - i, -t)]))
            gens.append(_elementary(field, d, [(i + 1, i, t), (d - 1 - i, d - 2 - i, -t)]))
    for t in field.basis():
        gens.append(_elementary(field, d, [(m - 1, m, t)]))
        gens.append(_elementary(field, d, [(m, m - 1, t)]))
    if level is Level.DELTA:
        zeta = field.primitive_element
        gens.append(diagonal(field, [zeta] * m + [field.gf(1)] * m))
    return gens


def _unitary_generators(field: FieldParams, d: int, level: Level) -> list[MatrixQ]:
    m = d // 2
    sigma = lambda x: conjugate(field, x)  # noqa: E731
    gens = []
    for i in range(m - 1):
        for t in field.basis():
            gens.append(_elementary(field, d, [(i, i + 1, t), (d - 2 - i, d - 1 - i, -sigma(t))]))
            gens.append(_elementary(field, d, [(i + 1, i, t), (d - 1 - i, d - 2 - i, -sigma(t))]))
    trace_zero = _trace_zero_basis(field)
    if d % 2 == 0:
        for s in trace_zero:
            gens.append(_elementary(field, d, [(m - 1, m, s)]))
            gens.append(_elementary(field, d, [(m, m - 1, s)]))
    else:
        mid, a, a_star = m, m - 1, m + 1
        c0 = _trace_one(field)
        for t in field.basis():
            s = -(t * sigma(t)) * c0
            gens.append(_elementary(field, d, [(a, mid, t), (mid, a_star, -sigma(t)), (a, a_star, s)]))
            gens.append(_elementary(field, d, [(a_star, mid, t), (mid, a, -sigma(t)), (a_star, a, s)]))
        for s in trace_zero:
            gens.append(_elementary(field, d, [(a, a_star, s)]))
            gens.append(_elementary(field, d, [(a_star, a, s)]))
    if level is Level.DELTA:
        zeta = field.primitive_element
        ones = [field.gf(1)] * (d - 2)
        gens.append(diagonal(field, [zeta] + ones + [sigma(zeta) ** -1]))
        gens.append(scalar_matrix(field, d, zeta))
    return gens


def _eichler(field: FieldParams, form: FormData, u: galois.FieldArray, w: galois.FieldArray) -> MatrixQ:
    """v -> v + B(v,u) w - B(v,w) u - Q(w) B(v,u) u for singular u and w in u-perp."""
    bilinear = form.bilinear()
    d = bilinear.shape[0]
    bu = field_product(field, bilinear, u[:, np.newaxis])[:, 0]
    bw = field_product(field, bilinear, w[:, np.newaxis])[:, 0]
    qw = field_product(field, field_product(field, w[np.newaxis, :], form.gram.entries), w[:, np.newaxis])[0, 0]
    entries = (
        field.gf.Identity(d)
        + bu[:, np.newaxis] * w[np.newaxis, :]
        - bw[:, np.newaxis] * u[np.newaxis, :]
        - qw * (bu[:, np.newaxis] * u[np.newaxis, :])
    )
    return MatrixQ(field, entries)


def _reflection(field: FieldParams, form: FormData, x: galois.FieldArray) -> MatrixQ:
    bilinear = form.bilinear()
    d = bilinear.shape[0]
    bx = field_product(field, bilinear, x[:, np.newaxis])[:, 0]
    qx = field_product(field, field_product(field, x[np.newaxis, :], form.gram.entries), x[:, np.newaxis])[0, 0]
    return MatrixQ(field, field.gf.Identity(d) - (bx[:, np.newaxis] * x[np.newaxis, :]) / qx)


def _norm_block(field: FieldParams, target: FieldElement) -> galois.FieldArray:
    """A 2x2 block scaling x^2 - nu y^2 by ``target``."""
    gf = field.gf
    nu = field.primitive_element
    ys = gf.elements
    values = target + nu * ys**2
    squares = values.is_square()
    index = int(np.flatnonzero(squares)[0])
    x0 = np.sqrt(values[index : index + 1])[0]
    y0 = ys[index]
    block = gf.Zeros((2, 2))
    block[0, 0] = x0
    block[0, 1] = y0
    block[1, 0] = nu * y0
    block[1, 1] = x0
    return block


def _orthogonal_generators(case: GroupCase, form: FormData, level: Level) -> list[MatrixQ]:
    field, d, family = case.field, case.d, case.family
    gf = field.gf
    m = d // 2
    e0 = gf.Zeros(d)
    e0[0] = 1
    f0 = gf.Zeros(d)
    f0[d - 1] = 1
    gens = []
    for u in (e0, f0):
        for b in range(1, d - 1):
            for c in field.basis():
                w = gf.Zeros(d)
                w[b] = c
                gens.append(_eichler(field, form, u, w))
    if level is Level.DELTA:
        nu = field.primitive_element
        gens.append(_reflection(field, form, e0 + f0))
        gens.append(_reflection(field, form, e0 + nu * f0))
        zeta = field.primitive_element
        if family is Family.ORTHOGONAL_PLUS:
            gens.append(diagonal(field, [zeta] * m + [gf(1)] * m))
        elif family is Family.ORTHOGONAL_MINUS:
            entries = gf.Identity(d)
            for i in range(m - 1):
                entries[i, i] = zeta
            entries[m - 1 : m + 1, m - 1 : m + 1] = _norm_block(field, zeta)
            gens.append(MatrixQ(field, entries))
        else:
            gens.append(scalar_matrix(field, d, zeta))
    return gens


def check_supported(case: GroupCase) -> None:
    family, d, field = case.family, case.d, case.field
    if family.is_orthogonal and field.p == 2:
        raise UnsupportedCaseError("orthogonal groups are supported for odd q only")
    if family in (Family.ORTHOGONAL_PLUS, Family.ORTHOGONAL_MINUS) and d < 4:
        raise UnsupportedCaseError("orthogonal plus/minus groups need d >= 4")


def standard_generators(case: GroupCase, level: Level | str = Level.OMEGA) -> tuple[MatrixQ, ...]:
    """Generators of Omega (``level="omega"``) or Delta (``level="delta"``)."""
    level = Level(level)
    check_supported(case)
    field, d, family = case.field, case.d, case.family
    if family is Family.LINEAR:
        gens = _linear_generators(field, d, level)
    elif family is Family.SYMPLECTIC:
        gens = _symplectic_generators(field, d, level)
    elif family is Family.UNITARY:
        gens = _unitary_generators(field, d, level)
    else:
        gens = _orthogonal_generators(case, standard_form(case), level)
    logger.debug("built %d %s-level generators for %s", len(gens), level.value, case.label())
    return tuple(gens)


def standard_group(case: GroupCase, level: Level | str = Level.OMEGA) -> GroupInput:
    return GroupInput(case, standard_form(case), standard_generators(case, level))


# -- orders --------------------------------------------------------------------


def group_order_gl(d: int, q: int, limits: Optional[LimitsConfig] = None) -> int:
    """|GL(d, q)| = q^(d choose 2) * prod_{i<=d} (q^i - 1)."""
    limits = limits or LimitsConfig()
    if d < 1 or q < 2:
        raise ValueError("group_order_gl needs d >= 1 and q >= 2")
    if d > limits.max_dimension or q > limits.max_field_order:
        raise MagnitudeOverflowError(f"GL({d},{q}) exceeds the configured caps")
    return q ** (d * (d - 1) // 2) * math.prod(q**i - 1 for i in range(1, d + 1))


def classical_group_order(case: GroupCase) -> int:
    """Order of the Omega-level group of ``case`` (q odd for orthogonal)."""
    d, q = case.d, case.q
    m = d // 2
    family = case.family
    if family is Family.LINEAR:
        return group_order_gl(d, q) // (q - 1)
    if family is Family.SYMPLECTIC:
        return q ** (m * m) * math.prod(q ** (2 * i) - 1 for i in range(1, m + 1))
    if family is Family.UNITARY:
        q0 = math.isqrt(q)
        return q0 ** (d * (d - 1) // 2) * math.prod(q0**i - (-1) ** i for i in range(2, d + 1))
    check_supported(case)
    if family is Family.ORTHOGONAL_CIRCLE:
        return q ** (m * m) * math.prod(q ** (2 * i) - 1 for i in range(1, m + 1)) // 2
    sign = 1 if family is Family.ORTHOGONAL_PLUS else -1
    body = math.prod(q ** (2 * i) - 1 for i in range(1, m))
    return q ** (m * (m - 1)) * (q**m - sign) * body // 2


# -- constructions outside the classical families --------------------------------


def _linear_case(field: FieldParams, d: int) -> GroupCase:
    return GroupCase(Family.LINEAR, d, field)


def extension_field_group(base: FieldParams, n: int, degree: int) -> GroupInput:
    """GL(n, p^degree) with its Frobenius, written over GF(p) in dimension n*degree."""
    if not base.is_prime:
        raise UnsupportedCaseError("extension-field blow-ups are built over prime fields")
    big = field_make(base.p, degree)
    gf_big = big.gf
    p = base.p

    def embed(value) -> np.ndarray:
        rows = []
        for i in range(degree):
            product = gf_big(p**i) * value
            rows.append(_fp_coordinates(big, product))
        return np.asarray(rows, dtype=np.int64)

    def blow_up(matrix: MatrixQ) -> MatrixQ:
        raw = np.zeros((n * degree, n * degree), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                raw[i * degree : (i + 1) * degree, j * degree : (j + 1) * degree] = embed(matrix.entries[i, j])
        return MatrixQ(base, base.gf(raw))

    frobenius_rows = np.asarray([_fp_coordinates(big, gf_big(p**i) ** p) for i in range(degree)], dtype=np.int64)
    frobenius = MatrixQ(base, base.gf(frobenius_rows))
    gens = [blow_up(g) for g in _linear_generators(big, n, Level.DELTA)] if n > 1 else [
        blow_up(diagonal(big, [big.primitive_element]))
    ]
    gens.append(block_diagonal(base, [frobenius] * n))
    return GroupInput(_linear_case(base, n * degree), FormData.none(), tuple(gens))


def monomial_group(field: FieldParams, d: int) -> GroupInput:
    """GL(1, q) wr S_d as monomial matrices."""
    gf = field.gf
    swap = gf.Identity(d)
    swap[[0, 1], :] = swap[[1, 0], :]
    cycle = gf.Zeros((d, d))
    for i in range(d):
        cycle[i, (i + 1) % d] = 1
    gens = (
        diagonal(field, [field.primitive_element] + [gf(1)] * (d - 1)),
        MatrixQ(field, swap),
        MatrixQ(field, cycle),
    )
    return GroupInput(_linear_case(field, d), FormData.none(), gens)


def subfield_scalar_group(field: FieldParams, d: int, sub_degree: int) -> GroupInput:
    """GL(d, p^sub_degree) extended by the scalars of GL(d, q)."""
    if field.a % sub_degree or sub_degree == field.a:
        raise UnsupportedCaseError(f"GF({field.p}^{sub_degree}) is not a proper subfield of {field}")
    q0 = field.p**sub_degree
    zeta = field.primitive_element
    zeta0 = zeta ** ((field.q - 1) // (q0 - 1))
    gens = []
    for k in range(sub_degree):
        c = zeta0**k
        gens.append(_elementary(field, d, [(0, 1, c)]))
        gens.append(_elementary(field, d, [(1, 0, c)]))
    gens.append(_signed_cycle(field, d))
    gens.append(diagonal(field, [zeta0] + [field.gf(1)] * (d - 1)))
    gens.append(scalar_matrix(field, d, zeta))
    return GroupInput(_linear_case(field, d), FormData.none(), tuple(gens))


def block_triangular_group(field: FieldParams, d1: int, d2: int) -> GroupInput:
    """A reducible group fixing the span of the last ``d2`` basis vectors."""
    gens = []
    for g in _linear_generators(field, d1, Level.DELTA) if d1 > 1 else [diagonal(field, [field.primitive_element])]:
        gens.append(block_diagonal(field, [g, identity(field, d2)]))
    for g in _linear_generators(field, d2, Level.DELTA) if d2 > 1 else [diagonal(field, [field.primitive_element])]:
        gens.append(block_diagonal(field, [identity(field, d1), g]))
    gens.append(_elementary(field, d1 + d2, [(0, d1, field.gf(1))]))
    return GroupInput(_linear_case(field, d1 + d2), FormData.none(), tuple(gens))
