"""Dense linear algebra over GF(q).

Vectors are rows and act on the right (``v -> v @ g``); every subspace is
stored as a row basis. Matrices over prime fields are multiplied through
float64 BLAS and reduced mod p, which is exact while ``d * p**2 < 2**53``
(guaranteed by the default caps). Extension fields go through :mod:`galois`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence
import logging

import galois
import numpy as np

from .config import LimitsConfig
from .errors import (
    DimensionMismatchError,
    FieldMismatchError,
    MagnitudeOverflowError,
    SingularMatrixError,
)
from .finite_field import FieldParams, Poly

logger = logging.getLogger(__name__)


def as_field_array(field: FieldParams, raw) -> galois.FieldArray:
    """Wrap raw integer encodings as a field array of ``field``."""
    gf = field.gf
    return gf(np.asarray(raw, dtype=np.int64).astype(gf.dtypes[0]))


def raw_entries(values: galois.FieldArray) -> np.ndarray:
    """Integer encodings of ``values`` as a plain int64 array."""
    return values.view(np.ndarray).astype(np.int64)


def field_product(field: FieldParams, left: galois.FieldArray, right: galois.FieldArray) -> galois.FieldArray:
    """Matrix product of two 2-D field arrays of compatible shape."""
    if field.is_prime:
        product = np.matmul(
            left.view(np.ndarray).astype(np.float64),
            right.view(np.ndarray).astype(np.float64),
        )
        return as_field_array(field, np.fmod(product, field.p).astype(np.int64))
    return left @ right


@dataclass(frozen=True, eq=False, slots=True)
class MatrixQ:
    """A square matrix over ``field``; immutable, hashable by its entries."""

    field: FieldParams
    entries: galois.FieldArray

    def __post_init__(self) -> None:
        entries = self.entries
        if not isinstance(entries, self.field.gf):
            entries = as_field_array(self.field, entries)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1] or entries.shape[0] < 1:
            raise DimensionMismatchError(f"expected a nonempty square matrix, got shape {entries.shape}")
        entries = entries.copy()
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)

    @property
    def d(self) -> int:
        return int(self.entries.shape[0])

    @property
    def raw(self) -> np.ndarray:
        return raw_entries(self.entries)

    def key(self) -> bytes:
        """Row-major encodings as bytes; equal keys mean equal matrices."""
        return self.raw.tobytes()

    def rows(self) -> list[list[int]]:
        return self.raw.tolist()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixQ):
            return NotImplemented
        return self.field == other.field and self.d == other.d and self.key() == other.key()

    def __hash__(self) -> int:
        return hash((self.field, self.d, self.key()))

    def __matmul__(self, other: "MatrixQ") -> "MatrixQ":
        return mat_mul(self, other)

    def __repr__(self) -> str:
        return f"MatrixQ({self.field}, d={self.d}, rows={self.rows()})"


# -- constructors ------------------------------------------------------------


def matrix_from_rows(field: FieldParams, rows: Sequence[Sequence[int]]) -> MatrixQ:
    raw = np.asarray(rows, dtype=np.int64)
    if raw.size and (raw.min() < 0 or raw.max() >= field.q):
        raise ValueError(f"matrix entries must lie in [0, {field.q})")
    return MatrixQ(field, as_field_array(field, raw))


def identity(field: FieldParams, d: int) -> MatrixQ:
    return MatrixQ(field, field.gf.Identity(d))


def scalar_matrix(field: FieldParams, d: int, scalar) -> MatrixQ:
    return MatrixQ(field, field.gf.Identity(d) * field.gf(scalar))


def diagonal(field: FieldParams, values: Sequence) -> MatrixQ:
    d = len(values)
    entries = field.gf.Zeros((d, d))
    for i, value in enumerate(values):
        entries[i, i] = value
    return MatrixQ(field, entries)


def companion(field: FieldParams, poly: Poly) -> MatrixQ:
    """Companion matrix of a monic ``poly``: ones above the diagonal, last row -c_i."""
    d = poly.degree
    if d < 1:
        raise ValueError("companion matrix needs a polynomial of degree at least 1")
    gf = field.gf
    coeffs = gf(poly.coeffs.view(np.ndarray).astype(np.int64))[::-1]
    if coeffs[d] != 1:
        raise ValueError("companion matrix needs a monic polynomial")
    entries = gf.Zeros((d, d))
    for i in range(d - 1):
        entries[i, i + 1] = 1
    entries[d - 1, :] = -coeffs[:d]
    return MatrixQ(field, entries)


def block_diagonal(field: FieldParams, blocks: Iterable[MatrixQ]) -> MatrixQ:
    blocks = list(blocks)
    d = sum(block.d for block in blocks)
    entries = field.gf.Zeros((d, d))
    offset = 0
    for block in blocks:
        _check_field(field, block)
        entries[offset : offset + block.d, offset : offset + block.d] = block.entries
        offset += block.d
    return MatrixQ(field, entries)


# -- operations --------------------------------------------------------------


def _check_field(field: FieldParams, matrix: MatrixQ) -> None:
    if matrix.field != field:
        raise FieldMismatchError(f"matrix over {matrix.field} where {field} was expected")


def _check_pair(a: MatrixQ, b: MatrixQ) -> None:
    if a.field != b.field:
        raise FieldMismatchError(f"cannot combine matrices over {a.field} and {b.field}")
    if a.d != b.d:
        raise DimensionMismatchError(f"cannot combine {a.d}x{a.d} and {b.d}x{b.d} matrices")


def check_dimension(d: int, limits: Optional[LimitsConfig] = None) -> None:
    limits = limits or LimitsConfig()
    if d > limits.max_dimension:
        raise MagnitudeOverflowError(f"dimension {d} exceeds cap {limits.max_dimension}")


def mat_mul(a: MatrixQ, b: MatrixQ) -> MatrixQ:
    _check_pair(a, b)
    return MatrixQ(a.field, field_product(a.field, a.entries, b.entries))


def mat_add(a: MatrixQ, b: MatrixQ) -> MatrixQ:
    _check_pair(a, b)
    return MatrixQ(a.field, a.entries + b.entries)


def mat_scale(a: MatrixQ, scalar) -> MatrixQ:
    return MatrixQ(a.field, a.entries * a.field.gf(scalar))


def mat_transpose(a: MatrixQ) -> MatrixQ:
    return MatrixQ(a.field, a.entries.T)


def mat_inverse(a: MatrixQ) -> MatrixQ:
    try:
        inverse = np.linalg.inv(a.entries)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrixError("matrix is singular") from exc
    return MatrixQ(a.field, inverse)


def mat_det(a: MatrixQ) -> galois.FieldArray:
    return np.linalg.det(a.entries)


def mat_rank(a: MatrixQ) -> int:
    return int(np.linalg.matrix_rank(a.entries))


def mat_is_identity(a: MatrixQ) -> bool:
    raw = a.raw
    return bool(np.array_equal(raw, np.eye(a.d, dtype=np.int64)))


def mat_power(a: MatrixQ, exponent: int) -> MatrixQ:
    if exponent < 0:
        return mat_power(mat_inverse(a), -exponent)
    result = identity(a.field, a.d)
    square = a
    while exponent:
        if exponent & 1:
            result = mat_mul(result, square)
        exponent >>= 1
        if exponent:
            square = mat_mul(square, square)
    return result


def commutator(x: MatrixQ, y: MatrixQ) -> MatrixQ:
    """The commutator ``x^-1 y^-1 x y``."""
    return mat_mul(mat_mul(mat_inverse(x), mat_inverse(y)), mat_mul(x, y))


def left_nullspace_rows(field: FieldParams, values: galois.FieldArray) -> galois.FieldArray:
    """Basis in reduced row echelon form of ``{v : v @ values = 0}``."""
    basis = values.T.null_space()
    if basis.shape[0] == 0:
        return field.gf.Zeros((0, values.shape[0]))
    return basis.row_reduce()


def mat_nullspace(a: MatrixQ) -> galois.FieldArray:
    """Row basis (fully reduced echelon form) of ``{v : v a = 0}``."""
    return left_nullspace_rows(a.field, a.entries)


def mat_poly_eval(poly: Poly, a: MatrixQ) -> MatrixQ:
    """Evaluate ``poly`` at ``a`` by Horner's rule."""
    gf = a.field.gf
    eye = gf.Identity(a.d)
    coeffs = gf(poly.coeffs.view(np.ndarray).astype(np.int64))
    result = eye * coeffs[0]
    for coeff in coeffs[1:]:
        result = field_product(a.field, result, a.entries) + eye * coeff
    return MatrixQ(a.field, result)


# -- characteristic polynomials ---------------------------------------------


def _hessenberg(field: FieldParams, h: galois.FieldArray) -> galois.FieldArray:
    """Reduce ``h`` in place to upper Hessenberg form by similarity."""
    d = h.shape[0]
    for j in range(d - 2):
        below = h[j + 1 :, j].view(np.ndarray)
        nonzero = np.flatnonzero(below)
        if nonzero.size == 0:
            continue
        i = j + 1 + int(nonzero[0])
        if i != j + 1:
            h[[i, j + 1], :] = h[[j + 1, i], :]
            h[:, [i, j + 1]] = h[:, [j + 1, i]]
        u = h[j + 2 :, j] / h[j + 1, j]
        h[j + 2 :, :] = h[j + 2 :, :] - u[:, np.newaxis] * h[j + 1, :][np.newaxis, :]
        h[:, j + 1] = h[:, j + 1] + field_product(field, h[:, j + 2 :], u[:, np.newaxis])[:, 0]
    return h


def _hessenberg_charpoly(field: FieldParams, h: galois.FieldArray) -> galois.FieldArray:
    """Ascending coefficients of det(tI - h) for upper Hessenberg ``h``."""
    gf = field.gf
    d = h.shape[0]
    table = gf.Zeros((d + 1, d + 1))
    table[0, 0] = 1
    products = gf.Zeros(0)
    for m in range(1, d + 1):
        previous = table[m - 1]
        shifted = gf.Zeros(d + 1)
        shifted[1:] = previous[:-1]
        row = shifted - h[m - 1, m - 1] * previous
        if m > 1:
            grown = gf.Ones(m - 1)
            grown[1:] = products
            products = grown * h[m - 1, m - 2]
            column = h[np.arange(m - 2, -1, -1), m - 1]
            earlier = table[np.arange(m - 2, -1, -1)]
            row = row - field_product(field, (products * column)[np.newaxis, :], earlier)[0]
        table[m] = row
    return table[d]


def mat_charpoly(a: MatrixQ) -> Poly:
    """Monic characteristic polynomial det(tI - a) via Hessenberg reduction."""
    h = _hessenberg(a.field, a.entries.copy())
    ascending = _hessenberg_charpoly(a.field, h)
    return galois.Poly(ascending[::-1])


def batched_charpoly(field: FieldParams, stack: galois.FieldArray) -> galois.FieldArray:
    """Characteristic polynomials of a stack of matrices, shape ``(n, d + 1)``.

    Division free (Berkowitz), so one pass handles every matrix of the stack
    with no pivoting. Rows are ascending coefficients.
    """
    gf = field.gf
    n, d, _ = stack.shape
    coeffs = [gf.Ones(n)]
    for r in range(d):
        toeplitz = [gf.Ones(n), -stack[:, r, r]]
        w = stack[:, :r, r]
        for k in range(r):
            acc = gf.Zeros(n)
            for j in range(r):
                acc = acc + stack[:, r, j] * w[:, j]
            toeplitz.append(-acc)
            if k < r - 1:
                nxt = gf.Zeros((n, r))
                for j in range(r):
                    nxt = nxt + stack[:, :r, j] * w[:, j][:, np.newaxis]
                w = nxt
        updated = []
        for i in range(r + 2):
            acc = gf.Zeros(n)
            for k in range(max(0, i - len(toeplitz) + 1), min(i, r) + 1):
                acc = acc + toeplitz[i - k] * coeffs[k]
            updated.append(acc)
        coeffs = updated
    out = gf.Zeros((n, d + 1))
    for i, column in enumerate(coeffs):
        out[:, d - i] = column
    return out


# -- text form -----------------------------------------------------------------


def parse_matrix(field: FieldParams, text: str) -> MatrixQ:
    """Parse ``"r0;r1;..."`` where each row is whitespace separated encodings."""
    rows = [[int(token) for token in row.split()] for row in text.strip().split(";") if row.strip()]
    if not rows or any(len(row) != len(rows) for row in rows):
        raise DimensionMismatchError("matrix text must describe a square matrix")
    return matrix_from_rows(field, rows)


def format_matrix_rows(matrix: MatrixQ) -> list[str]:
    return [" ".join(str(value) for value in row) for row in matrix.rows()]
