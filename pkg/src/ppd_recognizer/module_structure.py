"""Irreducibility of matrix groups by the Norton test, and centralizer dimensions."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence
import logging

import galois
import numpy as np

from .config import MeatAxeConfig
from .errors import DimensionMismatchError, FieldMismatchError
from .finite_field import FieldParams, Poly, poly_sfdd
from .matrices import (
    MatrixQ,
    field_product,
    left_nullspace_rows,
    mat_charpoly,
    mat_poly_eval,
    mat_transpose,
)

logger = logging.getLogger(__name__)


class ModuleStatus(str, Enum):
    IRREDUCIBLE = "IRREDUCIBLE"
    REDUCIBLE = "REDUCIBLE"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True, slots=True)
class IrreducibilityReport:
    """Outcome of the irreducibility test; ``witness`` spans an invariant subspace."""

    status: ModuleStatus
    witness: Optional[galois.FieldArray] = None
    attempts: int = 0

    @property
    def is_irreducible(self) -> bool:
        return self.status is ModuleStatus.IRREDUCIBLE


def _check_generators(generators: Sequence[MatrixQ]) -> tuple[FieldParams, int]:
    if not generators:
        raise DimensionMismatchError("need at least one generator")
    field, d = generators[0].field, generators[0].d
    for g in generators:
        if g.field != field:
            raise FieldMismatchError(f"generators over {g.field} and {field}")
        if g.d != d:
            raise DimensionMismatchError(f"generators of degree {g.d} and {d}")
    return field, d


def spin(field: FieldParams, seeds: galois.FieldArray, generators: Sequence[MatrixQ]) -> galois.FieldArray:
    """Row-reduced basis of the smallest invariant subspace containing ``seeds``."""
    gf = field.gf
    d = generators[0].d
    basis = gf.Zeros((0, d))
    queue = [row for row in seeds]
    while queue:
        candidate = queue.pop()
        if basis.shape[0]:
            stacked = np.vstack([basis, candidate[np.newaxis, :]]).view(gf)
            reduced = stacked.row_reduce()
            if np.linalg.matrix_rank(reduced) == basis.shape[0]:
                continue
            basis = reduced[: basis.shape[0] + 1]
        else:
            if not np.any(candidate.view(np.ndarray)):
                continue
            basis = candidate[np.newaxis, :].row_reduce()
        for g in generators:
            queue.append(field_product(field, candidate[np.newaxis, :], g.entries)[0])
        if basis.shape[0] == d:
            break
    return basis


def _candidate_factors(charpoly: Poly) -> list[Poly]:
    """Irreducible factors found cheaply, smallest degree first."""
    factors: list[Poly] = []
    for m, product in poly_sfdd(charpoly):
        if product.degree == m:
            factors.append(product)
        elif m == 1:
            t = galois.Poly.Identity(field=charpoly.field)
            factors.extend(t - root for root in product.roots())
    factors.sort(key=lambda factor: factor.degree)
    return factors


def _random_algebra_element(
    field: FieldParams, generators: Sequence[MatrixQ], rng: np.random.Generator, config: MeatAxeConfig
) -> MatrixQ:
    gf = field.gf
    d = generators[0].d
    total = gf.Zeros((d, d))
    for _ in range(config.summands):
        word = gf.Identity(d)
        for _ in range(int(rng.integers(1, config.word_length + 1))):
            word = field_product(field, word, generators[int(rng.integers(len(generators)))].entries)
        coefficient = gf(int(rng.integers(1, field.q)))
        total = total + coefficient * word
    return MatrixQ(field, total)


def is_irreducible(
    group,
    max_attempts: Optional[int] = None,
    seed: int | Sequence[int] = 0,
    config: Optional[MeatAxeConfig] = None,
) -> IrreducibilityReport:
    """Norton's irreducibility test.

    ``group`` is a :class:`GroupInput` or a plain generator sequence. For a random
    algebra element theta and an irreducible factor h of its characteristic
    polynomial, a vector of the kernel of h(theta) that spins to a proper
    subspace proves reducibility. When the kernel has dimension deg(h), a
    kernel vector spinning to the whole space together with a kernel vector of
    h(theta^T) spinning to the whole space under the transposed generators
    proves irreducibility; a proper dual spin gives an invariant subspace as its
    annihilator.
    """
    config = config or MeatAxeConfig()
    generators = list(getattr(group, "generators", group))
    attempts = config.max_attempts if max_attempts is None else max_attempts
    field, d = _check_generators(generators)
    if d == 1:
        return IrreducibilityReport(ModuleStatus.IRREDUCIBLE, attempts=0)
    rng = np.random.Generator(np.random.PCG64(seed))
    transposed = [mat_transpose(g) for g in generators]
    for attempt in range(1, attempts + 1):
        theta = _random_algebra_element(field, generators, rng, config)
        for factor in _candidate_factors(mat_charpoly(theta)):
            kernel = left_nullspace_rows(field, mat_poly_eval(factor, theta).entries)
            if kernel.shape[0] == 0:
                continue
            forward = spin(field, kernel[:1], generators)
            if forward.shape[0] < d:
                logger.debug("attempt %d: invariant subspace of dimension %d", attempt, forward.shape[0])
                return IrreducibilityReport(ModuleStatus.REDUCIBLE, forward, attempt)
            if kernel.shape[0] != factor.degree:
                continue
            dual_kernel = left_nullspace_rows(field, mat_poly_eval(factor, mat_transpose(theta)).entries)
            dual = spin(field, dual_kernel[:1], transposed)
            if dual.shape[0] < d:
                annihilator = left_nullspace_rows(field, dual.T)
                return IrreducibilityReport(ModuleStatus.REDUCIBLE, annihilator, attempt)
            return IrreducibilityReport(ModuleStatus.IRREDUCIBLE, attempts=attempt)
    logger.warning("irreducibility undecided after %d attempts", attempts)
    return IrreducibilityReport(ModuleStatus.INCONCLUSIVE, attempts=attempts)


def centralizer_dim(generators: Sequence[MatrixQ]) -> int:
    """Dimension over GF(q) of the matrices commuting with every generator."""
    field, d = _check_generators(generators)
    gf = field.gf
    eye = gf.Identity(d)
    blocks = []
    for g in generators:
        m = g.entries
        # vec(X) -> vec(X m - m X) in row-major order
        right = (eye[:, np.newaxis, :, np.newaxis] * m.T[np.newaxis, :, np.newaxis, :]).reshape(d * d, d * d)
        left = (m[:, np.newaxis, :, np.newaxis] * eye[np.newaxis, :, np.newaxis, :]).reshape(d * d, d * d)
        blocks.append(right - left)
    system = np.vstack(blocks).view(gf)
    return d * d - int(np.linalg.matrix_rank(system))
