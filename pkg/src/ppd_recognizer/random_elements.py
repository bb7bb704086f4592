"""Product replacement with an accumulator ("rattle") for random group elements.

Every draw goes through a ``numpy`` PCG64 generator so a seed fixes the whole
sequence. Inverses of the slots are kept alongside so ``slot ** -1`` never
needs a matrix inversion.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence
import logging

import numpy as np

from .config import SamplerConfig
from .errors import DimensionMismatchError
from .matrices import MatrixQ, identity, mat_inverse, mat_mul

logger = logging.getLogger(__name__)

Seed = int | Sequence[int]


@dataclass(slots=True)
class SamplerState:
    slots: list[MatrixQ]
    inverses: list[MatrixQ]
    accumulator: MatrixQ
    rng: np.random.Generator
    seed: Seed
    steps_taken: int = 0

    def describe(self) -> str:
        return f"rng=PCG64 seed={self.seed} slots={len(self.slots)}"


def _step(state: SamplerState) -> MatrixQ:
    rng = state.rng
    size = len(state.slots)
    i = int(rng.integers(size))
    j = int(rng.integers(size - 1))
    if j >= i:
        j += 1
    if rng.integers(2):
        state.slots[i] = mat_mul(state.slots[i], state.slots[j])
        state.inverses[i] = mat_mul(state.inverses[j], state.inverses[i])
    else:
        state.slots[i] = mat_mul(state.slots[i], state.inverses[j])
        state.inverses[i] = mat_mul(state.slots[j], state.inverses[i])
    state.accumulator = mat_mul(state.accumulator, state.slots[i])
    state.steps_taken += 1
    return state.accumulator


def sampler_init(
    generators: Sequence[MatrixQ],
    seed: Seed,
    m: Optional[int] = None,
    burn_in: Optional[int] = None,
    config: Optional[SamplerConfig] = None,
) -> SamplerState:
    """Fill the slots cyclically with the generators, then discard ``burn_in`` steps.

    ``m`` and ``burn_in`` override the configured values when given.
    """
    config = config or SamplerConfig()
    m = config.slots if m is None else m
    burn_in = config.burn_in if burn_in is None else burn_in
    if not generators:
        raise DimensionMismatchError("the sampler needs at least one generator")
    field, d = generators[0].field, generators[0].d
    size = max(m, 10, len(generators) + 2)
    slots = [generators[k % len(generators)] for k in range(size)]
    inverse_of = {g.key(): mat_inverse(g) for g in generators}
    inverses = [inverse_of[g.key()] for g in slots]
    state = SamplerState(
        slots=slots,
        inverses=inverses,
        accumulator=identity(field, d),
        rng=np.random.Generator(np.random.PCG64(seed)),
        seed=seed,
    )
    for _ in range(burn_in):
        _step(state)
    logger.debug("sampler ready after %d burn-in steps (%s)", burn_in, state.describe())
    return state


def sampler_next(state: SamplerState) -> tuple[MatrixQ, SamplerState]:
    """Advance one step and return the accumulator."""
    return _step(state), state
