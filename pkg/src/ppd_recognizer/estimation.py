"""Sampled ppd proportions, optionally split over several independent samplers."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence
import logging

import numpy as np

from .config import RecognizerConfig
from .element_classify import classify_element
from .errors import DimensionMismatchError
from .matrices import MatrixQ
from .random_elements import sampler_init, sampler_next
from .stats import ProportionStats

logger = logging.getLogger(__name__)


def _job_sizes(samples: int, jobs: int) -> list[int]:
    base, extra = divmod(samples, jobs)
    return [base + (1 if job < extra else 0) for job in range(jobs)]


def _run_job(
    generators: Sequence[MatrixQ], samples: int, seed: int, job: int, config: RecognizerConfig, label: str
) -> ProportionStats:
    sequence = np.random.SeedSequence([seed, job])
    state = sampler_init(generators, sequence, config=config.sampler)
    stats = ProportionStats(label=label)
    for _ in range(samples):
        element, state = sampler_next(state)
        stats.record_draw(classify_element(element, config.limits))
    logger.debug("job %d finished %d samples", job, samples)
    return stats


def estimate_proportions(
    generators: Sequence[MatrixQ],
    samples: int,
    seed: int,
    jobs: int = 1,
    config: Optional[RecognizerConfig] = None,
    label: str = "",
) -> ProportionStats:
    """Classify ``samples`` random elements; job statistics merge in job order."""
    config = config or RecognizerConfig()
    if samples < 1 or jobs < 1:
        raise ValueError("samples and jobs must be positive")
    if not generators:
        raise DimensionMismatchError("need at least one generator")
    sizes = _job_sizes(samples, min(jobs, samples))
    if len(sizes) == 1:
        results = [_run_job(generators, sizes[0], seed, 0, config, label)]
    else:
        with ThreadPoolExecutor(max_workers=len(sizes)) as executor:
            futures = [
                executor.submit(_run_job, generators, size, seed, job, config, label) for job, size in enumerate(sizes)
            ]
            results = [future.result() for future in futures]
    merged = ProportionStats(label=label)
    for stats in results:
        merged.merge(stats)
    logger.info("estimated proportions from %d samples: %s", merged.samples, merged.format_summary())
    return merged
