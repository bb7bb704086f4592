"""Monte Carlo recognition of the classical subgroup Omega from ppd-elements.

A run has three stages, each allotted a third of the error budget epsilon:

1. witness ppd-elements for two different e, at least one large and one basic;
2. for every prime b dividing d, witness an e coprime to b, ruling out groups
   that preserve a GF(q^b)-structure (the b = 2 case for symplectic and
   orthogonal groups uses a centralizer test on random commutators instead);
3. witness a third value of e, ruling out the nearly simple candidates.

A positive answer is certain; a negative answer is wrong with probability
less than epsilon when the group does contain Omega.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence
import logging
import math

from sympy import primefactors

from .classical_groups import Family, GroupCase, GroupInput
from .config import LimitsConfig, RecognizerConfig
from .element_classify import PpdWitness, allowed_e, classify_element
from .errors import (
    ExponentNotAllowedError,
    GroupValidationError,
    PpdError,
    UnsupportedDimensionError,
)
from .matrices import MatrixQ, commutator
from .module_structure import ModuleStatus, centralizer_dim, is_irreducible
from .ppd_arithmetic import is_primitive_divisor, mu_distinct_primes, phi, phi_large_of
from .random_elements import SamplerState, sampler_init, sampler_next

logger = logging.getLogger(__name__)

_STAGE1_ROUND_LIMIT = 100_000


class SubgroupLevel(str, Enum):
    OMEGA = "omega"
    SO = "so"
    FULL = "full"
    SIMILITUDE = "similitude"


class Outcome(str, Enum):
    CONTAINS_OMEGA = "CONTAINS_OMEGA"
    LIKELY_NOT_OMEGA = "LIKELY_NOT_OMEGA"
    PRECONDITION_FAILED = "PRECONDITION_FAILED"
    UNSUPPORTED = "UNSUPPORTED"


@dataclass(frozen=True, slots=True)
class ProportionBounds:
    """The interval [lower, upper) holding ppd(G, e)."""

    e: int
    lower: Fraction
    upper: Fraction
    doubled: bool = False

    def contains(self, value: Fraction) -> bool:
        return self.lower <= value < self.upper


def proportion_bounds(
    case: GroupCase, e: int, subgroup_level: SubgroupLevel | str = SubgroupLevel.OMEGA
) -> ProportionBounds:
    if e not in allowed_e(case.family, case.d, case.q):
        raise ExponentNotAllowedError(f"e={e} is not allowed for {case.label()}")
    return _interval(case, e, SubgroupLevel(subgroup_level))


def _interval(case: GroupCase, e: int, level: SubgroupLevel) -> ProportionBounds:
    doubled = (
        case.family is Family.ORTHOGONAL_MINUS
        and e == case.d
        and level in (SubgroupLevel.OMEGA, SubgroupLevel.SO)
    )
    factor = 2 if doubled else 1
    return ProportionBounds(e, Fraction(factor, e + 1), Fraction(factor, e), doubled)


@dataclass(frozen=True, slots=True)
class RecognitionPlan:
    epsilon: float
    allowed: tuple[int, ...]
    N1: int
    N2: dict[int, int]
    N3: int
    commutator_primes: tuple[int, ...] = ()

    def total(self) -> int:
        return self.N1 + sum(self.N2.values()) + self.N3

    def describe(self) -> str:
        budgets = ",".join(f"{b}:{n}" for b, n in sorted(self.N2.items())) or "-"
        allowed = ",".join(str(e) for e in self.allowed)
        return f"plan allowed={allowed} N1={self.N1} N2={budgets} N3={self.N3}"

    def as_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "allowed": list(self.allowed),
            "N1": self.N1,
            "N2": {str(b): n for b, n in sorted(self.N2.items())},
            "N3": self.N3,
            "commutator_primes": list(self.commutator_primes),
        }


def _stage1_failure_bound(n: int, s_large: float, s_basic: float, lowers: Sequence[float]) -> float:
    s = sum(lowers)
    fewer_than_two = sum((1 - s + p) ** n for p in lowers) - (len(lowers) - 1) * (1 - s) ** n
    return (1 - s_large) ** n + (1 - s_basic) ** n + fewer_than_two


def _budget(target: float, success: float) -> int:
    if success >= 1:
        return 1
    return max(1, math.ceil(math.log(target) / math.log(1 - success)))


def eliminates(b: int, e: int, d: int, q: int) -> bool:
    """Whether a ppd(d, q; e)-element rules out a GF(q^b)-structure."""
    if e % b == 0:
        return False
    if b == d and e == d - 1 and is_primitive_divisor(d, q, d - 1):
        return False
    return True


def plan(
    case: GroupCase,
    epsilon: float,
    commutator_samples: int = 8,
    limits: Optional[LimitsConfig] = None,
) -> RecognitionPlan:
    """Sample budgets for the three stages, each failing with probability < epsilon/3."""
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie strictly between 0 and 1")
    d, q = case.d, case.q
    p, a = case.field.p, case.field.a
    allowed = allowed_e(case.family, d, q, limits)
    if len(allowed) < 3:
        raise UnsupportedDimensionError(
            f"{case.label()} has only {len(allowed)} allowed e values", reason="fewer than three allowed e"
        )
    lower = {e: float(_interval(case, e, SubgroupLevel.OMEGA).lower) for e in allowed}
    large = [e for e in allowed if phi_large_of(e, phi(e, q)) > 1]
    basic = [e for e in allowed if phi(a * e, p) > 1]
    if not large:
        raise UnsupportedDimensionError(f"{case.label()} has no large ppd for any allowed e", reason="no large e")
    if not basic:
        raise UnsupportedDimensionError(f"{case.label()} has no basic ppd for any allowed e", reason="no basic e")

    third = epsilon / 3
    s_large = sum(lower[e] for e in large)
    s_basic = sum(lower[e] for e in basic)
    lowers = [lower[e] for e in allowed]
    n1 = 1
    while _stage1_failure_bound(n1, s_large, s_basic, lowers) >= third:
        n1 += 1
        if n1 > _STAGE1_ROUND_LIMIT:
            raise UnsupportedDimensionError(f"no stage-1 budget for {case.label()}", reason="stage-1 budget diverges")

    mu = mu_distinct_primes(d)
    n2: dict[int, int] = {}
    commutator_primes = []
    for b in primefactors(d):
        coverage = sum(lower[e] for e in allowed if eliminates(b, e, d, q))
        if coverage > 0:
            n2[b] = _budget(epsilon / (3 * mu), coverage)
        elif b == 2 and (case.family is Family.SYMPLECTIC or case.family.is_orthogonal):
            n2[b] = max(1, commutator_samples)
            commutator_primes.append(b)
        else:
            raise UnsupportedDimensionError(
                f"no allowed e rules out a GF(q^{b})-structure for {case.label()}", reason=f"b={b} not eliminable"
            )

    ranked = sorted(lowers, reverse=True)
    n3 = _budget(third, sum(ranked[2:]))
    result = RecognitionPlan(epsilon, allowed, n1, n2, n3, tuple(commutator_primes))
    logger.info("%s for %s", result.describe(), case.label())
    return result


# -- stages --------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class WitnessRecord:
    index: int
    element: MatrixQ
    witness: PpdWitness


@dataclass(slots=True)
class WitnessPool:
    """Draws shared by all stages, with the transcript they produce."""

    state: SamplerState
    limits: LimitsConfig = field(default_factory=LimitsConfig)
    transcript: list[str] = field(default_factory=list)
    records: list[WitnessRecord] = field(default_factory=list)
    draws: int = 0

    def draw(self) -> tuple[MatrixQ, Optional[PpdWitness]]:
        element, _ = sampler_next(self.state)
        self.draws += 1
        witness = classify_element(element, self.limits)
        if witness is None:
            self.transcript.append(f"draw {self.draws} e=none large=false basic=false")
        else:
            self.transcript.append(
                f"draw {self.draws} e={witness.e} large={str(witness.is_large).lower()} "
                f"basic={str(witness.is_basic).lower()}"
            )
            self.records.append(WitnessRecord(self.draws, element, witness))
        logger.debug("%s", self.transcript[-1])
        return element, witness

    @property
    def e_values(self) -> set[int]:
        return {record.witness.e for record in self.records}

    def note(self, line: str) -> None:
        self.transcript.append(line)
        logger.info("%s", line)


def _stage1_met(pool: WitnessPool) -> bool:
    witnesses = [record.witness for record in pool.records]
    return (
        len(pool.e_values) >= 2
        and any(w.is_large for w in witnesses)
        and any(w.is_basic for w in witnesses)
    )


def stage1(pool: WitnessPool, run_plan: RecognitionPlan) -> bool:
    """Two different e, one witness large and one basic, within N1 draws."""
    for _ in range(run_plan.N1):
        pool.draw()
        if _stage1_met(pool):
            values = ",".join(str(e) for e in sorted(pool.e_values))
            pool.note(f"stage1 pass e={values} draws={pool.draws}")
            return True
    pool.note(f"stage1 fail budget={run_plan.N1}")
    return False


def _commutator_test(pool: WitnessPool, samples: int) -> int:
    commutators = []
    for _ in range(samples):
        x, _ = pool.draw()
        y, _ = pool.draw()
        commutators.append(commutator(x, y))
    return centralizer_dim(commutators)


def stage2(pool: WitnessPool, run_plan: RecognitionPlan, case: GroupCase) -> bool:
    """Rule out GF(q^b)-structures for every prime b dividing d."""
    d, q = case.d, case.q
    for b in sorted(run_plan.N2):
        if b in run_plan.commutator_primes:
            dimension = _commutator_test(pool, run_plan.N2[b])
            if dimension != 1:
                pool.note(f"stage2 fail b={b} commutator centralizer_dim={dimension}")
                return False
            pool.note(f"stage2 pass b={b} commutator centralizer_dim=1")
            continue
        found = next((r.witness.e for r in pool.records if eliminates(b, r.witness.e, d, q)), None)
        budget = run_plan.N2[b]
        while found is None and budget > 0:
            budget -= 1
            _, witness = pool.draw()
            if witness is not None and eliminates(b, witness.e, d, q):
                found = witness.e
        if found is None:
            pool.note(f"stage2 fail b={b} budget={run_plan.N2[b]}")
            return False
        pool.note(f"stage2 pass b={b} e={found}")
    return True


def stage3(pool: WitnessPool, run_plan: RecognitionPlan) -> bool:
    """A third value of e among all witnesses."""
    budget = run_plan.N3
    while len(pool.e_values) < 3 and budget > 0:
        budget -= 1
        pool.draw()
    if len(pool.e_values) >= 3:
        values = ",".join(str(e) for e in sorted(pool.e_values))
        pool.note(f"stage3 pass e={values}")
        return True
    pool.note(f"stage3 fail budget={run_plan.N3}")
    return False


# -- driver --------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class RecognitionVerdict:
    outcome: Outcome
    transcript: tuple[str, ...]
    reason: str
    failed_stage: Optional[int] = None
    plan: Optional[RecognitionPlan] = None
    witnesses: tuple[WitnessRecord, ...] = ()

    def render(self) -> str:
        return "".join(f"{line}\n" for line in self.transcript)

    def as_dict(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "reason": self.reason,
            "failed_stage": self.failed_stage,
            "plan": self.plan.as_dict() if self.plan else None,
            "witnesses": [{"draw": r.index, **r.witness.as_dict()} for r in self.witnesses],
            "transcript": list(self.transcript),
        }


def _verdict_line(outcome: Outcome, epsilon: float, seed) -> str:
    return f"verdict {outcome.value} epsilon={epsilon:g} seed={seed}"


def recognize(
    group: GroupInput,
    epsilon: float,
    seed: int,
    config: Optional[RecognizerConfig] = None,
) -> RecognitionVerdict:
    """Decide whether ``group`` contains Omega; see the module docstring."""
    config = config or RecognizerConfig()
    transcript: list[str] = []

    def finish(outcome: Outcome, reason: str, **extra) -> RecognitionVerdict:
        transcript.append(_verdict_line(outcome, epsilon, seed))
        logger.info("verdict %s (%s)", outcome.value, reason)
        return RecognitionVerdict(outcome, tuple(transcript), reason, **extra)

    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie strictly between 0 and 1")
    try:
        group.validate()
    except GroupValidationError as exc:
        transcript.append(f"precondition fail {exc.code} {exc.message}")
        return finish(Outcome.PRECONDITION_FAILED, exc.code)

    report = is_irreducible(group, seed=seed, config=config.meataxe)
    if report.status is not ModuleStatus.IRREDUCIBLE:
        transcript.append(f"precondition fail {report.status.value} attempts={report.attempts}")
        return finish(Outcome.PRECONDITION_FAILED, report.status.value)
    transcript.append(f"precondition pass IRREDUCIBLE attempts={report.attempts}")

    try:
        run_plan = plan(group.case, epsilon, config.recognition.commutator_samples, config.limits)
    except UnsupportedDimensionError as exc:
        transcript.append(f"unsupported {exc.reason}")
        return finish(Outcome.UNSUPPORTED, exc.code)
    except PpdError as exc:
        transcript.append(f"unsupported {exc.code}")
        return finish(Outcome.UNSUPPORTED, exc.code)

    state = sampler_init(group.generators, seed, config=config.sampler)
    transcript.append(f"sampler rng=PCG64 seed={seed} slots={len(state.slots)} burn_in={config.sampler.burn_in}")
    transcript.append(run_plan.describe())
    pool = WitnessPool(state, config.limits, transcript)

    stages = (
        lambda: stage1(pool, run_plan),
        lambda: stage2(pool, run_plan, group.case),
        lambda: stage3(pool, run_plan),
    )
    for number, stage in enumerate(stages, start=1):
        if not stage():
            return finish(
                Outcome.LIKELY_NOT_OMEGA,
                f"stage{number}",
                failed_stage=number,
                plan=run_plan,
                witnesses=tuple(pool.records),
            )
    return finish(Outcome.CONTAINS_OMEGA, "all stages passed", plan=run_plan, witnesses=tuple(pool.records))
