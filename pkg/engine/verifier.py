"""Verification of submodular <=> convex / subadditive integral

Both directions are checked at desk scale: a capacity that fails
submodularity must yield an indicator counterexample, and a submodular
capacity must pass subadditivity on every pair of small integer
functions. Any disagreement found by a scan is a bug in this code.
"""

import itertools
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, NamedTuple, Optional, Tuple

import numpy as np

from engine.capacity import (
    Capacity,
    Event,
    ViolationKind,
    ViolationReport,
    check_submodular_exhaustive,
    check_submodular_local,
    random_monotone_capacity,
    random_submodular_capacity,
    to_fraction,
)
from engine.choquet import (
    PointFunction,
    choquet_integral,
    indicator,
    integer_integral_table,
)
from utils import config
from utils.error_handler import (
    BadLambdaError,
    BudgetExceededError,
    CrossCheckError,
    DimensionMismatchError,
    ValidationError,
)

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 10_000


def check_subadditivity(c: Capacity, X: PointFunction, Y: PointFunction) -> Optional[ViolationReport]:
    if len(X) != len(Y):
        raise DimensionMismatchError(len(X), len(Y))
    lhs = choquet_integral(c, X + Y)
    rhs = choquet_integral(c, X) + choquet_integral(c, Y)
    if lhs > rhs:
        return ViolationReport(ViolationKind.SUBADDITIVITY, (X, Y), lhs, rhs)
    return None


def check_convexity(c: Capacity, X: PointFunction, Y: PointFunction, lam: Any) -> Optional[ViolationReport]:
    lam = to_fraction(lam)
    if not 0 <= lam <= 1:
        raise BadLambdaError(lam)
    if len(X) != len(Y):
        raise DimensionMismatchError(len(X), len(Y))
    lhs = choquet_integral(c, lam * X + (1 - lam) * Y)
    rhs = lam * choquet_integral(c, X) + (1 - lam) * choquet_integral(c, Y)
    if lhs > rhs:
        return ViolationReport(ViolationKind.CONVEXITY, (X, Y), lhs, rhs, lam=lam)
    return None


def convexity_grid_violation(c: Capacity, X: PointFunction, Y: PointFunction,
                             steps: int = 8) -> Optional[ViolationReport]:
    """First lambda in {0, 1/steps, ..., 1} where convexity fails"""
    for k in range(steps + 1):
        report = check_convexity(c, X, Y, Fraction(k, steps))
        if report is not None:
            return report
    return None


def indicator_counterexample(c: Capacity) -> Optional[Tuple[Event, Event, ViolationReport]]:
    """Turn a submodularity failure on (A, B) into X = 1_A, Y = 1_B"""
    failure = check_submodular_exhaustive(c)
    if failure is None:
        return None
    a_event, b_event = failure.witnesses
    report = check_subadditivity(c, indicator(a_event), indicator(b_event))
    # int(1_A + 1_B) = c(A|B) + c(A&B)
    if report is None or (report.lhs, report.rhs) != (failure.lhs, failure.rhs):
        raise CrossCheckError(
            f"indicator pair A={a_event} B={b_event} does not reproduce the submodularity gap",
            details={'capacity': str(c)},
        )
    return a_event, b_event, report


def pairs_required(n: int, max_value: int) -> int:
    return (max_value + 1) ** (2 * n)


def _check_max_value(max_value: int) -> None:
    if not isinstance(max_value, int) or max_value < 0:
        raise ValidationError("max_value", f"must be a nonnegative integer, got {max_value!r}")


def exhaustive_subadditivity(c: Capacity, max_value: int,
                             budget: int = None) -> Optional[ViolationReport]:
    """Subadditivity over every pair of functions Omega -> {0..max_value}"""
    _check_max_value(max_value)
    budget = budget or config.SCAN_BUDGET
    required = pairs_required(c.n, max_value)
    if required > budget:
        raise BudgetExceededError(required, budget)

    integrate, denominator = integer_integral_table(c)
    functions = list(itertools.product(range(max_value + 1), repeat=c.n))
    integrals = {f: integrate(f) for f in functions}
    for x in functions:
        for y in functions:
            lhs = integrate(tuple(a + b for a, b in zip(x, y)))
            rhs = integrals[x] + integrals[y]
            if lhs > rhs:
                return ViolationReport(
                    ViolationKind.SUBADDITIVITY,
                    (PointFunction.of(x), PointFunction.of(y)),
                    Fraction(lhs, denominator), Fraction(rhs, denominator),
                )
    return None


def sampled_subadditivity(c: Capacity, max_value: int, samples: int = DEFAULT_SAMPLES,
                          seed: int = 0) -> Tuple[Optional[ViolationReport], Fraction]:
    """Randomized fallback; returns the report and the covered fraction"""
    _check_max_value(max_value)
    rng = np.random.default_rng(seed)
    integrate, denominator = integer_integral_table(c)
    draws = rng.integers(0, max_value + 1, size=(samples, 2, c.n))
    coverage = min(Fraction(1), Fraction(samples, pairs_required(c.n, max_value)))
    for x_row, y_row in draws:
        x = tuple(int(v) for v in x_row)
        y = tuple(int(v) for v in y_row)
        lhs = integrate(tuple(a + b for a, b in zip(x, y)))
        rhs = integrate(x) + integrate(y)
        if lhs > rhs:
            report = ViolationReport(
                ViolationKind.SUBADDITIVITY,
                (PointFunction.of(x), PointFunction.of(y)),
                Fraction(lhs, denominator), Fraction(rhs, denominator),
            )
            return report, coverage
    return None, coverage


class Disagreement(NamedTuple):
    index: int
    capacity: Capacity
    report: Optional[ViolationReport]
    reason: str


@dataclass
class ScanRecord:
    index: int
    generator: str
    seed: int
    capacity: Capacity
    submodular: bool
    local_agrees: bool
    coverage: Fraction
    disagreement: Optional[Disagreement] = None

    @property
    def verdict(self) -> str:
        return "ok" if self.disagreement is None else "disagreement"


@dataclass
class ScanReport:
    capacities_tested: int
    submodular_count: int
    agreements: int
    disagreements: List[Disagreement]
    seed: int
    n: int = 0
    max_value: int = 0
    records: List[ScanRecord] = field(default_factory=list)
    coverage: Fraction = Fraction(1)
    elapsed_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.disagreements


def capacity_seed(seed: int, index: int) -> int:
    """Independent, reproducible seed for the index-th capacity of a scan"""
    return int(np.random.SeedSequence([seed, index]).generate_state(1)[0])


def _scan_one(index: int, n: int, max_value: int, seed: int, budget: int,
              allow_sampling: bool, samples: int) -> ScanRecord:
    sub_seed = capacity_seed(seed, index)
    if index % 2 == 0:
        generator, c = "submodular", random_submodular_capacity(n, sub_seed)
    else:
        generator, c = "monotone", random_monotone_capacity(n, sub_seed)

    exhaustive = check_submodular_exhaustive(c)
    local = check_submodular_local(c)
    submodular = exhaustive is None
    record = ScanRecord(index, generator, sub_seed, c, submodular,
                        local_agrees=(local is None) == submodular, coverage=Fraction(1))

    def enumerate_pairs() -> Optional[ViolationReport]:
        if pairs_required(n, max_value) <= budget:
            return exhaustive_subadditivity(c, max_value, budget)
        report, record.coverage = sampled_subadditivity(c, max_value, samples, sub_seed)
        return report

    if not record.local_agrees:
        record.disagreement = Disagreement(index, c, exhaustive or local,
                                           "local and exhaustive submodularity checks disagree")
    elif submodular:
        report = enumerate_pairs()
        if report is not None:
            record.disagreement = Disagreement(index, c, report,
                                               "submodular capacity violates subadditivity")
    else:
        counterexample = indicator_counterexample(c)
        if counterexample is None:
            record.disagreement = Disagreement(index, c, exhaustive,
                                               "no indicator counterexample for a non-submodular capacity")
        elif (max_value >= 1 and pairs_required(n, max_value) <= budget
              and exhaustive_subadditivity(c, max_value, budget) is None):
            record.disagreement = Disagreement(index, c, counterexample[2],
                                               "enumeration misses the indicator counterexample")
    return record


def equivalence_scan(n: int, num_capacities: int, max_value: int, seed: int,
                     budget: int = None, workers: int = None,
                     allow_sampling: bool = False, samples: int = DEFAULT_SAMPLES) -> ScanReport:
    """Check both directions on a mix of random capacities"""
    if not isinstance(n, int) or n < 1:
        raise ValidationError("n", f"ground-set size must be positive, got {n!r}")
    if num_capacities < 0:
        raise ValidationError("count", f"must be nonnegative, got {num_capacities}")
    _check_max_value(max_value)
    budget = budget or config.SCAN_BUDGET
    workers = workers or config.SCAN_WORKERS
    required = pairs_required(n, max_value)
    if required > budget and not allow_sampling:
        raise BudgetExceededError(required, budget)

    start_time = time.time()
    logger.info(f"Scanning {num_capacities} capacities (n={n}, max_value={max_value}, seed={seed})")

    def task(index: int) -> ScanRecord:
        return _scan_one(index, n, max_value, seed, budget, allow_sampling, samples)

    # Fraction work is GIL-bound; the pool changes scheduling, never the records
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(task, range(num_capacities)))
    else:
        records = [task(i) for i in range(num_capacities)]
    records.sort(key=lambda r: r.index)

    disagreements = [r.disagreement for r in records if r.disagreement is not None]
    for d in disagreements:
        logger.error(f"Disagreement on capacity {d.index}: {d.reason}")

    return ScanReport(
        capacities_tested=len(records),
        submodular_count=sum(1 for r in records if r.submodular),
        agreements=sum(1 for r in records if r.disagreement is None),
        disagreements=disagreements,
        seed=seed,
        n=n,
        max_value=max_value,
        records=records,
        coverage=min((r.coverage for r in records), default=Fraction(1)),
        elapsed_seconds=time.time() - start_time,
    )


__all__ = [
    "check_subadditivity",
    "check_convexity",
    "convexity_grid_violation",
    "indicator_counterexample",
    "pairs_required",
    "exhaustive_subadditivity",
    "sampled_subadditivity",
    "Disagreement",
    "ScanRecord",
    "ScanReport",
    "capacity_seed",
    "equivalence_scan",
]
