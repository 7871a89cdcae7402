"""Capacities on a finite ground set

A capacity is stored as the table of its 2^n values indexed by subset
bitmask (bit i set means element i belongs to the subset). Everything is
exact: values are ``fractions.Fraction`` and no float ever enters.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from utils import config
from utils.error_handler import (
    DegenerateDrawError,
    GenerationFailedError,
    NotMonotoneError,
    NotNormalizedError,
    ValidationError,
    WrongLengthError,
)

logger = logging.getLogger(__name__)

MAX_GROUND_SET = 20


def to_fraction(value: Any) -> Fraction:
    """Convert ints, Fractions and ``p/q`` strings; floats are refused"""
    if isinstance(value, bool):
        raise ValidationError("value", f"booleans are not rationals: {value!r}")
    if isinstance(value, float):
        raise ValidationError("value", f"floating point value {value!r} is not exact")
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise ValidationError("value", f"cannot read {value!r} as a rational: {e}")


@dataclass(frozen=True)
class Event:
    """A subset of the ground set {0, ..., n-1} as a bitmask"""
    mask: int
    n: int

    def __post_init__(self):
        if not 0 <= self.mask < (1 << self.n):
            raise ValidationError("mask", f"mask {self.mask} out of range for n={self.n}")

    @classmethod
    def full(cls, n: int) -> "Event":
        return cls((1 << n) - 1, n)

    @classmethod
    def from_members(cls, n: int, members: Iterable[int]) -> "Event":
        mask = 0
        for i in members:
            if not 0 <= i < n:
                raise ValidationError("members", f"element {i} outside ground set of size {n}")
            mask |= 1 << i
        return cls(mask, n)

    def members(self) -> List[int]:
        return [i for i in range(self.n) if self.mask >> i & 1]

    def __contains__(self, element: int) -> bool:
        return bool(self.mask >> element & 1)

    def __or__(self, other: "Event") -> "Event":
        return Event(self.mask | other.mask, self.n)

    def __and__(self, other: "Event") -> "Event":
        return Event(self.mask & other.mask, self.n)

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.members()) + "}"


@dataclass(frozen=True)
class Capacity:
    """Monotone, normalized set function c: 2^Omega -> [0, 1]

    Construct through :func:`build_capacity`; the constructor validates
    the same invariants so a Capacity instance is always well formed.
    """
    n: int
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        _validate(self.n, self.values)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __call__(self, mask) -> Fraction:
        if isinstance(mask, Event):
            if mask.n != self.n:
                raise ValidationError("mask", f"event on n={mask.n} used with a capacity on n={self.n}")
            mask = mask.mask
        elif not 0 <= mask < len(self.values):
            raise ValidationError("mask", f"mask {mask} out of range for n={self.n}")
        return self.values[mask]

    def common_denominator(self) -> Tuple[Tuple[int, ...], int]:
        """Integer numerators over the lcm of every value's denominator"""
        denominator = 1
        for v in self.values:
            denominator = denominator * v.denominator // math.gcd(denominator, v.denominator)
        return tuple(int(v * denominator) for v in self.values), denominator

    def __str__(self) -> str:
        return "[" + ", ".join(str(v) for v in self.values) + "]"


class ViolationKind(Enum):
    SUBMODULARITY = "submodularity"
    SUBADDITIVITY = "subadditivity"
    CONVEXITY = "convexity"


@dataclass(frozen=True)
class ViolationReport:
    """Witness of a strict inequality failure, lhs > rhs exactly"""
    kind: ViolationKind
    witnesses: Tuple[Any, ...]
    lhs: Fraction
    rhs: Fraction
    lam: Optional[Fraction] = None
    details: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not self.lhs > self.rhs:
            raise ValueError(f"not a violation: {self.lhs} <= {self.rhs}")

    @property
    def gap(self) -> Fraction:
        return self.lhs - self.rhs

    def __str__(self) -> str:
        first, second = self.witnesses[0], self.witnesses[1]
        text = f"{self.kind.value} violation: A={first} B={second} lhs={self.lhs} rhs={self.rhs}"
        if self.lam is not None:
            text += f" lambda={self.lam}"
        return text


def _validate(n: int, values: Sequence[Fraction]) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValidationError("n", f"ground-set size must be a positive integer, got {n!r}")
    if n > MAX_GROUND_SET:
        raise ValidationError("n", f"ground-set size {n} exceeds the practical bound {MAX_GROUND_SET}")
    size = 1 << n
    if len(values) != size:
        raise WrongLengthError(size, len(values))
    # Cover pairs only; full monotonicity follows by chaining
    for upper in range(1, size):
        for i in range(n):
            lower = upper ^ 1 << i
            if upper >> i & 1 and values[lower] > values[upper]:
                raise NotMonotoneError(lower, upper, values[lower], values[upper])
    if values[0] != 0 or values[size - 1] != 1:
        raise NotNormalizedError(values[0], values[size - 1])
    for v in values:
        if not 0 <= v <= 1:
            raise ValidationError("values", f"value {v} outside [0, 1]")


def build_capacity(n: int, values: Sequence[Any]) -> Capacity:
    """Validate and freeze a table of 2^n rationals into a Capacity"""
    if isinstance(n, int) and n >= 1 and len(values) != 1 << n:
        raise WrongLengthError(1 << n, len(values))
    return Capacity(n, tuple(to_fraction(v) for v in values))


def additive_capacity(weights: Sequence[Any]) -> Capacity:
    """c(A) = sum of weights over A, for a probability vector"""
    mu = [to_fraction(w) for w in weights]
    if any(w < 0 for w in mu) or sum(mu) != 1:
        raise ValidationError("weights", "weights must be a nonnegative vector summing to 1")
    n = len(mu)
    values = [Fraction(0)] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        values[mask] = values[mask ^ low] + mu[low.bit_length() - 1]
    return Capacity(n, tuple(values))


@dataclass(frozen=True)
class ConcaveDistortion:
    """Piecewise-linear concave g on [0, 1] with g(0)=0 and g(1)=1

    The breakpoints are the uniform grid j/pieces; ``slopes`` must be
    nonnegative and nonincreasing.
    """
    slopes: Tuple[Fraction, ...]

    def __post_init__(self):
        pieces = len(self.slopes)
        if pieces < 1:
            raise ValidationError("slopes", "at least one piece is required")
        if any(s < 0 for s in self.slopes):
            raise ValidationError("slopes", "slopes must be nonnegative")
        if any(a < b for a, b in zip(self.slopes, self.slopes[1:])):
            raise ValidationError("slopes", "slopes must be nonincreasing")
        if sum(self.slopes) != pieces:
            raise ValidationError("slopes", "g(1) must equal 1")

    def __call__(self, t: Fraction) -> Fraction:
        pieces = len(self.slopes)
        j = min(math.floor(t * pieces), pieces - 1)
        start = Fraction(j, pieces)
        return sum(self.slopes[:j], Fraction(0)) / pieces + self.slopes[j] * (t - start)


def distorted_capacity(mu: Sequence[Any], g: ConcaveDistortion) -> Capacity:
    """c(A) = g(mu(A)) for a probability vector mu"""
    base = additive_capacity(mu)
    return Capacity(base.n, tuple(g(v) for v in base.values))


def check_submodular_exhaustive(c: Capacity) -> Optional[ViolationReport]:
    """Check c(A|B) + c(A&B) <= c(A) + c(B) over all pairs A < B

    Returns the lexicographically first violating pair, or None.
    """
    size = 1 << c.n
    values = c.values
    for a in range(size):
        for b in range(a + 1, size):
            lhs = values[a | b] + values[a & b]
            rhs = values[a] + values[b]
            if lhs > rhs:
                return ViolationReport(
                    ViolationKind.SUBMODULARITY,
                    (Event(a, c.n), Event(b, c.n)),
                    lhs, rhs,
                )
    return None


def check_submodular_local(c: Capacity) -> Optional[ViolationReport]:
    """Pairwise-exchange criterion, same verdict as the exhaustive check

    For every A and distinct i, j outside A:
    c(A|{i}) + c(A|{j}) >= c(A|{i,j}) + c(A).
    """
    values = c.values
    for a in range(1 << c.n):
        outside = [i for i in range(c.n) if not a >> i & 1]
        for x, i in enumerate(outside):
            for j in outside[x + 1:]:
                ai, aj = a | 1 << i, a | 1 << j
                lhs = values[ai | aj] + values[a]
                rhs = values[ai] + values[aj]
                if lhs > rhs:
                    return ViolationReport(
                        ViolationKind.SUBMODULARITY,
                        (Event(ai, c.n), Event(aj, c.n)),
                        lhs, rhs,
                        details={'base': Event(a, c.n), 'i': i, 'j': j},
                    )
    return None


def _masks_by_popcount(n: int) -> List[int]:
    return sorted(range(1 << n), key=lambda m: (bin(m).count("1"), m))


def random_monotone_capacity(n: int, seed: int, denominator: int = None,
                             max_attempts: int = None) -> Capacity:
    """Deterministic random monotone normalized capacity

    Each mask draws k/D with k uniform in {0..D}; sweeping masks by
    popcount, a value is raised to the maximum over its lower covers.
    The table is then divided by the value of the full set.
    """
    if n < 1:
        raise ValidationError("n", f"ground-set size must be positive, got {n}")
    denominator = denominator or config.DENOMINATOR
    max_attempts = max_attempts or config.GENERATOR_RETRIES
    rng = np.random.default_rng(seed)
    order = _masks_by_popcount(n)

    for attempt in range(1, max_attempts + 1):
        draws = rng.integers(0, denominator + 1, size=1 << n)
        values = [Fraction(0)] * (1 << n)
        for mask in order[1:]:
            best = Fraction(int(draws[mask]), denominator)
            for i in range(n):
                if mask >> i & 1:
                    best = max(best, values[mask ^ 1 << i])
            values[mask] = best
        top = values[-1]
        if top == 0:
            logger.debug(f"Degenerate draw on attempt {attempt} (n={n}, seed={seed})")
            continue
        return build_capacity(n, [v / top for v in values])

    raise DegenerateDrawError(max_attempts)


def _random_probability_vector(rng: np.random.Generator, n: int, denominator: int) -> Optional[List[Fraction]]:
    weights = [int(k) for k in rng.integers(0, denominator + 1, size=n)]
    total = sum(weights)
    if total == 0:
        return None
    return [Fraction(w, total) for w in weights]


def _random_concave(rng: np.random.Generator, pieces: int, denominator: int) -> ConcaveDistortion:
    raw = sorted((int(k) for k in rng.integers(1, denominator + 1, size=pieces)), reverse=True)
    scale = Fraction(pieces, sum(raw))
    return ConcaveDistortion(tuple(r * scale for r in raw))


def random_submodular_capacity(n: int, seed: int, denominator: int = None,
                               max_attempts: int = None, pieces: int = None) -> Capacity:
    """Deterministic random submodular capacity by generate-and-verify

    Candidates are concave distortions g(mu(A)) of a random probability
    vector; each candidate is accepted only after the exhaustive
    submodularity check passes.
    """
    if n < 1:
        raise ValidationError("n", f"ground-set size must be positive, got {n}")
    denominator = denominator or config.DENOMINATOR
    max_attempts = max_attempts or config.GENERATOR_RETRIES
    pieces = pieces or config.CONCAVE_PIECES
    rng = np.random.default_rng(seed)

    for attempt in range(1, max_attempts + 1):
        mu = _random_probability_vector(rng, n, denominator)
        if mu is None:
            continue
        candidate = distorted_capacity(mu, _random_concave(rng, pieces, denominator))
        report = check_submodular_exhaustive(candidate)
        if report is None:
            return candidate
        logger.warning(f"Rejected candidate on attempt {attempt}: {report}")

    raise GenerationFailedError(max_attempts)


__all__ = [
    "Event",
    "Capacity",
    "ViolationKind",
    "ViolationReport",
    "ConcaveDistortion",
    "to_fraction",
    "build_capacity",
    "additive_capacity",
    "distorted_capacity",
    "check_submodular_exhaustive",
    "check_submodular_local",
    "random_monotone_capacity",
    "random_submodular_capacity",
]
