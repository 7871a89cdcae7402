"""Exact Choquet integrals on a finite ground set

Two independent evaluators are provided: the layer-cake sum taken
straight from the definition with strict level sets {X > x}, and the
sorted-levels (Lovasz extension) form. The integer form sums c({K >= k})
and the dyadic approximation evaluates floor(nX)/n through it.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence, Tuple

from engine.capacity import Capacity, Event, to_fraction
from utils.error_handler import (
    CrossCheckError,
    DimensionMismatchError,
    NegativeInputError,
    ValidationError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointFunction:
    """X: Omega -> Q, one exact rational per element"""
    values: Tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[Any]) -> "PointFunction":
        return cls(tuple(to_fraction(v) for v in values))

    def __len__(self) -> int:
        return len(self.values)

    def __add__(self, other: "PointFunction") -> "PointFunction":
        if len(other) != len(self):
            raise DimensionMismatchError(len(self), len(other))
        return PointFunction(tuple(a + b for a, b in zip(self.values, other.values)))

    def __mul__(self, scalar: Any) -> "PointFunction":
        factor = to_fraction(scalar)
        return PointFunction(tuple(factor * v for v in self.values))

    __rmul__ = __mul__

    def shift(self, m: Any) -> "PointFunction":
        m = to_fraction(m)
        return PointFunction(tuple(v + m for v in self.values))

    def is_integer_valued(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def to_int_function(self) -> "IntFunction":
        if not self.is_integer_valued():
            raise ValidationError("function", "function is not integer-valued")
        return IntFunction(tuple(int(v) for v in self.values))

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True)
class IntFunction:
    """K: Omega -> N"""
    values: Tuple[int, ...]

    def __post_init__(self):
        if any(not isinstance(v, int) for v in self.values):
            raise ValidationError("function", "integer function entries must be ints")
        if any(v < 0 for v in self.values):
            raise NegativeInputError()

    @classmethod
    def of(cls, values: Iterable[int]) -> "IntFunction":
        return cls(tuple(int(v) for v in values))

    def __len__(self) -> int:
        return len(self.values)

    def __add__(self, other: "IntFunction") -> "IntFunction":
        if len(other) != len(self):
            raise DimensionMismatchError(len(self), len(other))
        return IntFunction(tuple(a + b for a, b in zip(self.values, other.values)))

    def max(self) -> int:
        return max(self.values, default=0)

    def halve_down(self) -> "IntFunction":
        """floor(X / 2)"""
        return IntFunction(tuple(v // 2 for v in self.values))

    def halve_up(self) -> "IntFunction":
        """floor((X + 1) / 2)"""
        return IntFunction(tuple((v + 1) // 2 for v in self.values))

    def to_point_function(self) -> PointFunction:
        return PointFunction(tuple(Fraction(v) for v in self.values))

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def _check_dimensions(c: Capacity, X) -> None:
    if len(X) != c.n:
        raise DimensionMismatchError(c.n, len(X))


def level_set(X, threshold: Any, strict: bool = True) -> Event:
    """{X > t} when strict, otherwise {X >= t}"""
    t = to_fraction(threshold)
    mask = 0
    for i, v in enumerate(X.values):
        if v > t or (not strict and v == t):
            mask |= 1 << i
    return Event(mask, len(X))


def indicator(event: Event) -> PointFunction:
    return PointFunction(tuple(Fraction(1 if i in event else 0) for i in range(event.n)))


def sup_norm(X: PointFunction) -> Fraction:
    return max((abs(v) for v in X.values), default=Fraction(0))


def shift_nonnegative(X: PointFunction) -> Tuple[PointFunction, Fraction]:
    """Return (X + ||X||, ||X||)"""
    norm = sup_norm(X)
    return X.shift(norm), norm


def choquet_layer_cake(c: Capacity, X: PointFunction) -> Fraction:
    """Integral of [c(X>x) - 1] over x < 0 plus c(X>x) over x >= 0

    Between consecutive breakpoints (the values of X together with 0)
    the level set {X > x} is fixed, so both integrals are finite sums.
    """
    _check_dimensions(c, X)
    breakpoints = sorted(set(X.values) | {Fraction(0)})
    total = Fraction(0)
    for low, high in zip(breakpoints, breakpoints[1:]):
        height = c(level_set(X, low))
        if high <= 0:
            height -= 1
        total += (high - low) * height
    return total


def choquet_sorted(c: Capacity, X: PointFunction) -> Fraction:
    """Sum of X_(i) (c(S_i) - c(S_{i-1})) over decreasing values"""
    _check_dimensions(c, X)
    order = sorted(range(c.n), key=lambda i: (-X.values[i], i))
    total = Fraction(0)
    previous, mask = Fraction(0), 0
    for i in order:
        mask |= 1 << i
        current = c(mask)
        total += X.values[i] * (current - previous)
        previous = current
    return total


def choquet_integral(c: Capacity, X: PointFunction) -> Fraction:
    return choquet_sorted(c, X)


def choquet_integer(c: Capacity, K: IntFunction) -> Fraction:
    """Sum over k = 1..max K of c({K >= k})

    {K >= k} is constant between consecutive distinct values of K.
    """
    _check_dimensions(c, K)
    total = Fraction(0)
    previous = 0
    for v in sorted({v for v in K.values if v > 0}):
        mask = 0
        for i, w in enumerate(K.values):
            if w >= v:
                mask |= 1 << i
        total += (v - previous) * c(mask)
        previous = v
    return total


def integer_integral_table(c: Capacity):
    """Fast exact evaluator for integer functions

    Returns ``integrate(values) -> int`` giving the integral scaled by the
    common denominator D of the capacity, together with D.
    """
    numerators, denominator = c.common_denominator()

    def integrate(values: Sequence[int]) -> int:
        order = sorted(range(len(values)), key=lambda i: -values[i])
        total, previous, mask = 0, 0, 0
        for i in order:
            mask |= 1 << i
            current = numerators[mask]
            total += values[i] * (current - previous)
            previous = current
        return total

    return integrate, denominator


def dyadic_approximation(c: Capacity, X: PointFunction, n: int) -> Tuple[Fraction, Fraction]:
    """Return (approx, gap) with approx = (1/n) * integral of floor(nX)

    The gap to the exact integral always lies in [0, 1/n].
    """
    _check_dimensions(c, X)
    if not isinstance(n, int) or n < 1:
        raise ValidationError("n", f"resolution must be a positive integer, got {n!r}")
    if any(v < 0 for v in X.values):
        raise NegativeInputError()

    floors = IntFunction(tuple(math.floor(n * v) for v in X.values))
    approx = choquet_integer(c, floors) / n
    gap = choquet_layer_cake(c, X) - approx
    if not 0 <= gap <= Fraction(1, n):
        raise CrossCheckError(
            f"dyadic gap {gap} outside [0, 1/{n}]",
            details={'function': str(X), 'n': n},
        )
    return approx, gap


__all__ = [
    "PointFunction",
    "IntFunction",
    "level_set",
    "indicator",
    "sup_norm",
    "shift_nonnegative",
    "choquet_layer_cake",
    "choquet_sorted",
    "choquet_integral",
    "choquet_integer",
    "integer_integral_table",
    "dyadic_approximation",
]
