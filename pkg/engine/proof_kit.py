"""Mechanized steps of the submodular => subadditive argument

The lattice sets below are subsets of N^2:

    A~_k = union over i = 0..k+1  of {x >= 2i,   y >= 2(k-i)+1}
    B~_k = union over i = -1..k   of {x >= 2i+1, y >= 2(k-i)}

Their union is {x+y >= 2k+1} and their intersection {x+y >= 2k+2}.
Every one of these sets is upward closed, hence determined by its
minimal points; all minimal points lie in [0, 2k+2]^2, so checking the
identities on any window of size >= 2k+2 is conclusive.

Applied pointwise to (X(w), Y(w)) the sets give the events A_k, B_k, and
one application of submodularity per k yields the halving bound

    int (X+Y) dc <= int (X//2 + (Y+1)//2) dc + int ((X+1)//2 + Y//2) dc

which drives an induction on the range {0, ..., 2^p}.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, List, NamedTuple, Tuple

from engine.capacity import Capacity, Event, check_submodular_local
from engine.choquet import (
    IntFunction,
    PointFunction,
    choquet_integer,
    choquet_layer_cake,
    shift_nonnegative,
)
from utils.error_handler import (
    CrossCheckError,
    DimensionMismatchError,
    NotSubmodularError,
    ValidationError,
    WindowTooSmallError,
)

logger = logging.getLogger(__name__)


class LatticePoint(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class InequalityStep:
    """One exactly checked inequality lhs <= rhs"""
    description: str
    lhs: Fraction
    rhs: Fraction

    def __post_init__(self):
        if not self.lhs <= self.rhs:
            raise CrossCheckError(
                f"step '{self.description}' fails: {self.lhs} > {self.rhs}",
                details={'lhs': str(self.lhs), 'rhs': str(self.rhs)},
            )

    def render(self) -> str:
        return f"{self.description}: {self.lhs} <= {self.rhs}"


@dataclass(frozen=True)
class InductionCertificate:
    depth: int
    steps: Tuple[InequalityStep, ...]
    final_lhs: Fraction
    final_rhs: Fraction
    details: dict = field(default_factory=dict, compare=False)

    def is_valid(self) -> bool:
        return all(s.lhs <= s.rhs for s in self.steps) and self.final_lhs <= self.final_rhs


def _check_window(k: int, bound: int) -> None:
    if k < 0:
        raise ValidationError("k", f"k must be nonnegative, got {k}")
    if bound < 2 * k + 2:
        raise WindowTooSmallError(k, bound)


def in_a_tilde(x: int, y: int, k: int) -> bool:
    return any(x >= 2 * i and y >= 2 * (k - i) + 1 for i in range(0, k + 2))


def in_b_tilde(x: int, y: int, k: int) -> bool:
    # i = -1 contributes {y >= 2k+2}
    return any(x >= 2 * i + 1 and y >= 2 * (k - i) for i in range(-1, k + 1))


def lemma_sets(k: int, bound: int) -> Tuple[FrozenSet[LatticePoint], FrozenSet[LatticePoint]]:
    """A~_k and B~_k restricted to the window [0, bound]^2"""
    _check_window(k, bound)
    window = [LatticePoint(x, y) for x in range(bound + 1) for y in range(bound + 1)]
    a_set = frozenset(p for p in window if in_a_tilde(p.x, p.y, k))
    b_set = frozenset(p for p in window if in_b_tilde(p.x, p.y, k))
    return a_set, b_set


def check_lemma_identities(k: int, bound: int) -> bool:
    a_set, b_set = lemma_sets(k, bound)
    window = [LatticePoint(x, y) for x in range(bound + 1) for y in range(bound + 1)]
    union = frozenset(p for p in window if p.x + p.y >= 2 * k + 1)
    meet = frozenset(p for p in window if p.x + p.y >= 2 * k + 2)
    verdict = (a_set | b_set) == union and (a_set & b_set) == meet
    if not verdict:
        logger.error(f"Lattice identities fail for k={k}, bound={bound}")
    return verdict


def _check_pair(X, Y) -> None:
    if len(X) != len(Y):
        raise DimensionMismatchError(len(X), len(Y))


def _check_capacity_pair(c: Capacity, X, Y) -> None:
    for F in (X, Y):
        if len(F) != c.n:
            raise DimensionMismatchError(c.n, len(F))


def _require_submodular(c: Capacity) -> None:
    report = check_submodular_local(c)
    if report is not None:
        raise NotSubmodularError(report)


def _at_least(F: IntFunction, threshold: int) -> int:
    """Mask of {F >= threshold}"""
    mask = 0
    for i, v in enumerate(F.values):
        if v >= threshold:
            mask |= 1 << i
    return mask


def _sum_level_set(X: IntFunction, Y: IntFunction, threshold: int) -> int:
    return _at_least(X + Y, threshold)


def events_ak_bk(X: IntFunction, Y: IntFunction, k: int) -> Tuple[Event, Event]:
    """Pointwise pull-back of A~_k and B~_k along (X, Y)"""
    _check_pair(X, Y)
    n = len(X)
    a_mask = b_mask = 0
    for i, (x, y) in enumerate(zip(X.values, Y.values)):
        if in_a_tilde(x, y, k):
            a_mask |= 1 << i
        if in_b_tilde(x, y, k):
            b_mask |= 1 << i
    return Event(a_mask, n), Event(b_mask, n)


def check_event_decomposition(X: IntFunction, Y: IntFunction, k: int) -> bool:
    """A_k | B_k = {X+Y >= 2k+1} and A_k & B_k = {X+Y >= 2k+2}"""
    a_event, b_event = events_ak_bk(X, Y, k)
    return ((a_event.mask | b_event.mask) == _sum_level_set(X, Y, 2 * k + 1)
            and (a_event.mask & b_event.mask) == _sum_level_set(X, Y, 2 * k + 2))


def halving_bound(c: Capacity, X: IntFunction, Y: IntFunction) -> Tuple[Fraction, Fraction]:
    _check_capacity_pair(c, X, Y)
    _require_submodular(c)
    return _halving_bound(c, X, Y)


def _halving_bound(c: Capacity, X: IntFunction, Y: IntFunction) -> Tuple[Fraction, Fraction]:
    lhs = choquet_integer(c, X + Y)
    rhs = (choquet_integer(c, X.halve_down() + Y.halve_up())
           + choquet_integer(c, X.halve_up() + Y.halve_down()))
    if lhs > rhs:
        raise CrossCheckError(f"halving bound fails on submodular capacity: {lhs} > {rhs}")
    return lhs, rhs


def halving_chain(c: Capacity, X: IntFunction, Y: IntFunction) -> List[InequalityStep]:
    """Term-by-term halving bound, one submodularity step per k"""
    _check_capacity_pair(c, X, Y)
    _require_submodular(c)
    top = (X + Y).max()
    left = X.halve_down() + Y.halve_up()
    right = X.halve_up() + Y.halve_down()
    steps = []
    for k in range(0, (top + 1) // 2):
        a_event, b_event = events_ak_bk(X, Y, k)
        if a_event.mask != _at_least(left, k + 1):
            raise CrossCheckError(f"A_{k} differs from the level set of the halved sum")
        if b_event.mask != _at_least(right, k + 1):
            raise CrossCheckError(f"B_{k} differs from the level set of the halved sum")
        if not check_event_decomposition(X, Y, k):
            raise CrossCheckError(f"event decomposition fails at k={k}")
        steps.append(InequalityStep(
            f"k={k}: c(X+Y>={2 * k + 1})+c(X+Y>={2 * k + 2}) <= c(A_{k})+c(B_{k})",
            c(_sum_level_set(X, Y, 2 * k + 1)) + c(_sum_level_set(X, Y, 2 * k + 2)),
            c(a_event) + c(b_event),
        ))
    return steps


def halving_identity(c: Capacity, X: IntFunction) -> Tuple[Fraction, Fraction, Fraction]:
    """(int X//2, int (X+1)//2, int X); the first two sum to the third"""
    if len(X) != c.n:
        raise DimensionMismatchError(c.n, len(X))
    low = choquet_integer(c, X.halve_down())
    high = choquet_integer(c, X.halve_up())
    whole = choquet_integer(c, X)
    if low + high != whole:
        raise CrossCheckError(f"halving identity fails: {low} + {high} != {whole}")
    return low, high, whole


def _depth(X: IntFunction, Y: IntFunction) -> int:
    top = max(X.max(), Y.max())
    p = 0
    while (1 << p) < top:
        p += 1
    return p


def _certify(c: Capacity, X: IntFunction, Y: IntFunction, label: str,
             steps: List[InequalityStep]) -> Tuple[Fraction, Fraction]:
    """Append the steps proving int(X+Y) <= int X + int Y; return both sides"""
    p = _depth(X, Y)
    if p == 0:
        a_event = Event(_at_least(X, 1), c.n)
        b_event = Event(_at_least(Y, 1), c.n)
        lhs = c(a_event | b_event) + c(a_event & b_event)
        rhs = c(a_event) + c(b_event)
        if lhs != choquet_integer(c, X + Y) or rhs != choquet_integer(c, X) + choquet_integer(c, Y):
            raise CrossCheckError(f"base case at {label} does not match the integrals")
        steps.append(InequalityStep(
            f"{label} p=0 A={a_event} B={b_event}: c(A|B)+c(A&B) <= c(A)+c(B)", lhs, rhs))
        return lhs, rhs

    x_down, x_up = X.halve_down(), X.halve_up()
    y_down, y_up = Y.halve_down(), Y.halve_up()
    lhs, bound = _halving_bound(c, X, Y)
    steps.append(InequalityStep(
        f"{label} p={p} halving: int(X+Y) <= int(X//2+(Y+1)//2) + int((X+1)//2+Y//2)", lhs, bound))

    _, left_rhs = _certify(c, x_down, y_up, label + ".L", steps)
    _, right_rhs = _certify(c, x_up, y_down, label + ".R", steps)
    steps.append(InequalityStep(
        f"{label} p={p} induction: int(X//2+(Y+1)//2) + int((X+1)//2+Y//2) <= sum of four halves",
        bound, left_rhs + right_rhs))

    x_low, x_high, x_whole = halving_identity(c, X)
    y_low, y_high, y_whole = halving_identity(c, Y)
    four = x_low + x_high + y_low + y_high
    if four != left_rhs + right_rhs:
        raise CrossCheckError(f"sub-certificates at {label} do not add up to the four halves")
    rhs = x_whole + y_whole
    steps.append(InequalityStep(
        f"{label} p={p} halving identity: int X//2 + int (X+1)//2 + int Y//2 + int (Y+1)//2 <= int X + int Y",
        four, rhs))
    steps.append(InequalityStep(f"{label} p={p} conclusion: int(X+Y) <= int X + int Y", lhs, rhs))
    return lhs, rhs


def induction_certificate(c: Capacity, X: IntFunction, Y: IntFunction) -> InductionCertificate:
    _check_capacity_pair(c, X, Y)
    _require_submodular(c)
    steps: List[InequalityStep] = []
    lhs, rhs = _certify(c, X, Y, "root", steps)

    expected_lhs = choquet_integer(c, X + Y)
    expected_rhs = choquet_integer(c, X) + choquet_integer(c, Y)
    if (lhs, rhs) != (expected_lhs, expected_rhs):
        raise CrossCheckError("certificate conclusion differs from direct evaluation")
    logger.info(f"Certificate of depth {_depth(X, Y)} with {len(steps)} steps")
    return InductionCertificate(_depth(X, Y), tuple(steps), lhs, rhs)


def _lcm_denominator(*functions: PointFunction) -> int:
    result = 1
    for F in functions:
        for v in F.values:
            result = result * v.denominator // math.gcd(result, v.denominator)
    return result


def rational_certificate(c: Capacity, X: PointFunction, Y: PointFunction) -> InductionCertificate:
    """Reduce rational X, Y to integer functions and certify

    Shift both functions to be nonnegative, scale by the least common
    denominator N (the floor in floor(NX)/N is then exact), certify the
    integer pair, then undo the scaling and the shift.
    """
    _check_capacity_pair(c, X, Y)
    _require_submodular(c)
    x_shifted, x_norm = shift_nonnegative(X)
    y_shifted, y_norm = shift_nonnegative(Y)
    scale = _lcm_denominator(x_shifted, y_shifted)
    x_int = (x_shifted * scale).to_int_function()
    y_int = (y_shifted * scale).to_int_function()

    inner = induction_certificate(c, x_int, y_int)
    steps = list(inner.steps)

    lhs = choquet_layer_cake(c, X + Y)
    rhs = choquet_layer_cake(c, X) + choquet_layer_cake(c, Y)
    shifted_lhs = inner.final_lhs / scale - x_norm - y_norm
    shifted_rhs = inner.final_rhs / scale - x_norm - y_norm
    if lhs != shifted_lhs or rhs != shifted_rhs:
        raise CrossCheckError("reduction to integer functions does not preserve the integrals")
    steps.append(InequalityStep(
        f"rescale by 1/{scale}: int(NX'+NY')/N <= (int NX' + int NY')/N",
        inner.final_lhs / scale, inner.final_rhs / scale))
    steps.append(InequalityStep(
        f"translation by -{x_norm} and -{y_norm}: int(X+Y) = int(X'+Y') - ||X|| - ||Y||",
        lhs, shifted_lhs))
    steps.append(InequalityStep("subadditivity: int(X+Y) <= int X + int Y", lhs, rhs))
    return InductionCertificate(
        inner.depth, tuple(steps), lhs, rhs,
        details={'scale': scale, 'x_norm': x_norm, 'y_norm': y_norm},
    )


def render_certificate(cert: InductionCertificate) -> str:
    lines = [step.render() for step in cert.steps]
    lines.append(f"final: {cert.final_lhs} <= {cert.final_rhs}")
    return "\n".join(lines) + "\n"


__all__ = [
    "LatticePoint",
    "InequalityStep",
    "InductionCertificate",
    "in_a_tilde",
    "in_b_tilde",
    "lemma_sets",
    "check_lemma_identities",
    "events_ak_bk",
    "check_event_decomposition",
    "halving_bound",
    "halving_chain",
    "halving_identity",
    "induction_certificate",
    "rational_certificate",
    "render_certificate",
]
