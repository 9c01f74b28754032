"""Problem and solution data model for the strict unbounded knapsack with
bounded weights.

An instance is a list of item types, each with a value and a closed unit
weight interval ``[w_min, w_max]``, plus a target total weight ``W`` that a
solution must hit exactly (up to a floating point tolerance).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Sequence

Configuration = tuple[int, ...]
WeightVector = tuple[float, ...]

OPTIMAL = "optimal"
FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
LIMIT_EXCEEDED = "limit_exceeded"
STATUSES = (OPTIMAL, FEASIBLE, INFEASIBLE, LIMIT_EXCEEDED)


class UKBWError(Exception):
    """Base class for solver errors."""


class InvalidInstanceError(UKBWError, ValueError):
    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("invalid instance: " + "; ".join(self.violations))


class DimensionError(UKBWError, ValueError):
    """Vector length does not match the number of item types."""


class InfeasibleConfigurationError(UKBWError, ValueError):
    """The configuration's weight span does not contain the target weight."""


@dataclass(frozen=True)
class Tolerance:
    eps_rel: float = 1e-9

    def __post_init__(self):
        if not self.eps_rel > 0:
            raise ValueError("eps_rel must be positive")

    def abs(self, target: float) -> float:
        """Absolute tolerance used for comparisons against ``target``."""
        return self.eps_rel * max(1.0, abs(target))


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class ItemType:
    value: float
    w_min: float
    w_max: float


@dataclass(frozen=True)
class Instance:
    items: tuple[ItemType, ...]
    target_weight: float

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))

    @classmethod
    def from_lists(cls, values, w_min, w_max, target_weight) -> Instance:
        if not len(values) == len(w_min) == len(w_max):
            raise DimensionError("values, w_min and w_max differ in length")
        items = [ItemType(float(v), float(lo), float(hi))
                 for v, lo, hi in zip(values, w_min, w_max)]
        return cls(tuple(items), float(target_weight))

    @property
    def n(self) -> int:
        return len(self.items)

    @cached_property
    def values(self) -> tuple[float, ...]:
        return tuple(it.value for it in self.items)

    @cached_property
    def w_min(self) -> WeightVector:
        return tuple(it.w_min for it in self.items)

    @cached_property
    def w_max(self) -> WeightVector:
        return tuple(it.w_max for it in self.items)

    @cached_property
    def validation(self) -> ValidationReport:
        return validate_instance(self)

    def require_valid(self) -> None:
        if not self.validation.ok:
            raise InvalidInstanceError(self.validation.violations)


class WeightSpan(NamedTuple):
    low: float
    high: float

    def contains(self, target: float, eps: float = 0.0) -> bool:
        return self.low <= target + eps and self.high >= target - eps


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


CheckReport = ValidationReport


@dataclass(frozen=True)
class Solution:
    status: str
    configuration: Configuration | None = None
    weights: WeightVector | None = None
    objective: float | None = None
    sigma: float | None = None
    degenerate: bool | None = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.configuration is not None:
            object.__setattr__(self, "configuration", tuple(self.configuration))
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))


def _is_real(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x)


def validate_instance(instance: Instance) -> ValidationReport:
    """List every violated instance invariant; an empty report means valid."""
    problems = []
    if not instance.items:
        problems.append("item list is empty")
    if not _is_real(instance.target_weight):
        problems.append("target weight is not a finite number")
    elif instance.target_weight < 0:
        problems.append("target weight is negative")
    for i, it in enumerate(instance.items):
        if not all(_is_real(x) for x in (it.value, it.w_min, it.w_max)):
            problems.append(f"non-finite number at index {i}")
            continue
        if not it.value > 0:
            problems.append(f"value not > 0 at index {i}")
        if not it.w_min > 0:
            problems.append(f"w_min not > 0 at index {i}")
        if it.w_min > it.w_max:
            problems.append(f"w_min > w_max at index {i}")
    return ValidationReport(tuple(problems))


def _check_len(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} != {len(b)}")


def total_weight(config: Sequence[int], weights: Sequence[float]) -> float:
    """Total knapsack weight ``<x, w>``."""
    _check_len(config, weights)
    return sum(x * w for x, w in zip(config, weights))


def objective_value(instance: Instance, config: Sequence[int]) -> float:
    """Stage-1 objective ``sum(v_i * x_i)``, accumulated in index order."""
    _check_len(config, instance.items)
    return sum(v * x for v, x in zip(instance.values, config))


def support(config: Sequence[int]) -> frozenset[int]:
    """Indices of item types with a positive count."""
    return frozenset(i for i, x in enumerate(config) if x > 0)


def weight_span(instance: Instance, config: Sequence[int]) -> WeightSpan:
    """Interval of total weights reachable by ``config`` with weights in the box.

    The ends are attained at the all-minimum and all-maximum weight vectors.
    """
    _check_len(config, instance.items)
    return WeightSpan(total_weight(config, instance.w_min),
                      total_weight(config, instance.w_max))


def check_solution(instance: Instance, solution: Solution,
                   tol: Tolerance = DEFAULT_TOL) -> CheckReport:
    """Verify a solution against the canonical constraints.

    Infeasible solutions with no configuration pass trivially; anything
    carrying a configuration is checked in full.
    """
    instance.require_valid()
    x, w = solution.configuration, solution.weights
    if x is None:
        if solution.status in (OPTIMAL, FEASIBLE):
            return CheckReport((f"status {solution.status} without a configuration",))
        return CheckReport()
    _check_len(x, instance.items)
    if w is None:
        return CheckReport(("configuration has no weights",))
    _check_len(w, instance.items)

    W = instance.target_weight
    eps = tol.abs(W)
    problems = []
    for i, xi in enumerate(x):
        if isinstance(xi, bool) or not isinstance(xi, int) or xi < 0:
            problems.append(f"x[{i}] = {xi!r} is not a nonnegative integer")
    for i, (wi, it) in enumerate(zip(w, instance.items)):
        if not math.isfinite(wi):
            problems.append(f"w[{i}] is not finite")
        elif wi < it.w_min - eps:
            problems.append(f"w[{i}] below w_min ({wi:.17g} < {it.w_min:.17g})")
        elif wi > it.w_max + eps:
            problems.append(f"w[{i}] above w_max ({wi:.17g} > {it.w_max:.17g})")
    if not problems:
        total = total_weight(x, w)
        if abs(total - W) > eps:
            problems.append(f"total weight {total:.17g} != {W:.17g}")
        obj = objective_value(instance, x)
        if solution.objective is None:
            problems.append("objective missing")
        elif abs(solution.objective - obj) > tol.abs(obj):
            problems.append(f"objective {solution.objective:.17g} != {obj:.17g}")
    return CheckReport(tuple(problems))
