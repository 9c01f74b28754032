"""Brute-force ground truth for small instances.

Nothing here shares code paths with the branch-and-bound solver or the
closed-form weight formula beyond the basic data model.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .core import (
    DEFAULT_TOL,
    INFEASIBLE,
    OPTIMAL,
    Instance,
    InfeasibleConfigurationError,
    Tolerance,
    UKBWError,
    WeightVector,
    objective_value,
    support,
    total_weight,
)
from .stage1 import SearchLimits, Stage1Result, count_bounds, stage1_feasible

BISECTION_MAX_ITER = 200
EXCHANGE_STEP = 1e-4


class EnumerationCapError(UKBWError):
    """The count box has more points than the enumeration cap allows."""


@dataclass(frozen=True)
class EnumerationCap:
    max_points: int = 10**6

    def __post_init__(self):
        if self.max_points <= 0:
            raise ValueError("max_points must be positive")


def box_size(bounds: Sequence[int]) -> int:
    return math.prod(u + 1 for u in bounds)


def count_box(instance: Instance, cap: EnumerationCap = EnumerationCap(),
              tol: Tolerance = DEFAULT_TOL):
    """Iterate every point of the count box in lexicographic order."""
    bounds = count_bounds(instance, SearchLimits(max_count_per_item=cap.max_points), tol)
    size = box_size(bounds)
    if size > cap.max_points:
        raise EnumerationCapError(f"count box has {size} points > cap {cap.max_points}")
    return itertools.product(*(range(u + 1) for u in bounds))


def enumerate_configurations(instance: Instance, cap: EnumerationCap = EnumerationCap(),
                             tol: Tolerance = DEFAULT_TOL) -> list[tuple[int, ...]]:
    """All Stage-1 feasible configurations in the count box, lexicographically."""
    return [x for x in count_box(instance, cap, tol) if stage1_feasible(instance, x, tol)]


def oracle_optimum(instance: Instance, cap: EnumerationCap = EnumerationCap(),
                   tol: Tolerance = DEFAULT_TOL) -> Stage1Result:
    best_x, best_obj, seen = None, None, 0
    for x in enumerate_configurations(instance, cap, tol):
        seen += 1
        obj = objective_value(instance, x)
        # strict improvement only: enumeration is lexicographic, so the first
        # configuration reaching the maximum is the smallest one
        if best_obj is None or obj > best_obj:
            best_x, best_obj = x, obj
    if best_x is None:
        return Stage1Result(INFEASIBLE, None, None, seen)
    return Stage1Result(OPTIMAL, best_x, best_obj, seen)


def weight_by_bisection(instance: Instance, config: Sequence[int],
                        tol: Tolerance = DEFAULT_TOL) -> WeightVector:
    """Find feasible weights along the segment from ``w_min`` to ``w_max``.

    Bisects on ``lam`` in ``w(lam) = w_min + lam * (w_max - w_min)``, where the
    total weight is nondecreasing in ``lam``. Raises when no point of the
    segment hits the target within tolerance.
    """
    W = instance.target_weight
    eps = tol.abs(W)
    lo_w, hi_w = instance.w_min, instance.w_max

    def at(lam):
        return tuple(a + lam * (b - a) for a, b in zip(lo_w, hi_w))

    lo, hi = 0.0, 1.0
    k_lo, k_hi = total_weight(config, at(lo)), total_weight(config, at(hi))
    for lam, k in ((lo, k_lo), (hi, k_hi)):
        if abs(k - W) <= eps:
            return at(lam)
    if not k_lo < W < k_hi:
        raise InfeasibleConfigurationError(
            f"no feasible weight vector for this configuration {tuple(config)}: "
            f"W={W:.17g} is not bracketed by [{k_lo:.17g}, {k_hi:.17g}]")
    for _ in range(BISECTION_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        w = at(mid)
        k = total_weight(config, w)
        if abs(k - W) <= eps:
            return w
        if k < W:
            lo = mid
        else:
            hi = mid
    raise InfeasibleConfigurationError(
        f"no feasible weight vector for this configuration {tuple(config)}")


def exchange_optimality_check(instance: Instance, config: Sequence[int],
                              c: Sequence[float], w: Sequence[float],
                              tol: Tolerance = DEFAULT_TOL,
                              step: float = EXCHANGE_STEP) -> bool:
    """True iff no small weight-preserving move improves ``sum(c_i * w_i)``.

    Pairs of used items trade ``step`` units of total weight; unused items
    are free to move on their own. Moves are shortened to stay in bounds.
    """
    W = instance.target_weight
    eps = tol.abs(W)
    lo, hi = instance.w_min, instance.w_max
    if any(wi < a - eps or wi > b + eps for wi, a, b in zip(w, lo, hi)):
        raise InfeasibleConfigurationError("weights outside bounds")
    if abs(total_weight(config, w) - W) > eps:
        raise InfeasibleConfigurationError("weights miss the target total weight")

    used = sorted(support(config))
    for i in range(instance.n):
        if i in used:
            continue
        up = min(step, hi[i] - w[i])
        down = min(step, w[i] - lo[i])
        if c[i] * up > eps or -c[i] * down > eps:
            return False
    for i in used:
        for j in used:
            if i == j:
                continue
            # total weight t moves from item i to item j
            t = min(step, config[i] * (w[i] - lo[i]), config[j] * (hi[j] - w[j]))
            if t <= 0:
                continue
            gain = c[j] * t / config[j] - c[i] * t / config[i]
            if gain > eps:
                return False
    return True
