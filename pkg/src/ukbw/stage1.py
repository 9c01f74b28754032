"""Stage 1: choose item counts.

The total weight equality is replaced by the pair of inequalities

    sum(w_max_i * x_i) >= W      and      sum(w_min_i * x_i) <= W,

which is a two-constraint unbounded knapsack in the counts alone. It is
solved exactly by depth-first branch-and-bound over the finite count box.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Sequence

from .core import (
    DEFAULT_TOL,
    INFEASIBLE,
    LIMIT_EXCEEDED,
    OPTIMAL,
    Configuration,
    Instance,
    Tolerance,
    UKBWError,
    objective_value,
    weight_span,
)


class SearchBoxTooLargeError(UKBWError):
    """Some count bound exceeds ``SearchLimits.max_count_per_item``."""


@dataclass(frozen=True)
class SearchLimits:
    max_nodes: int = 10**7
    max_count_per_item: int = 10**6
    time_budget_ms: int | None = None

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_count_per_item <= 0:
            raise ValueError("search limits must be positive")
        if self.time_budget_ms is not None and self.time_budget_ms <= 0:
            raise ValueError("time budget must be positive")


@dataclass(frozen=True)
class Stage1Result:
    status: str
    configuration: Configuration | None = None
    objective: float | None = None
    nodes_explored: int = 0


def stage1_feasible(instance: Instance, config: Sequence[int],
                    tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff the weight span of ``config`` contains the target weight."""
    W = instance.target_weight
    return weight_span(instance, config).contains(W, tol.abs(W))


def count_bounds(instance: Instance, limits: SearchLimits = SearchLimits(),
                 tol: Tolerance = DEFAULT_TOL) -> tuple[int, ...]:
    """Largest count of each item type that any feasible configuration can use."""
    instance.require_valid()
    W = instance.target_weight
    cap = W + tol.abs(W)
    bounds = tuple(math.floor(cap / lo) for lo in instance.w_min)
    for i, u in enumerate(bounds):
        if u > limits.max_count_per_item:
            raise SearchBoxTooLargeError(
                f"search box exceeds limit: count bound {u} for item {i} "
                f"> {limits.max_count_per_item}")
    return bounds


def upper_bound(instance: Instance, fixed_prefix: Sequence[int],
                residual_W: float) -> float:
    """Relaxation bound for configurations that extend ``fixed_prefix``.

    Items ``0..len(fixed_prefix)-1`` are fixed; the rest are free and may
    absorb at most ``residual_W`` of minimum weight, fractionally.
    """
    k = len(fixed_prefix)
    value = sum(v * x for v, x in zip(instance.values, fixed_prefix))
    free = [v / lo for v, lo in zip(instance.values[k:], instance.w_min[k:])]
    if not free:
        return value
    return value + max(residual_W, 0.0) * max(free)


def solve_stage1(instance: Instance, limits: SearchLimits = SearchLimits(),
                 tol: Tolerance = DEFAULT_TOL) -> Stage1Result:
    """Maximize total value over Stage-1 feasible configurations.

    Among optima the lexicographically smallest count vector is returned.
    """
    bounds = count_bounds(instance, limits, tol)
    n = instance.n
    W = instance.target_weight
    eps = tol.abs(W)
    # pruning is looser than the leaf test so float reordering never cuts a
    # configuration that stage1_feasible would accept
    slack = 2 * eps
    order = sorted(range(n), key=lambda i: (-instance.values[i] / instance.w_min[i], i))
    val = [instance.values[i] for i in order]
    lo = [instance.w_min[i] for i in order]
    hi = [instance.w_max[i] for i in order]
    ub = [bounds[i] for i in order]
    ratio = [v / w for v, w in zip(val, lo)]
    # best high/low ratio over the remaining suffix, for the reachability test
    stretch = [0.0] * (n + 1)
    for d in range(n - 1, -1, -1):
        stretch[d] = max(stretch[d + 1], hi[d] / lo[d])
    # total high weight if every remaining item is at its count bound
    box_high = [0.0] * (n + 1)
    for d in range(n - 1, -1, -1):
        box_high[d] = box_high[d + 1] + ub[d] * hi[d]

    deadline = None
    if limits.time_budget_ms is not None:
        deadline = time.monotonic() + limits.time_budget_ms / 1000.0

    counts = [0] * n  # in original index order
    best: list = [None, None]  # objective, configuration
    nodes = 0
    hit_limit = False

    def consider_leaf():
        config = tuple(counts)
        if not weight_span(instance, config).contains(W, eps):
            return
        obj = objective_value(instance, config)
        if best[0] is None or obj > best[0] or (obj == best[0] and config < best[1]):
            best[0], best[1] = obj, config

    def dfs(d, value, low, high):
        nonlocal nodes, hit_limit
        nodes += 1
        if nodes > limits.max_nodes or (
                deadline is not None and nodes % 1024 == 0 and time.monotonic() > deadline):
            hit_limit = True
            return
        if d == n:
            consider_leaf()
            return
        room = W + slack - low
        reach = min(box_high[d], room * stretch[d])
        if high + reach < W - slack:
            return
        if best[0] is not None and value + room * ratio[d] < best[0] - tol.abs(best[0]):
            return
        i = order[d]
        top = min(ub[d], math.floor(room / lo[d]))
        for c in range(top, -1, -1):
            counts[i] = c
            dfs(d + 1, value + c * val[d], low + c * lo[d], high + c * hi[d])
            if hit_limit:
                break
        counts[i] = 0

    dfs(0, 0.0, 0.0, 0.0)

    if hit_limit:
        return Stage1Result(LIMIT_EXCEEDED, best[1], best[0], nodes)
    if best[1] is None:
        return Stage1Result(INFEASIBLE, None, None, nodes)
    return Stage1Result(OPTIMAL, best[1], best[0], nodes)
