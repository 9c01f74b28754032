"""Stage 2: choose unit weights for a fixed configuration.

With the counts ``x`` fixed, the remaining problem is

    maximize f(w)  subject to  <w, x> = W,  w_min <= w <= w_max.

For a constant ``f`` any feasible point will do and the interpolated point
``w_min + sigma * (w_max - w_min)`` is returned. For linear ``f`` the problem
is a continuous knapsack with an equality constraint and is solved greedily.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    DEFAULT_TOL,
    Configuration,
    DimensionError,
    InfeasibleConfigurationError,
    Instance,
    Solution,
    Tolerance,
    WeightVector,
    support,
    weight_span,
)
from .stage1 import SearchLimits, solve_stage1, stage1_feasible

CONSTANT = "constant"
LINEAR = "linear"


class DegenerateSpanError(InfeasibleConfigurationError):
    """Zero-width weight span that does not coincide with the target."""


@dataclass(frozen=True)
class Stage2Objective:
    kind: str = CONSTANT
    coefficients: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.kind not in (CONSTANT, LINEAR):
            raise ValueError(f"unknown objective kind {self.kind!r}")
        if self.kind == LINEAR:
            if self.coefficients is None:
                raise ValueError("linear objective needs coefficients")
            object.__setattr__(self, "coefficients",
                               tuple(float(c) for c in self.coefficients))

    @classmethod
    def linear(cls, coefficients: Sequence[float]) -> Stage2Objective:
        return cls(LINEAR, tuple(coefficients))


def _require_feasible(instance, config, tol):
    if len(config) != instance.n:
        raise DimensionError(f"length mismatch: {len(config)} != {instance.n}")
    if not stage1_feasible(instance, config, tol):
        span = weight_span(instance, config)
        raise InfeasibleConfigurationError(
            f"configuration {tuple(config)} has span [{span.low:.17g}, {span.high:.17g}] "
            f"which misses W={instance.target_weight:.17g}")


def sigma(instance: Instance, config: Sequence[int],
          tol: Tolerance = DEFAULT_TOL) -> float:
    """Relative position of the target weight inside the span of ``config``.

    Clipped to ``[0, 1]`` so targets within tolerance outside the span map to
    the nearer end. A zero-width span gives 0 when it hits the target.
    """
    W = instance.target_weight
    low, high = weight_span(instance, config)
    if high == low and abs(W - low) > tol.abs(W):
        raise DegenerateSpanError(
            f"degenerate span, W unreachable: span is the point {low:.17g}, W={W:.17g}")
    _require_feasible(instance, config, tol)
    if high == low:
        return 0.0
    return min(1.0, max(0.0, (W - low) / (high - low)))


def default_weights(instance: Instance, config: Sequence[int],
                    tol: Tolerance = DEFAULT_TOL) -> WeightVector:
    """Guaranteed-feasible weights: every item interpolated at the same sigma.

    Items with zero count get the interpolated weight too, although it does
    not affect feasibility.
    """
    s = sigma(instance, config, tol)
    if s == 1.0:
        return instance.w_max
    return tuple(min(hi, lo + s * (hi - lo))
                 for lo, hi in zip(instance.w_min, instance.w_max))


def solve_stage2_linear(instance: Instance, config: Sequence[int],
                        c: Sequence[float],
                        tol: Tolerance = DEFAULT_TOL) -> WeightVector:
    """Maximize ``sum(c_i * w_i)`` over feasible weights for ``config``."""
    _require_feasible(instance, config, tol)
    if len(c) != instance.n:
        raise DimensionError(f"length mismatch: {len(c)} != {instance.n}")
    if all(ci == 0 for ci in c):
        return default_weights(instance, config, tol)

    used = support(config)
    w = [hi if (i not in used and ci > 0) else lo
         for i, (ci, lo, hi) in enumerate(zip(c, instance.w_min, instance.w_max))]
    slack = instance.target_weight - sum(config[i] * instance.w_min[i] for i in sorted(used))
    # raise weights in order of objective gain per unit of total weight
    for i in sorted(used, key=lambda i: (-c[i] / config[i], i)):
        if slack <= 0:
            break
        lo, hi = instance.w_min[i], instance.w_max[i]
        step = min(hi - lo, slack / config[i])
        w[i] = hi if step == hi - lo else lo + step
        slack -= step * config[i]
    return tuple(w)


def solve_two_stage(instance: Instance,
                    objective: Stage2Objective = Stage2Objective(),
                    limits: SearchLimits = SearchLimits(),
                    tol: Tolerance = DEFAULT_TOL) -> Solution:
    """Solve Stage 1, then pick weights for its configuration.

    The configuration is never revisited by Stage 2. A limit-exceeded run
    still gets weights when it found an incumbent.
    """
    if objective.kind == LINEAR and len(objective.coefficients) != instance.n:
        raise DimensionError("objective coefficients do not match item count")
    res = solve_stage1(instance, limits, tol)
    x: Configuration | None = res.configuration
    if x is None:
        return Solution(res.status)
    if objective.kind == LINEAR:
        w = solve_stage2_linear(instance, x, objective.coefficients, tol)
    else:
        w = default_weights(instance, x, tol)
    return Solution(res.status, x, w, res.objective, sigma(instance, x, tol))

