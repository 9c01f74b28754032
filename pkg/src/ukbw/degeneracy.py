"""Non-uniqueness of optimal weights.

If one used item can get heavier and another used item can get lighter,
weight can be traded between them without changing the total, which gives a
one-parameter family of equally good solutions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DEFAULT_TOL,
    Instance,
    Solution,
    Tolerance,
    UKBWError,
    WeightVector,
    check_solution,
    support,
)


class InvalidSolutionError(UKBWError, ValueError):
    pass


@dataclass(frozen=True)
class DegeneracyCertificate:
    i: int  # item whose weight goes up
    j: int  # item whose weight goes down
    gamma: float  # x_j / x_i
    delta_max: float  # largest admissible increase of w_i


def find_degeneracy(instance: Instance, solution: Solution,
                    tol: Tolerance = DEFAULT_TOL) -> DegeneracyCertificate | None:
    """First ordered pair ``(i, j)`` of used items with opposite weight slack.

    Returns None when no such pair exists, i.e. the solution's weights cannot
    be perturbed along any two-item exchange.
    """
    report = check_solution(instance, solution, tol)
    if not report.ok or solution.configuration is None:
        raise InvalidSolutionError("; ".join(report.violations) or "solution has no configuration")
    x, w = solution.configuration, solution.weights
    eps = tol.abs(instance.target_weight)
    used = sorted(support(x))
    for i in used:
        up = instance.w_max[i] - w[i]
        if up <= eps:
            continue
        for j in used:
            if j == i:
                continue
            down = w[j] - instance.w_min[j]
            if down <= eps:
                continue
            gamma = x[j] / x[i]
            return DegeneracyCertificate(i, j, gamma, min(up, gamma * down))
    return None


def shifted_weights(solution: Solution, cert: DegeneracyCertificate,
                    delta: float) -> WeightVector:
    """Weights moved ``delta`` up on item i and ``delta / gamma`` down on item j.

    The total weight is unchanged for any ``delta`` in ``[0, delta_max]``.
    """
    if not 0 <= delta <= cert.delta_max:
        raise ValueError(f"delta {delta!r} outside [0, {cert.delta_max!r}]")
    w = list(solution.weights)
    w[cert.i] += delta
    w[cert.j] -= delta / cert.gamma
    return tuple(w)
