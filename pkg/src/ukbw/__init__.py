"""Two-stage solver for the strict unbounded knapsack with bounded weights."""

from .core import (
    DEFAULT_TOL,
    Instance,
    ItemType,
    Solution,
    Tolerance,
    WeightSpan,
    check_solution,
    objective_value,
    support,
    total_weight,
    validate_instance,
    weight_span,
)
from .degeneracy import DegeneracyCertificate, find_degeneracy, shifted_weights
from .stage1 import SearchLimits, Stage1Result, solve_stage1, stage1_feasible
from .stage2 import Stage2Objective, default_weights, sigma, solve_stage2_linear, solve_two_stage

__version__ = "0.1.0"
