import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import corpus, sample_feasible_weights
from test_stage1 import small_instances
from ukbw import (
    Instance,
    SearchLimits,
    Stage2Objective,
    check_solution,
    default_weights,
    sigma,
    solve_stage1,
    solve_stage2_linear,
    solve_two_stage,
    total_weight,
    weight_span,
)
from ukbw.core import InfeasibleConfigurationError
from ukbw.oracle import enumerate_configurations, exchange_optimality_check
from ukbw.stage2 import DegenerateSpanError


def test_sigma_examples(inst_a, inst_b):
    assert sigma(inst_a, (7, 0)) == 0  # span [7, 14]
    assert sigma(inst_a, (0, 3)) == pytest.approx(1 / 3)  # (7 - 6) / (9 - 6)
    assert sigma(inst_b, (1, 1)) == 0.5


def test_sigma_errors(inst_a, inst_d):
    with pytest.raises(InfeasibleConfigurationError):
        sigma(inst_a, (4, 2))
    with pytest.raises(DegenerateSpanError, match="degenerate span"):
        sigma(inst_d, (4,))  # point span {4}, W = 5
    assert sigma(inst_d, (5,)) == 0


def test_default_weights(inst_a, inst_b):
    assert default_weights(inst_a, (7, 0)) == (1, 2)
    w = default_weights(inst_a, (0, 3))
    assert w == pytest.approx((4 / 3, 7 / 3))
    assert total_weight((0, 3), w) == pytest.approx(7)
    assert default_weights(inst_b, (1, 1)) == (2, 2)


def test_sigma_boundaries():
    lo_inst = Instance.from_lists([1, 2], [1.1, 0.7], [2.3, 1.9], 1.1 * 2 + 0.7 * 3)
    assert sigma(lo_inst, (2, 3)) == 0
    assert default_weights(lo_inst, (2, 3)) == lo_inst.w_min
    hi_inst = Instance.from_lists([1, 2], [1.1, 0.7], [2.3, 1.9], 2.3 * 2 + 1.9 * 3)
    assert sigma(hi_inst, (2, 3)) == 1
    assert default_weights(hi_inst, (2, 3)) == hi_inst.w_max


def test_linear_examples(inst_b):
    assert solve_stage2_linear(inst_b, (1, 1), (1, 0)) == (3, 1)
    assert solve_stage2_linear(inst_b, (1, 1), (-1, 0)) == (1, 3)
    assert solve_stage2_linear(inst_b, (1, 1), (0, 0)) == (2, 2)


def test_linear_unused_coordinates_follow_sign():
    inst = Instance.from_lists([1, 1, 1], [1, 1, 1], [2, 2, 2], 3)
    assert solve_stage2_linear(inst, (0, 2, 0), (5, 1, -5)) == (2, 1.5, 1)


def test_linear_rejects_infeasible(inst_a):
    with pytest.raises(InfeasibleConfigurationError):
        solve_stage2_linear(inst_a, (1, 0), (1, 1))


def test_two_stage_examples(inst_a, inst_b, inst_c):
    sol = solve_two_stage(inst_a)
    assert (sol.status, sol.configuration, sol.weights, sol.objective) == \
        ("optimal", (7, 0), (1, 2), 21)
    assert solve_two_stage(inst_c).status == "infeasible"
    assert solve_two_stage(inst_c).weights is None

    # the oracle lists every value-4 configuration; (0, 4) is the smallest
    optima = [x for x in enumerate_configurations(inst_b) if sum(x) == 4]
    assert min(optima) == (0, 4)
    sol = solve_two_stage(inst_b, Stage2Objective.linear([1, 0]))
    assert sol.configuration == (0, 4)
    assert sol.weights == (3, 1)
    assert exchange_optimality_check(inst_b, sol.configuration, (1, 0), sol.weights)


def test_objective_validation():
    with pytest.raises(ValueError):
        Stage2Objective("quadratic")
    with pytest.raises(ValueError):
        Stage2Objective("linear")


@settings(max_examples=150, deadline=None)
@given(small_instances())
def test_default_weights_round_trip(inst):
    W = inst.target_weight
    eps = 1e-9 * max(1, W)
    for x in enumerate_configurations(inst):
        w = default_weights(inst, x)
        assert abs(total_weight(x, w) - W) <= eps
        assert all(lo <= wi <= hi for wi, lo, hi in zip(w, inst.w_min, inst.w_max))


@settings(max_examples=100, deadline=None)
@given(small_instances(), st.data())
def test_preemption(inst, data):
    res = solve_stage1(inst)
    if res.configuration is None:
        return
    c = data.draw(st.lists(st.floats(-3, 3), min_size=inst.n, max_size=inst.n))
    for obj in (Stage2Objective(), Stage2Objective.linear(c)):
        sol = solve_two_stage(inst, obj)
        assert sol.configuration == res.configuration
        assert sol.objective == res.objective
        assert check_solution(inst, sol).ok


def _feasible_pairs(count, seed):
    rng = np.random.default_rng(seed)
    for inst in corpus(count, max_box=2000, start=seed):
        configs = enumerate_configurations(inst)
        if not configs:
            continue
        x = configs[rng.integers(len(configs))]
        c = rng.uniform(-1, 1, inst.n)
        yield inst, x, c, rng


def test_linear_beats_random_samples():
    for inst, x, c, rng in _feasible_pairs(60, seed=1000):
        w = solve_stage2_linear(inst, x, c)
        best = float(np.max(sample_feasible_weights(inst, x, rng, 2000) @ c))
        assert float(np.dot(c, w)) >= best - 1e-9
        assert exchange_optimality_check(inst, x, c, w)


def test_exchange_moves_do_not_improve():
    step = 1e-4
    for inst, x, c, _ in _feasible_pairs(60, seed=2000):
        w = np.array(solve_stage2_linear(inst, x, c))
        eps = 1e-9 * max(1, inst.target_weight)
        f = float(np.dot(c, w))
        used = [i for i, xi in enumerate(x) if xi > 0]
        for i in used:
            for j in used:
                if i == j:
                    continue
                moved = w.copy()
                moved[i] -= step / x[i]
                moved[j] += step / x[j]
                if moved[i] < inst.w_min[i] or moved[j] > inst.w_max[j]:
                    continue
                assert float(np.dot(c, moved)) <= f + eps


def test_linear_large_instance_feasible():
    inst = Instance.from_lists([1, 2, 3], [1, 2, 3], [4, 5, 6], 40)
    x = solve_two_stage(inst, limits=SearchLimits()).configuration
    w = solve_stage2_linear(inst, x, (0.3, -0.2, 0.1))
    assert abs(total_weight(x, w) - 40) <= 4e-8
    low, high = weight_span(inst, x)
    assert low <= 40 <= high
