import pytest
from hypothesis import given, settings

from test_stage1 import small_instances
from ukbw import default_weights, stage1_feasible, total_weight
from ukbw.core import InfeasibleConfigurationError
from ukbw.oracle import (
    EnumerationCap,
    EnumerationCapError,
    count_box,
    enumerate_configurations,
    exchange_optimality_check,
    oracle_optimum,
    weight_by_bisection,
)


def test_enumerate_instance_a(inst_a):
    configs = enumerate_configurations(inst_a)
    expected = ([(x1, 0) for x1 in range(4, 8)] + [(x1, 1) for x1 in range(2, 6)]
                + [(x1, 2) for x1 in range(1, 4)] + [(0, 3), (1, 3)])
    assert configs == sorted(expected)
    assert len(configs) == 13


def test_enumerate_small_cases(inst_c, inst_d):
    assert enumerate_configurations(inst_c) == []
    assert enumerate_configurations(inst_d) == [(5,)]


def test_enumeration_cap(inst_a):
    with pytest.raises(EnumerationCapError):
        enumerate_configurations(inst_a, EnumerationCap(31))
    assert len(list(count_box(inst_a, EnumerationCap(32)))) == 32


def test_oracle_optimum(inst_a, inst_c, inst_d):
    res = oracle_optimum(inst_a)
    assert (res.status, res.configuration, res.objective) == ("optimal", (7, 0), 21)
    assert oracle_optimum(inst_c).status == "infeasible"
    res = oracle_optimum(inst_d)
    assert (res.configuration, res.objective) == ((5,), 5)


def test_bisection_examples(inst_a, inst_b):
    assert weight_by_bisection(inst_b, (1, 1)) == (2, 2)
    w = weight_by_bisection(inst_a, (0, 3))
    assert w == pytest.approx((4 / 3, 7 / 3), abs=1e-8)
    assert abs(total_weight((0, 3), w) - 7) <= 7e-9
    with pytest.raises(InfeasibleConfigurationError, match="no feasible weight vector"):
        weight_by_bisection(inst_a, (1, 0))


def test_exchange_examples(inst_a, inst_b):
    assert exchange_optimality_check(inst_b, (1, 1), (1, 0), (3, 1))
    assert not exchange_optimality_check(inst_b, (1, 1), (1, 0), (2, 2))
    assert exchange_optimality_check(inst_b, (1, 1), (0, 0), (2, 2))
    assert exchange_optimality_check(inst_a, (0, 3), (0, 0), (1.5, 7 / 3))
    with pytest.raises(InfeasibleConfigurationError):
        exchange_optimality_check(inst_b, (1, 1), (1, 0), (3, 3))


def test_exchange_flags_unused_coordinate(inst_b):
    # item 0 is unused, so with c_0 > 0 it should sit at w_max
    assert not exchange_optimality_check(inst_b, (0, 4), (1, 0), (2, 1))
    assert exchange_optimality_check(inst_b, (0, 4), (1, 0), (3, 1))


@settings(max_examples=200, deadline=None)
@given(small_instances())
def test_feasibility_equivalence(inst):
    for x in count_box(inst):
        try:
            weight_by_bisection(inst, x)
            ok = True
        except InfeasibleConfigurationError:
            ok = False
        assert ok == stage1_feasible(inst, x)


@settings(max_examples=100, deadline=None)
@given(small_instances())
def test_bisection_agrees_with_sigma(inst):
    eps = 1e-9 * max(1, inst.target_weight)
    for x in enumerate_configurations(inst):
        a = total_weight(x, weight_by_bisection(inst, x))
        b = total_weight(x, default_weights(inst, x))
        assert abs(a - b) <= 2 * eps
