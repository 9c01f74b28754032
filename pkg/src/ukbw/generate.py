"""Seeded random instance generation.

The random stream is SplitMix64 (Steele, Lea and Flood 2014), written out
here so that a given seed yields the same instance on every platform and in
every version. Draw order is part of the contract:

1. for each item i: value ~ U(value_range), w_min ~ U(wmin_range),
   factor ~ U(span_factor_range), w_max = w_min * factor;
2. span_hit: for each item a count ~ U{count_range}; if all counts are zero,
   one index ~ U{0..n-1} gets count 1; then t ~ U[0, 1) and
   W = low + t * (high - low) over that configuration's span;
   random: W ~ U(0, 3 * n * max(w_max)).

``U(lo, hi)`` is ``lo + u * (hi - lo)`` with ``u = (next() >> 11) * 2**-53``;
``U{a..b}`` is ``a + (next() % (b - a + 1))``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Instance, ItemType, total_weight

MASK64 = (1 << 64) - 1

SPAN_HIT = "span_hit"
RANDOM = "random"


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def unit(self) -> float:
        return (self.next() >> 11) * (1.0 / (1 << 53))

    def uniform(self, lo: float, hi: float) -> float:
        return lo + self.unit() * (hi - lo)

    def integer(self, lo: int, hi: int) -> int:
        return lo + self.next() % (hi - lo + 1)


@dataclass(frozen=True)
class GeneratorSpec:
    n: int
    seed: int
    value_range: tuple[float, float] = (1.0, 10.0)
    wmin_range: tuple[float, float] = (1.0, 5.0)
    span_factor_range: tuple[float, float] = (1.0, 2.0)
    target_mode: str = SPAN_HIT
    count_range: tuple[int, int] = (0, 3)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        for name in ("value_range", "wmin_range", "span_factor_range"):
            lo, hi = getattr(self, name)
            if not 0 < lo <= hi:
                raise ValueError(f"{name} must satisfy 0 < lo <= hi")
        if self.span_factor_range[0] < 1:
            raise ValueError("span factors must be >= 1")
        lo, hi = self.count_range
        if not 0 <= lo <= hi:
            raise ValueError("count_range must satisfy 0 <= lo <= hi")
        if self.target_mode not in (SPAN_HIT, RANDOM):
            raise ValueError(f"unknown target mode {self.target_mode!r}")


def generate_instance(spec: GeneratorSpec) -> Instance:
    rng = SplitMix64(spec.seed)
    items = []
    for _ in range(spec.n):
        value = rng.uniform(*spec.value_range)
        w_min = rng.uniform(*spec.wmin_range)
        w_max = w_min * rng.uniform(*spec.span_factor_range)
        items.append(ItemType(value, w_min, w_max))

    if spec.target_mode == SPAN_HIT:
        counts = [rng.integer(*spec.count_range) for _ in range(spec.n)]
        if not any(counts):
            counts[rng.integer(0, spec.n - 1)] = 1
        low = total_weight(counts, [it.w_min for it in items])
        high = total_weight(counts, [it.w_max for it in items])
        W = low + rng.unit() * (high - low)
    else:
        W = rng.uniform(0.0, 3.0 * spec.n * max(it.w_max for it in items))
    return Instance(tuple(items), W)
