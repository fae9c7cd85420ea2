"""Seeded random weighted temporal networks for property tests and benchmarks."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .network import TemporalNetwork


@dataclass(frozen=True)
class GeneratorParams:
    nodes: int = 6
    instances: int = 40
    t_min: int = 0
    t_max: int = 30
    # None means every weight is 1
    weight_range: tuple[float, float] | None = None
    integer_weights: bool = True
    seed: int = 0


def generate_random(params: GeneratorParams) -> TemporalNetwork:
    """Uniform random node pairs and timestamps; same-timestamp repeats merge on ingestion."""
    if params.nodes < 2:
        raise ValueError("need at least 2 nodes")
    if params.instances < 1:
        raise ValueError("need at least 1 instance")
    if params.t_max < params.t_min:
        raise ValueError("t_max must not precede t_min")
    if params.weight_range is not None and params.weight_range[1] < params.weight_range[0]:
        raise ValueError("weight range upper bound below lower bound")

    rng = random.Random(params.seed)
    events = []
    for _ in range(params.instances):
        u, v = rng.sample(range(params.nodes), 2)
        t = rng.randint(params.t_min, params.t_max)
        if params.weight_range is None:
            w = 1.0
        elif params.integer_weights:
            w = float(rng.randint(int(params.weight_range[0]), int(params.weight_range[1])))
        else:
            w = rng.uniform(*params.weight_range)
        events.append((u, v, t, w))
    return TemporalNetwork.from_instances(events)
