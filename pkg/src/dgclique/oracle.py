"""Exhaustive reference enumerator for (delta, gamma)-maximal cliques on tiny networks.

Every static clique ``X`` and every instance-timestamp interval of ``X``'s edges is
considered. Two facts keep it fast without changing the answer:

* a window's weight is piecewise constant in its start ``tau`` and only changes at
  ``t + 1`` or ``t - delta + 1`` for an instance time ``t``, so the failing starts of
  each edge form a short list of intervals;
* for intervals of length >= delta the set of checked starts grows with ``te``, so
  for a fixed ``tb`` only the largest valid ``te`` can be duration-wise maximal.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .network import EdgeTimeline, TemporalNetwork
from .stretch import check_parameters


class Clique(NamedTuple):
    nodes: tuple[int, ...]
    tb: int
    te: int


class OracleCapError(ValueError):
    pass


@dataclass(frozen=True)
class OracleConfig:
    max_nodes: int = 10
    max_instances: int = 80


def _bad_starts(tl: EdgeTimeline, delta: int, gamma: float, lo: int, hi: int) -> list[tuple[int, int]]:
    """Maximal runs of ``tau`` in ``[lo, hi]`` whose window ``[tau, tau+delta-1]`` weighs less than gamma."""
    cuts = {lo}
    for t in tl.times:
        for tau in (t + 1, t - delta + 1):
            if lo < tau <= hi:
                cuts.add(tau)
    starts = sorted(cuts)
    runs: list[tuple[int, int]] = []
    for i, s in enumerate(starts):
        end = starts[i + 1] - 1 if i + 1 < len(starts) else hi
        if tl.window_weight(s, s + delta - 1) < gamma:
            if runs and runs[-1][1] == s - 1:
                runs[-1] = (runs[-1][0], end)
            else:
                runs.append((s, end))
    return runs


def _merge(runs: list[tuple[int, int]]) -> tuple[list[int], list[int]]:
    runs.sort()
    starts: list[int] = []
    ends: list[int] = []
    for a, b in runs:
        if ends and a <= ends[-1] + 1:
            ends[-1] = max(ends[-1], b)
        else:
            starts.append(a)
            ends.append(b)
    return starts, ends


def _maximal_intervals(
    network: TemporalNetwork, nodes: tuple[int, ...], delta: int, gamma: float, bad: dict
) -> list[tuple[int, int]]:
    """Duration-wise maximal valid intervals of the static clique ``nodes``."""
    pairs = list(combinations(nodes, 2))
    timelines = [network.timeline(u, v) for u, v in pairs]
    times = sorted({t for tl in timelines for t in tl.times})
    bad_starts, bad_ends = _merge([run for pair in pairs for run in bad[pair]])

    def first_bad_at_or_after(tau: int) -> int | None:
        i = bisect_left(bad_ends, tau)
        if i == len(bad_ends):
            return None
        return max(bad_starts[i], tau)

    best: list[tuple[int, int]] = []
    for i, tb in enumerate(times):
        top = None
        # long intervals: the largest te whose checked starts avoid every failing run
        blocked = first_bad_at_or_after(tb)
        if blocked != tb:
            limit = network.t_max if blocked is None else blocked - 1 + delta - 1
            j = bisect_right(times, limit) - 1
            if times[j] - tb + 1 >= delta:
                top = times[j]
        if top is None:
            # short intervals: the single window [tb, te]
            for te in times[i:]:
                if te - tb + 1 >= delta:
                    break
                if all(tl.window_weight(tb, te) >= gamma for tl in timelines):
                    top = te
        if top is not None:
            best.append((tb, top))
    return [
        (tb, te)
        for tb, te in best
        if not any(a <= tb and te <= b and (a, b) != (tb, te) for a, b in best)
    ]


def oracle_enumerate(
    network: TemporalNetwork, delta: int, gamma: float, config: OracleConfig = OracleConfig()
) -> set[Clique]:
    """All (delta, gamma)-maximal cliques by exhaustive search."""
    if network.node_count > config.max_nodes:
        raise OracleCapError(f"{network.node_count} nodes exceed the oracle cap of {config.max_nodes}")
    if network.instance_count > config.max_instances:
        raise OracleCapError(
            f"{network.instance_count} instances exceed the oracle cap of {config.max_instances}"
        )
    check_parameters(delta, gamma)

    bad = {
        pair: _bad_starts(tl, delta, gamma, network.t_min, network.t_max)
        for pair, tl in network.timelines.items()
    }
    static_cliques = [
        nodes
        for k in range(2, network.node_count + 1)
        for nodes in combinations(range(network.node_count), k)
        if all(network.has_edge(u, v) for u, v in combinations(nodes, 2))
    ]
    candidates = {nodes: _maximal_intervals(network, nodes, delta, gamma, bad) for nodes in static_cliques}

    result = set()
    for nodes, intervals in candidates.items():
        supersets = [
            other for other in static_cliques if len(other) > len(nodes) and set(nodes) <= set(other)
        ]
        for tb, te in intervals:
            dominated = any(a <= tb and te <= b for other in supersets for a, b in candidates[other])
            if not dominated:
                result.add(Clique(nodes, tb, te))
    return result


def is_dominated(c: Clique, other: Clique) -> bool:
    """Maximality relation between two valid cliques: does ``other`` rule ``c`` out?"""
    encloses = other.tb <= c.tb and c.te <= other.te
    if set(c.nodes) < set(other.nodes):
        return encloses
    if c.nodes == other.nodes:
        return encloses and (other.tb, other.te) != (c.tb, c.te)
    return False
