"""Per-edge enumeration of 2-node duration-wise maximal (delta, gamma)-cliques."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .network import EdgeTimeline, Pair, TemporalNetwork

log = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True, order=True)
class CliqueRecord:
    """A node set with its interval ``[tb, te]`` and inner borders.

    ``tb_max`` is the earliest time by which gamma weight is reached from ``tb``
    and ``te_min`` the latest time from which gamma weight still reaches ``te``.
    The outer borders follow from delta and are never stored.
    """

    tb: int
    te: int
    nodes: tuple[int, ...]
    tb_max: int
    te_min: int

    def tb_min(self, delta: int) -> int:
        return self.tb_max - delta + 1

    def te_max(self, delta: int) -> int:
        return self.te_min + delta - 1

    @property
    def interval(self) -> tuple[int, int]:
        return self.tb, self.te

    @property
    def key(self) -> tuple[tuple[int, ...], int, int]:
        return self.nodes, self.tb, self.te


class StretchStore:
    """All 2-node stretch records, keyed by canonical node pair, each list in ``tb`` order."""

    def __init__(self, by_pair: dict[Pair, list[CliqueRecord]] | None = None):
        self.by_pair: dict[Pair, list[CliqueRecord]] = by_pair if by_pair is not None else {}

    def get(self, u: int, v: int) -> list[CliqueRecord]:
        return self.by_pair.get((u, v) if u < v else (v, u), [])

    def __len__(self) -> int:
        return sum(len(recs) for recs in self.by_pair.values())

    def __iter__(self) -> Iterator[CliqueRecord]:
        """Records ordered by increasing ``max(X)``, then ``min(X)``, then ``tb``."""
        for (u, v) in sorted(self.by_pair, key=lambda p: (p[1], p[0])):
            yield from self.by_pair[(u, v)]

    def dump_tsv(self, fh) -> None:
        for rec in self:
            u, v = rec.nodes
            fh.write(f"{u}\t{v}\t{rec.tb}\t{rec.tb_max}\t{rec.te_min}\t{rec.te}\n")


@dataclass
class StretchStats:
    edges: int = 0
    skipped_edges: int = 0
    records: int = 0
    advances: int = 0
    max_advance_ratio: float = 0.0
    work_bound_violations: int = 0
    negative_edges: int = 0
    fallbacks: int = 0
    fallback_pairs: list[Pair] = field(default_factory=list)


def check_parameters(delta: int, gamma: float) -> None:
    if isinstance(delta, bool) or not isinstance(delta, int) or delta < 1:
        raise ValueError(f"delta must be a positive integer, got {delta!r}")
    if not math.isfinite(gamma) or gamma <= 0:
        # with gamma <= 0 empty windows qualify and instance bounding breaks down
        raise ValueError(f"gamma must be a positive finite number, got {gamma!r}")


def two_pointer_stretch(
    timeline: EdgeTimeline, delta: int, gamma: float, nodes: Pair = (0, 1)
) -> tuple[list[CliqueRecord], int]:
    """Linear two-pointer stretch over one timeline.

    Returns the records in ``tb`` order and the number of ``bi``/``ei`` advances.
    The window weight ``[bi, ei]`` is read off the prefix sums instead of a
    running total so that it matches :meth:`EdgeTimeline.window_weight` bit for bit.
    """
    times, weights, prefix = timeline.times, timeline.weights, timeline.prefix
    n = len(times)
    out: list[CliqueRecord] = []
    bi = ei = 0
    advances = 0

    def emit(tb: int, tb_max: int) -> None:
        out.append(CliqueRecord(tb, times[ei], nodes, tb_max, times[bi]))

    while True:
        # grow the window until it first reaches gamma
        while prefix[ei + 1] - prefix[bi] < gamma:
            ei += 1
            advances += 1
            if ei == n:
                return out, advances
            while times[ei] - times[bi] >= delta:
                bi += 1
                advances += 1
        tb, tb_max = times[bi], times[ei]

        done = False
        while not done:
            old_bi, old_ei = bi, ei
            # take in every instance still within delta of bi
            while ei + 1 < n and times[ei + 1] - times[bi] < delta:
                ei += 1
                advances += 1
            # drop leading instances while the window still reaches gamma
            while bi + 1 <= ei and prefix[ei + 1] - prefix[bi + 1] >= gamma:
                bi += 1
                advances += 1
            # timeline exhausted
            if ei + 1 == n:
                emit(tb, tb_max)
                return out, advances
            # stuck: slide past bi and look for gamma again before the gap reaches delta
            if bi == old_bi and ei == old_ei:
                bt = times[bi] + 1
                et = ei
                while prefix[et + 1] - prefix[bi + 1] < gamma:
                    et += 1
                    if et == n:
                        emit(tb, tb_max)
                        return out, advances
                    if times[et] - bt >= delta:
                        emit(tb, tb_max)
                        done = True
                        et -= 1
                        break
                bi += 1
                advances += 1 + (et - ei)
                ei = et


def brute_stretch_edge(
    timeline: EdgeTimeline, delta: int, gamma: float, nodes: Pair = (0, 1)
) -> list[CliqueRecord]:
    """Quadratic reference stretch: all duration-wise maximal valid instance intervals.

    Borders are defined directly: ``tb_max`` is the first instance time ``t`` with
    ``f([tb, t]) >= gamma`` and ``te_min`` the last with ``f([t, te]) >= gamma``.
    """
    times = timeline.times
    valid = [
        (i, j)
        for i in range(len(times))
        for j in range(i, len(times))
        if _pair_interval_valid(timeline, times[i], times[j], delta, gamma)
    ]
    out = []
    for i, j in valid:
        if any(a <= i and j <= b and (a, b) != (i, j) for a, b in valid):
            continue
        tb, te = times[i], times[j]
        tb_max = next(t for t in times[i:j + 1] if timeline.window_weight(tb, t) >= gamma)
        te_min = next(t for t in reversed(times[i:j + 1]) if timeline.window_weight(t, te) >= gamma)
        out.append(CliqueRecord(tb, te, nodes, tb_max, te_min))
    return out


def stretch_edge(
    timeline: EdgeTimeline,
    delta: int,
    gamma: float,
    nodes: Pair = (0, 1),
    stats: StretchStats | None = None,
    check_negative: bool = True,
) -> list[CliqueRecord]:
    """Stretch one edge; negative-weight timelines are cross-checked against the brute force."""
    records, advances = two_pointer_stretch(timeline, delta, gamma, nodes)
    negative = timeline.has_negative
    if stats is not None:
        stats.edges += 1
        stats.advances += advances
        ratio = advances / len(timeline)
        stats.max_advance_ratio = max(stats.max_advance_ratio, ratio)
        if ratio > 2:
            stats.work_bound_violations += 1
        stats.negative_edges += negative
    if negative and check_negative:
        reference = brute_stretch_edge(timeline, delta, gamma, nodes)
        if reference != records:
            log.debug("stretch fallback on %s: %s != %s", nodes, records, reference)
            records = reference
            if stats is not None:
                stats.fallbacks += 1
                stats.fallback_pairs.append(nodes)
    if stats is not None:
        stats.records += len(records)
    return records


def stretch_phase(
    network: TemporalNetwork,
    delta: int,
    gamma: float,
    stats: StretchStats | None = None,
    check_negative: bool = True,
) -> StretchStore:
    check_parameters(delta, gamma)
    store = StretchStore()
    for pair in sorted(network.timelines):
        timeline = network.timelines[pair]
        if timeline.total_weight < gamma:
            if stats is not None:
                stats.skipped_edges += 1
            continue
        records = stretch_edge(timeline, delta, gamma, pair, stats, check_negative)
        if records:
            store.by_pair[pair] = records
    return store


def _critical_taus(timeline: EdgeTimeline, lo: int, hi: int, delta: int) -> Iterator[int]:
    # a window's content only changes where an instance leaves (t + 1) or enters (t - delta + 1)
    yield lo
    for t in timeline.times:
        for tau in (t + 1, t - delta + 1):
            if lo < tau <= hi:
                yield tau


def _pair_interval_valid(timeline: EdgeTimeline, tb: int, te: int, delta: int, gamma: float) -> bool:
    if te - tb + 1 < delta:
        return timeline.window_weight(tb, te) >= gamma
    hi = te - delta + 1
    return all(timeline.window_weight(tau, tau + delta - 1) >= gamma for tau in _critical_taus(timeline, tb, hi, delta))


def validate_record(network: TemporalNetwork, delta: int, gamma: float, record: CliqueRecord) -> bool:
    """Check the instance-bounded (delta, gamma)-clique conditions directly.

    Intervals shorter than delta are checked as the single window ``[tb, te]``.
    """
    tb, te = record.tb, record.te
    if te < tb or len(record.nodes) < 2:
        return False
    timelines = []
    for u, v in combinations(record.nodes, 2):
        tl = network.timeline(u, v)
        if tl is None:
            return False
        timelines.append(tl)
    if not any(tl.earliest_at_or_after(tb) == tb for tl in timelines):
        return False
    if not any(tl.latest_at_or_before(te) == te for tl in timelines):
        return False
    return all(_pair_interval_valid(tl, tb, te, delta, gamma) for tl in timelines)
