"""Weighted temporal networks: ingestion, degree-based relabeling and timeline queries."""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

Pair = tuple[int, int]

COLUMN_ORDERS = {
    "uvt": (0, 1, 2),
    "uvtw": (0, 1, 2),
    "tuv": (1, 2, 0),
    "tuvw": (1, 2, 0),
}


class ParseError(ValueError):
    """Raised for malformed input lines or an empty network."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class EdgeTimeline:
    """Time-ordered instances of one static edge.

    ``prefix[i]`` holds the cumulative weight of the first ``i`` instances, so any
    window weight is a difference of two prefix entries.
    """

    times: tuple[int, ...]
    weights: tuple[float, ...]
    prefix: tuple[float, ...] = field(repr=False)

    @classmethod
    def from_sorted(cls, times: Sequence[int], weights: Sequence[float]) -> "EdgeTimeline":
        if not times:
            raise ValueError("timeline must hold at least one instance")
        if len(times) != len(weights):
            raise ValueError("times and weights differ in length")
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValueError("timeline times must be strictly increasing")
        weights = tuple(float(w) for w in weights)
        return cls(tuple(times), weights, tuple(accumulate(weights, initial=0.0)))

    def __len__(self) -> int:
        return len(self.times)

    @property
    def total_weight(self) -> float:
        return self.prefix[-1]

    @property
    def has_negative(self) -> bool:
        return any(w < 0 for w in self.weights)

    def window_weight(self, lo: int, hi: int) -> float:
        """Cumulative weight of the instances with ``lo <= t <= hi``."""
        i = bisect_left(self.times, lo)
        j = bisect_right(self.times, hi)
        if j <= i:
            return 0.0
        return self.prefix[j] - self.prefix[i]

    def earliest_at_or_after(self, bound: int) -> int | None:
        i = bisect_left(self.times, bound)
        return self.times[i] if i < len(self.times) else None

    def latest_at_or_before(self, bound: int) -> int | None:
        i = bisect_right(self.times, bound)
        return self.times[i - 1] if i else None


def window_weight(timeline: EdgeTimeline, lo: int, hi: int) -> float:
    return timeline.window_weight(lo, hi)


def earliest_at_or_after(timeline: EdgeTimeline, bound: int) -> int | None:
    return timeline.earliest_at_or_after(bound)


def latest_at_or_before(timeline: EdgeTimeline, bound: int) -> int | None:
    return timeline.latest_at_or_before(bound)


def relabel(neighbor_counts: Mapping[Hashable, int]) -> dict[Hashable, int]:
    """Assign dense labels in ascending neighbor-count order.

    Ties keep the mapping's iteration order, which callers fill in first-seen
    input order.
    """
    order = sorted(enumerate(neighbor_counts), key=lambda item: (neighbor_counts[item[1]], item[0]))
    return {name: label for label, (_, name) in enumerate(order)}


@dataclass(frozen=True, eq=False)
class TemporalNetwork:
    """Immutable weighted temporal network with nodes labeled ``0 .. node_count - 1``."""

    names: tuple[Hashable, ...]
    adjacency: tuple[tuple[int, ...], ...]
    timelines: Mapping[Pair, EdgeTimeline]
    instance_count: int
    t_min: int
    t_max: int

    @property
    def node_count(self) -> int:
        return len(self.names)

    @property
    def edge_count(self) -> int:
        return len(self.timelines)

    def timeline(self, u: int, v: int) -> EdgeTimeline | None:
        return self.timelines.get((u, v) if u < v else (v, u))

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adjacency[u]

    def has_edge(self, u: int, v: int) -> bool:
        return self.timeline(u, v) is not None

    def shared_neighbors(self, nodes: Iterable[int]) -> list[int]:
        """Common static neighbors of ``nodes``, ascending, via sorted-list intersection."""
        it = iter(nodes)
        common = list(self.adjacency[next(it)])
        for u in it:
            common = _intersect_sorted(common, self.adjacency[u])
            if not common:
                break
        return common

    def instances(self) -> Iterator[tuple[int, int, int, float]]:
        """Yield ``(t, u, v, w)`` per merged instance, grouped by canonical pair."""
        for (u, v), tl in sorted(self.timelines.items()):
            for t, w in zip(tl.times, tl.weights):
                yield t, u, v, w

    @classmethod
    def from_instances(cls, instances: Iterable[tuple[Hashable, Hashable, int, float]]) -> "TemporalNetwork":
        """Build a network from raw ``(u, v, t, w)`` events with arbitrary node names.

        Self-loops are dropped and same-``(u, v, t)`` events merged by summing weights.
        """
        first_seen: dict[Hashable, None] = {}
        merged: dict[tuple[Hashable, Hashable], dict[int, float]] = defaultdict(lambda: defaultdict(float))
        for u, v, t, w in instances:
            first_seen.setdefault(u)
            first_seen.setdefault(v)
            if u == v:
                continue
            key = (u, v) if _name_key(u) <= _name_key(v) else (v, u)
            merged[key][t] += w
        if not merged:
            raise ParseError("empty network: no instances between distinct nodes")

        neighbor_sets: dict[Hashable, set] = {name: set() for name in first_seen}
        for u, v in merged:
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        # nodes seen only in self-loops have no static edges and are dropped
        counts = {name: len(nbrs) for name, nbrs in neighbor_sets.items() if nbrs}
        labels = relabel(counts)

        names: list[Hashable] = [None] * len(labels)
        for name, label in labels.items():
            names[label] = name
        adjacency: list[list[int]] = [[] for _ in names]
        timelines: dict[Pair, EdgeTimeline] = {}
        for (a, b), by_time in merged.items():
            u, v = sorted((labels[a], labels[b]))
            times = sorted(by_time)
            timelines[(u, v)] = EdgeTimeline.from_sorted(times, [by_time[t] for t in times])
            adjacency[u].append(v)
            adjacency[v].append(u)

        return cls(
            names=tuple(names),
            adjacency=tuple(tuple(sorted(a)) for a in adjacency),
            timelines=timelines,
            instance_count=sum(len(tl) for tl in timelines.values()),
            t_min=min(tl.times[0] for tl in timelines.values()),
            t_max=max(tl.times[-1] for tl in timelines.values()),
        )


def _intersect_sorted(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            out.append(a[i])
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return out


def _name_key(name: Hashable):
    return (type(name).__name__, name)


def _parse_time(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        pass
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"non-numeric timestamp {token!r}", line) from None
    if not math.isfinite(value) or value != int(value):
        raise ParseError(f"timestamp {token!r} is not an integer", line)
    return int(value)


def _parse_weight(token: str, line: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"non-numeric weight {token!r}", line) from None
    if not math.isfinite(value):
        raise ParseError(f"weight {token!r} is not finite", line)
    return value


def parse_lines(lines: Iterable[str], columns: str = "uvt") -> Iterator[tuple[str, str, int, float]]:
    """Yield raw ``(u, v, t, w)`` events from whitespace-separated text lines.

    Lines starting with ``#`` or ``%`` and blank lines are skipped. A missing
    fourth field means weight 1.0.
    """
    try:
        iu, iv, it = COLUMN_ORDERS[columns]
    except KeyError:
        raise ValueError(f"unknown column order {columns!r}; expected one of {sorted(COLUMN_ORDERS)}") from None
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text[0] in "#%":
            continue
        fields = text.split()
        if len(fields) not in (3, 4):
            raise ParseError(f"expected 3 or 4 fields, got {len(fields)}", lineno)
        t = _parse_time(fields[it], lineno)
        w = _parse_weight(fields[3], lineno) if len(fields) == 4 else 1.0
        yield fields[iu], fields[iv], t, w


def ingest(source: Iterable[str], columns: str = "uvt") -> TemporalNetwork:
    """Parse a line-oriented edge list into a relabeled :class:`TemporalNetwork`."""
    return TemporalNetwork.from_instances(parse_lines(source, columns))


def read_network(path, columns: str = "uvt") -> TemporalNetwork:
    with open(path, encoding="utf-8") as fh:
        return ingest(fh, columns)
