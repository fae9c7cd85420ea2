"""Exact enumeration when some instance weights are negative.

With negative weights a window's weight is no longer monotone in its extent, so
the stretch records' inner borders stop describing where windows reach gamma.
Two things still hold for any sign:

* the window starts ``tau`` whose window ``[tau, tau+delta-1]`` reaches gamma form
  runs, and a clique interval of length >= delta is valid iff all of its starts lie
  in one run of every edge. Bulking over per-edge *run records* (outer borders
  set to the run, interval bounded by the first and last instance inside it)
  therefore finds every valid clique that lies inside a run;
* every other valid clique is shorter than delta, where validity is the single
  window ``[tb, te]``. Those are found per short window as maximal cliques of the
  graph of edges whose window weight reaches gamma.

The union of both pools, filtered for dominance, is the exact answer.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import defaultdict
from typing import Iterable, Iterator

import networkx as nx

from .network import EdgeTimeline, Pair, TemporalNetwork
from .oracle import Clique
from .stretch import CliqueRecord, StretchStore


def edge_runs(timeline: EdgeTimeline, delta: int, gamma: float, nodes: Pair = (0, 1)) -> list[CliqueRecord]:
    """One record per maximal run of window starts reaching gamma.

    The record's outer borders are ``[run_start, run_end + delta - 1]`` and its
    interval spans the first to the last instance inside them.
    """
    times = timeline.times
    # a window's weight only changes where an instance enters or leaves it
    starts = sorted({s for t in times for s in (t - delta + 1, t + 1)})
    runs: list[list[int]] = []
    for i, s in enumerate(starts):
        if timeline.window_weight(s, s + delta - 1) < gamma:
            continue
        end = starts[i + 1] - 1 if i + 1 < len(starts) else s
        if runs and runs[-1][1] == s - 1:
            runs[-1][1] = end
        else:
            runs.append([s, end])
    out = []
    for lo, hi in runs:
        te_max = hi + delta - 1
        tb = times[bisect_left(times, lo)]
        te = timeline.latest_at_or_before(te_max)
        out.append(CliqueRecord(tb, te, nodes, lo + delta - 1, hi))
    return out


def run_store(network: TemporalNetwork, delta: int, gamma: float) -> StretchStore:
    store = StretchStore()
    for pair in sorted(network.timelines):
        records = edge_runs(network.timelines[pair], delta, gamma, pair)
        if records:
            store.by_pair[pair] = records
    return store


def short_window_cliques(network: TemporalNetwork, delta: int, gamma: float) -> Iterator[Clique]:
    """Valid cliques shorter than delta that are maximal within their own window."""
    at_time: dict[int, list[Pair]] = defaultdict(list)
    for pair, tl in network.timelines.items():
        for t in tl.times:
            at_time[t].append(pair)
    times = sorted(at_time)
    for i, tb in enumerate(times):
        active: set[Pair] = set()
        for te in times[i:]:
            if te - tb + 1 >= delta:
                break
            active.update(at_time[te])
            graph = nx.Graph()
            graph.add_edges_from(
                p for p in active if network.timelines[p].window_weight(tb, te) >= gamma
            )
            if graph.number_of_edges() == 0:
                continue
            first, last = set(at_time[tb]), set(at_time[te])
            for members in nx.find_cliques(graph):
                if len(members) < 2:
                    continue
                nodes = tuple(sorted(members))
                pairs = {(u, v) for k, u in enumerate(nodes) for v in nodes[k + 1:]}
                if pairs & first and pairs & last:
                    yield Clique(nodes, tb, te)


def undominated(pool: Iterable[Clique]) -> set[Clique]:
    """Members of ``pool`` that no other member dominates (superset or same set, enclosing interval)."""
    pool = set(pool)
    by_node: dict[int, list[Clique]] = defaultdict(list)
    for c in pool:
        for u in c.nodes:
            by_node[u].append(c)
    keep = set()
    for c in pool:
        members = set(c.nodes)
        rivals = min((by_node[u] for u in c.nodes), key=len)
        if not any(
            d != c and d.tb <= c.tb and c.te <= d.te and members <= set(d.nodes)
            for d in rivals
        ):
            keep.add(c)
    return keep
