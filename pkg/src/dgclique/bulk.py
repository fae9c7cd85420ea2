"""Recursive node-set growth from stretch records, with branch pruning.

States are duration-wise maximal records. A state only recurses into extensions
whose new node has a higher label than every node it holds, so each node set is
reached from exactly one seed. Neighboring branches (same parent, higher new node)
are cut when the current state provably dominates their whole subtree.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .network import EdgeTimeline, TemporalNetwork
from .oracle import Clique
from .stretch import CliqueRecord, StretchStore

log = logging.getLogger(__name__)


class ResultSink:
    """Collects maximal cliques, optionally forwarding each one to ``stream`` as it is found."""

    def __init__(self, stream: Callable[[Clique], None] | None = None, keep: bool = True):
        self.stream = stream
        self.keep = keep
        self.cliques: set[Clique] = set()
        self.count = 0
        self.max_cardinality = 0
        self.max_duration = 0
        self.duplicates = 0
        self._seen: set[Clique] = set()

    def add(self, record: CliqueRecord) -> bool:
        clique = Clique(record.nodes, record.tb, record.te)
        if clique in self._seen:
            self.duplicates += 1
            return False
        self._seen.add(clique)
        if self.keep:
            self.cliques.add(clique)
        self.count += 1
        self.max_cardinality = max(self.max_cardinality, len(clique.nodes))
        self.max_duration = max(self.max_duration, clique.te - clique.tb)
        if self.stream is not None:
            self.stream(clique)
        return True


@dataclass
class BulkStats:
    seeds: int = 0
    skipped_seeds: int = 0
    visited: int = 0
    pruned_branches: int = 0
    cut_marks: int = 0
    trace: dict[CliqueRecord, list[CliqueRecord]] | None = None


@dataclass
class BulkFrame:
    """Working state of one recursion step.

    Extensions are stored with their new node. ``sources`` pairs each forward
    extension with the neighboring-branch root it was built from, and
    ``neighbors`` holds records of neighboring branches that overlap enough to
    take part in their extensions.
    """

    extensions: list[tuple[int, CliqueRecord]] = field(default_factory=list)
    forward: list[tuple[int, CliqueRecord]] = field(default_factory=list)
    forward_nodes: set[int] = field(default_factory=set)
    sources: list[tuple[CliqueRecord, int, CliqueRecord]] = field(default_factory=list)
    neighbors: dict[CliqueRecord, int] = field(default_factory=dict)

    def add(self, node: int, record: CliqueRecord, top: int, roots: Iterable[CliqueRecord]) -> None:
        self.extensions.append((node, record))
        if node > top:
            self.forward.append((node, record))
            self.forward_nodes.add(node)
            for root in roots:
                self.sources.append((root, node, record))

    def select_neighbors(self, node: int, candidates: Iterable[CliqueRecord], delta: int) -> None:
        if not self.sources:
            return
        hi = max(root.te_min for root, _, _ in self.sources)
        lo = min(root.tb_max for root, _, _ in self.sources)
        for rec in candidates:
            if rec.tb_min(delta) <= hi and rec.te_max(delta) >= lo:
                self.neighbors.setdefault(rec, node)


def is_temporally_dominated(c: CliqueRecord, dom: CliqueRecord) -> bool:
    return dom.tb <= c.tb and c.te <= dom.te


def is_spatial_growth_dominated(
    outside_neighbors: Iterable[int],
    covered: set[int],
    top: int,
    new: CliqueRecord,
    growth: Sequence[CliqueRecord],
    delta: int,
) -> bool:
    """``outside_neighbors`` are the common static neighbors of the branch root."""
    if any(x > top and x not in covered for x in outside_neighbors):
        return False
    lo, hi = min_extension_growth(growth, delta)
    return lo <= new.te_min and new.tb_max <= hi


def min_extension_growth(growth: Sequence[CliqueRecord], delta: int) -> tuple[int, int]:
    """Intersection of the outer borders of the given single-node extensions."""
    return max(r.tb_min(delta) for r in growth), min(r.te_max(delta) for r in growth)


def is_temporal_growth_dominated(
    root: CliqueRecord,
    growth: Sequence[CliqueRecord],
    neighbor_records: Sequence[CliqueRecord],
    connecting: Iterable[CliqueRecord],
    parents: Sequence[CliqueRecord],
    delta: int,
) -> bool:
    lo, hi = min_extension_growth(growth, delta)
    if lo <= root.tb_min(delta) and root.te_max(delta) <= hi:
        return True
    if neighbor_records and (
        min(r.tb for r in neighbor_records) < lo or hi < max(r.te for r in neighbor_records)
    ):
        return False
    first_tb_max = min(p.tb_max for p in parents)
    last_te_min = max(p.te_min for p in parents)
    for rec in connecting:
        if rec.te_max(delta) >= first_tb_max and rec.tb < lo:
            return False
        if rec.tb_min(delta) <= last_te_min and rec.te > hi:
            return False
    return True


def _earliest(lo: int, hi: int, timelines: Iterable[EdgeTimeline]) -> int | None:
    best = None
    for tl in timelines:
        t = tl.earliest_at_or_after(lo)
        if t is not None and t <= hi and (best is None or t < best):
            best = t
            if best == lo:
                break
    return best


def _latest(lo: int, hi: int, timelines: Iterable[EdgeTimeline]) -> int | None:
    best = None
    for tl in timelines:
        t = tl.latest_at_or_before(hi)
        if t is not None and t >= lo and (best is None or t > best):
            best = t
            if best == hi:
                break
    return best


def select_borders(
    tb_min: int, te_max: int, parts: Sequence[tuple[CliqueRecord, Callable[[], Iterable[EdgeTimeline]]]]
) -> tuple[int, int] | None:
    """First and last instance inside the shrunk outer borders.

    Each part is a constituent record and a callable giving the edges to search
    when that record's own border falls outside the outer borders. A constituent
    border already inside is its edges' first/last occurrence there, as the
    constituent is duration-wise maximal.
    """
    tb = te = None
    for rec, edges in parts:
        if tb == tb_min:
            break
        t = rec.tb if rec.tb >= tb_min else _earliest(tb_min, te_max, edges())
        if t is not None and (tb is None or t < tb):
            tb = t
    for rec, edges in parts:
        if te == te_max:
            break
        t = rec.te if rec.te <= te_max else _latest(tb_min, te_max, edges())
        if t is not None and (te is None or t > te):
            te = t
    if tb is None or te is None or te < tb:
        return None
    return tb, te


def outer_overlap(
    network: TemporalNetwork, store: StretchStore, c: CliqueRecord, u: int, v: int, n: int, delta: int
) -> list[tuple[tuple[CliqueRecord, CliqueRecord], CliqueRecord]]:
    """Triangles ``{u, v, n}`` combining ``c`` with records over ``(u, n)`` and ``(v, n)``."""
    out = []
    d1 = delta - 1
    c_lo, c_hi = c.tb_min(delta), c.te_max(delta)
    nodes = tuple(sorted((u, v, n)))
    tl_uv, tl_un, tl_vn = network.timeline(u, v), network.timeline(u, n), network.timeline(v, n)
    for cu in store.get(u, n):
        if not (cu.tb_min(delta) <= c.te_min and cu.te_max(delta) >= c.tb_max):
            continue
        lo_u = max(c_lo, cu.tb_min(delta))
        hi_u = min(c_hi, cu.te_max(delta))
        for cv in store.get(v, n):
            if not (cv.tb_min(delta) <= hi_u - d1 and cv.te_max(delta) >= lo_u + d1):
                continue
            lo = max(lo_u, cv.tb_min(delta))
            hi = min(hi_u, cv.te_max(delta))
            borders = select_borders(
                lo, hi, [(c, lambda: (tl_uv,)), (cu, lambda: (tl_un,)), (cv, lambda: (tl_vn,))]
            )
            if borders is None:
                continue
            out.append(((cu, cv), CliqueRecord(borders[0], borders[1], nodes, lo + d1, hi - d1)))
    return out


def inner_overlap(
    network: TemporalNetwork, store: StretchStore, c: CliqueRecord, a: int, cp: CliqueRecord, b: int, delta: int
) -> list[CliqueRecord]:
    """Extend ``c`` (newest node ``a``) by the new node ``b`` of its sibling ``cp``.

    The only edge of the union not covered by ``c`` or ``cp`` is ``(a, b)``.
    """
    d1 = delta - 1
    # cp must reach c's inner borders on both sides
    if not (cp.tb_min(delta) <= c.te_min and cp.te_max(delta) >= c.tb_max):
        return []
    lo_p = max(c.tb_min(delta), cp.tb_min(delta))
    hi_p = min(c.te_max(delta), cp.te_max(delta))
    nodes = tuple(sorted(c.nodes + (b,)))
    rest = [x for x in c.nodes if x != a]
    tl_ab = network.timeline(a, b)

    def c_edges():
        return (network.timeline(x, y) for x, y in combinations(c.nodes, 2))

    def cp_edges():
        return (network.timeline(b, x) for x in rest)

    out = []
    for ce in store.get(a, b):
        if not (ce.tb_min(delta) <= hi_p - d1 and ce.te_max(delta) >= lo_p + d1):
            continue
        lo = max(lo_p, ce.tb_min(delta))
        hi = min(hi_p, ce.te_max(delta))
        borders = select_borders(lo, hi, [(c, c_edges), (cp, cp_edges), (ce, lambda: (tl_ab,))])
        if borders is None:
            continue
        out.append(CliqueRecord(borders[0], borders[1], nodes, lo + d1, hi - d1))
    return out


class _Bulker:
    def __init__(self, network, store, delta, sink, prune, trace):
        self.network = network
        self.store = store
        self.delta = delta
        self.sink = sink
        self.prune = prune
        self.stats = BulkStats(trace={} if trace else None)
        self._seed: CliqueRecord | None = None
        self.common_neighbors = lru_cache(maxsize=None)(lambda nodes: network.shared_neighbors(nodes))

    def run(self, seeds: Iterable[CliqueRecord]) -> BulkStats:
        cut: set[CliqueRecord] = set()
        for c in seeds:
            self.stats.seeds += 1
            if self.prune and c in cut:
                self.stats.skipped_seeds += 1
                self.stats.pruned_branches += 1
                continue
            self._seed = c
            if self.stats.trace is not None:
                self.stats.trace[c] = []
            cut |= self.outer(c)
        return self.stats

    def _visit(self, c: CliqueRecord) -> None:
        self.stats.visited += 1
        if self.stats.trace is not None:
            self.stats.trace[self._seed].append(c)

    def outer(self, c: CliqueRecord) -> set[CliqueRecord]:
        self._visit(c)
        u, v = c.nodes
        frame = BulkFrame()
        for n in self.common_neighbors(c.nodes):
            for (cu, cv), new in outer_overlap(self.network, self.store, c, u, v, n, self.delta):
                frame.add(n, new, v, (cu, cv))
            if self.prune:
                frame.select_neighbors(n, self.store.get(u, n) + self.store.get(v, n), self.delta)
        return self._finish(c, v, frame)

    def inner(self, c: CliqueRecord, a: int, siblings: list[tuple[int, CliqueRecord]]) -> set[CliqueRecord]:
        self._visit(c)
        frame = BulkFrame()
        for b, cp in siblings:
            if b == a:
                continue
            for new in inner_overlap(self.network, self.store, c, a, cp, b, self.delta):
                frame.add(b, new, a, (cp,))
            if self.prune:
                frame.select_neighbors(b, (rec for x, rec in siblings if x == b), self.delta)
        return self._finish(c, a, frame)

    def _finish(self, c: CliqueRecord, top: int, frame: BulkFrame) -> set[CliqueRecord]:
        cut = self._cut_set(frame) if self.prune else set()
        self.stats.cut_marks += len(cut)

        frame.extensions.sort(key=lambda item: item[0])
        maximal = True
        local_cut: set[CliqueRecord] = set()
        for node, new in frame.extensions:
            if is_temporally_dominated(c, new):
                maximal = False
            if node > top:
                if new in local_cut:
                    self.stats.pruned_branches += 1
                else:
                    local_cut |= self.inner(new, node, frame.extensions)
        if maximal:
            self.sink.add(c)
        return cut

    def _cut_set(self, frame: BulkFrame) -> set[CliqueRecord]:
        delta = self.delta
        cut = set()
        for root, node, new in frame.sources:
            if root in cut or not is_temporally_dominated(root, new):
                continue
            growth = [rec for x, rec in frame.forward if x >= node]
            if not is_spatial_growth_dominated(
                self.common_neighbors(root.nodes), frame.forward_nodes, node, new, growth, delta
            ):
                continue
            remaining = sorted(x for x in frame.forward_nodes if x >= node)
            neighbor_records = [rec for rec, x in frame.neighbors.items() if x >= node]
            parents = [src for src, x, _ in frame.sources if x <= node]
            connecting = (rec for p, q in combinations(remaining, 2) for rec in self.store.get(p, q))
            if is_temporal_growth_dominated(root, growth, neighbor_records, connecting, parents, delta):
                cut.add(root)
        return cut


def bulk_phase(
    network: TemporalNetwork,
    store: StretchStore,
    delta: int,
    sink: ResultSink,
    prune: bool = True,
    trace: bool = False,
) -> BulkStats:
    """Grow every stretch record into the full set of (delta, gamma)-maximal cliques.

    Seeds run in increasing order of their larger node; seeds cut by an earlier
    seed's search are skipped when ``prune`` is set.
    """
    bulker = _Bulker(network, store, delta, sink, prune, trace)
    return bulker.run(iter(store))
