"""Both phases end to end."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .bulk import BulkStats, ResultSink, bulk_phase
from .network import TemporalNetwork
from .signed import run_store, short_window_cliques, undominated
from .stretch import StretchStats, StretchStore, stretch_phase


@dataclass
class EnumerationResult:
    sink: ResultSink
    store: StretchStore
    stretch_stats: StretchStats
    bulk_stats: BulkStats
    timings: dict[str, float] = field(default_factory=dict)
    signed: bool = False

    @property
    def cliques(self):
        return self.sink.cliques


def find_maximal_cliques(
    network: TemporalNetwork,
    delta: int,
    gamma: float = 1.0,
    prune: bool = True,
    sink: ResultSink | None = None,
    trace: bool = False,
    check_negative: bool = True,
) -> EnumerationResult:
    """Enumerate all (delta, gamma)-maximal cliques of ``network``.

    Networks with negative weights take the signed route: bulking runs over
    per-edge run records, short intervals are enumerated per window, and the
    merged pool is filtered for dominance before reaching ``sink``.
    """
    sink = sink if sink is not None else ResultSink()
    stretch_stats = StretchStats()
    t0 = time.perf_counter()
    store = stretch_phase(network, delta, gamma, stretch_stats, check_negative)
    t1 = time.perf_counter()
    signed = any(tl.has_negative for tl in network.timelines.values())
    if not signed:
        bulk_stats = bulk_phase(network, store, delta, sink, prune=prune, trace=trace)
        t2 = time.perf_counter()
        return EnumerationResult(sink, store, stretch_stats, bulk_stats, {"stretch": t1 - t0, "bulk": t2 - t1})

    pool = ResultSink()
    bulk_stats = bulk_phase(network, run_store(network, delta, gamma), delta, pool, prune=prune, trace=trace)
    t2 = time.perf_counter()
    candidates = pool.cliques | set(short_window_cliques(network, delta, gamma))
    for clique in sorted(undominated(candidates)):
        sink.add(clique)
    t3 = time.perf_counter()
    timings = {"stretch": t1 - t0, "bulk": t2 - t1, "short_windows": t3 - t2}
    return EnumerationResult(sink, store, stretch_stats, bulk_stats, timings, signed=True)
