"""Acceptance suite: one test and one printed PASS/FAIL line per criterion.

Criterion 8 needs the Hypertext and College message edge lists. Point
``DGCLIQUE_DATA`` at a directory holding them; without it the criterion skips.
"""

import os
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path

import pytest

from dgclique import (
    Clique,
    CliqueRecord,
    GeneratorParams,
    TemporalNetwork,
    find_maximal_cliques,
    generate_random,
    is_dominated,
    oracle_enumerate,
    read_network,
    stretch_edge,
    validate_record,
)
from dgclique.stretch import brute_stretch_edge, two_pointer_stretch

from conftest import HEAVY_START, BURST, make_triangle, timeline

TRIALS = 500
TIMELINES = 1000


@pytest.fixture
def report(capsys):
    def emit(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\ncriterion {number} {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail

    return emit


def as_rows(records):
    return {(r.tb, r.tb_max, r.te_min, r.te) for r in records}


def single_edge_network(tl) -> TemporalNetwork:
    return TemporalNetwork.from_instances((0, 1, t, w) for t, w in zip(tl.times, tl.weights))


@dataclass
class Trial:
    network: TemporalNetwork
    delta: int
    gamma: int
    signed: bool
    expected: set
    pruned: object = None
    full: object = None


@dataclass
class TrialRun:
    trials: list[Trial] = field(default_factory=list)
    pipeline_seconds: float = 0.0
    oracle_seconds: float = 0.0


@pytest.fixture(scope="module")
def timeline_trials():
    rng = random.Random(20240611)
    out = []
    for i in range(TIMELINES):
        length = rng.randint(1, 30)
        times = sorted(rng.sample(range(0, 80), length))
        signed = i % 2 == 1
        weights = [rng.randint(-3, 3) if signed else 1 for _ in times]
        out.append((timeline(times, weights), rng.randint(1, 10), rng.randint(1, 6)))
    return out


@pytest.fixture(scope="module")
def network_trials():
    rng = random.Random(7)
    run = TrialRun()
    for i in range(TRIALS):
        signed = i % 2 == 1
        # half the signed trials lean positive so larger cliques survive
        weights = ((-3, 3) if i % 4 == 1 else (-1, 3)) if signed else None
        params = GeneratorParams(
            nodes=rng.randint(3, 7),
            instances=rng.randint(1, 50),
            t_max=rng.choice([10, 20, 40]),
            weight_range=weights,
            seed=i,
        )
        network = generate_random(params)
        delta, gamma = rng.randint(1, 8), rng.randint(1, 4)
        t0 = time.perf_counter()
        expected = oracle_enumerate(network, delta, gamma)
        t1 = time.perf_counter()
        pruned = find_maximal_cliques(network, delta, gamma, prune=True)
        full = find_maximal_cliques(network, delta, gamma, prune=False)
        t2 = time.perf_counter()
        run.oracle_seconds += t1 - t0
        run.pipeline_seconds += t2 - t1
        run.trials.append(Trial(network, delta, gamma, signed, expected, pruned, full))
    return run


def test_criterion_1_heavy_start_golden(report):
    tl = timeline(*HEAVY_START)
    got = as_rows(stretch_edge(tl, 5, 3))
    want = {(1, 5, 5, 5), (5, 9, 5, 9)}
    elapsed = min(_timed(lambda: stretch_edge(tl, 5, 3)) for _ in range(50))
    ok = got == want and elapsed < 1e-3
    report(1, ok, f"records {sorted(got)} vs required {sorted(want)}, {elapsed * 1e6:.0f} us")


def test_criterion_2_burst_golden(report):
    got = as_rows(stretch_edge(timeline(*BURST), 5, 4))
    want = {(1, 3, 3, 7)}
    report(2, got == want, f"records {sorted(got)} vs required {sorted(want)}")


def test_criterion_3_stretch_oracle(report, timeline_trials):
    t0 = time.perf_counter()
    mismatches = sum(
        stretch_edge(tl, delta, gamma) != brute_stretch_edge(tl, delta, gamma) for tl, delta, gamma in timeline_trials
    )
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 10
    report(3, ok, f"{mismatches} mismatches in {len(timeline_trials)} timelines, {elapsed:.2f} s")


def test_criterion_4_end_to_end_oracle(report, network_trials):
    bad = [t for t in network_trials.trials if t.pruned.cliques != t.expected]
    signed = sum(t.signed for t in network_trials.trials)
    elapsed = network_trials.pipeline_seconds + network_trials.oracle_seconds
    ok = not bad and elapsed < 120
    report(
        4,
        ok,
        f"{len(bad)} mismatches in {len(network_trials.trials)} networks ({signed} mixed-sign), "
        f"{elapsed:.1f} s including oracle",
    )


def test_criterion_5_pruning_invariance(report, network_trials):
    runs = [(t.pruned, t.full) for t in network_trials.trials]
    tri = make_triangle()
    runs.append((find_maximal_cliques(tri, 4, 1.0, prune=True), find_maximal_cliques(tri, 4, 1.0, prune=False)))
    differ = sum(p.cliques != f.cliques for p, f in runs)
    more = sum(p.bulk_stats.visited > f.bulk_stats.visited for p, f in runs)
    pruned = sum(p.bulk_stats.pruned_branches for p, _ in runs)
    ok = differ == 0 and more == 0
    report(5, ok, f"{differ} output differences, {more} trials visiting more when pruned, {pruned} branches pruned")


def test_criterion_6_work_bound(report, timeline_trials, network_trials):
    timelines = [timeline(*HEAVY_START), timeline(*BURST)]
    params = [(5, 3), (5, 4)]
    for tl, delta, gamma in timeline_trials:
        timelines.append(tl)
        params.append((delta, gamma))
    for t in network_trials.trials:
        for tl in t.network.timelines.values():
            timelines.append(tl)
            params.append((t.delta, t.gamma))
    checked = exempt = violations = 0
    worst = 0.0
    for tl, (delta, gamma) in zip(timelines, params):
        records, advances = two_pointer_stretch(tl, delta, gamma)
        if tl.has_negative and records != brute_stretch_edge(tl, delta, gamma):
            exempt += 1
            continue
        checked += 1
        worst = max(worst, advances / len(tl))
        violations += advances > 2 * len(tl)
    report(6, violations == 0, f"{violations} violations over {checked} timelines ({exempt} fallback-exempt), worst ratio {worst:.2f}")


def test_criterion_7_self_consistency(report, timeline_trials, network_trials):
    outputs = []
    for tl, delta, gamma in [(timeline(*HEAVY_START), 5, 3), (timeline(*BURST), 5, 4), *timeline_trials]:
        records = stretch_edge(tl, delta, gamma)
        outputs.append((single_edge_network(tl), delta, gamma, {Clique(r.nodes, r.tb, r.te) for r in records}))
    for t in network_trials.trials:
        outputs.append((t.network, t.delta, t.gamma, t.pruned.cliques))
        outputs.append((t.network, t.delta, t.gamma, t.full.cliques))
    dominated = invalid = total = 0
    for network, delta, gamma, cliques in outputs:
        total += len(cliques)
        for c in cliques:
            if not validate_record(network, delta, gamma, CliqueRecord(c.tb, c.te, c.nodes, c.tb, c.te)):
                invalid += 1
        for a, b in combinations(cliques, 2):
            dominated += is_dominated(a, b) or is_dominated(b, a)
    ok = dominated == 0 and invalid == 0
    report(7, ok, f"{dominated} dominated pairs and {invalid} invalid cliques among {total} emitted")


DATASETS = [
    ("hypertext", ["ht09_contact_list.dat", "hypertext.txt"], "tuv", 60, (7001, 7, 7521)),
    ("college message", ["CollegeMsg.txt", "collegemsg.txt"], "uvt", 3600, (33350, 4, 14562)),
]


@pytest.mark.parametrize("name, files, columns, delta, want", DATASETS, ids=["hypertext", "collegemsg"])
def test_criterion_8_datasets(report, capsys, name, files, columns, delta, want):
    root = os.environ.get("DGCLIQUE_DATA")
    path = next((Path(root) / f for f in files if root and (Path(root) / f).exists()), None)
    if path is None:
        with capsys.disabled():
            print(f"\ncriterion 8 SKIP: {name} data not found (set DGCLIQUE_DATA to a directory with {files[0]})")
        pytest.skip(f"{name} dataset not available")
    network = read_network(path, columns)
    t0 = time.perf_counter()
    result = find_maximal_cliques(network, delta, 1.0)
    elapsed = time.perf_counter() - t0
    got = (result.sink.count, result.sink.max_cardinality, result.sink.max_duration)
    ok = got == want and elapsed < 60
    report(8, ok, f"{name}: N, C, D = {got} vs {want}, {elapsed:.1f} s")


def _timed(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0
