import pytest

from dgclique import EdgeTimeline, TemporalNetwork

HEAVY_START = ([1, 5, 7, 9], [2, 1, 1, 1])
BURST = ([1, 2, 3, 5, 7, 9], [1, 1, 2, 1, 1, 1])


def timeline(times, weights=None):
    return EdgeTimeline.from_sorted(times, weights if weights is not None else [1.0] * len(times))


@pytest.fixture
def heavy_start():
    return timeline(*HEAVY_START)


@pytest.fixture
def burst():
    return timeline(*BURST)


def make_triangle():
    # each edge appears twice, staggered so only the full triangle is maximal at delta=4
    events = [("A", "B", 1), ("A", "B", 4), ("A", "C", 2), ("A", "C", 5), ("B", "C", 3), ("B", "C", 6)]
    return TemporalNetwork.from_instances((u, v, t, 1.0) for u, v, t in events)


@pytest.fixture
def triangle():
    return make_triangle()
