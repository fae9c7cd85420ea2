import pytest

from dgclique import Clique, OracleCapError, OracleConfig, TemporalNetwork, is_dominated, oracle_enumerate
from dgclique.generate import GeneratorParams, generate_random


def test_heavy_start_pair(heavy_start):
    net = TemporalNetwork.from_instances((0, 1, t, w) for t, w in zip(heavy_start.times, heavy_start.weights))
    assert oracle_enumerate(net, 5, 3) == {Clique((0, 1), 1, 5), Clique((0, 1), 5, 9)}


def test_triangle(triangle):
    assert oracle_enumerate(triangle, 4, 1.0) == {Clique((0, 1, 2), 1, 6)}


def test_triangle_breaks_apart_with_short_delta(triangle):
    # with delta 1 each instance stands alone
    got = oracle_enumerate(triangle, 1, 1.0)
    assert got == {Clique(nodes, t, t) for nodes, ts in [((0, 1), (1, 4)), ((0, 2), (2, 5)), ((1, 2), (3, 6))] for t in ts}


def test_caps():
    net = generate_random(GeneratorParams(nodes=12, instances=100, seed=1))
    with pytest.raises(OracleCapError):
        oracle_enumerate(net, 3, 1.0)
    with pytest.raises(OracleCapError):
        oracle_enumerate(net, 3, 1.0, OracleConfig(max_nodes=20, max_instances=10))


def test_is_dominated():
    c = Clique((0, 1), 2, 5)
    assert is_dominated(c, Clique((0, 1, 2), 1, 5))
    assert is_dominated(c, Clique((0, 1), 2, 6))
    assert not is_dominated(c, Clique((0, 1), 2, 5))
    assert not is_dominated(c, Clique((0, 1, 2), 3, 5))
    assert not is_dominated(c, Clique((0, 2), 0, 9))
    assert not is_dominated(Clique((0, 1, 2), 2, 5), Clique((0, 1), 0, 9))


def test_generator_is_seeded_and_validated():
    a = generate_random(GeneratorParams(seed=3))
    b = generate_random(GeneratorParams(seed=3))
    assert list(a.instances()) == list(b.instances())
    with pytest.raises(ValueError):
        generate_random(GeneratorParams(nodes=1))
    with pytest.raises(ValueError):
        generate_random(GeneratorParams(weight_range=(2, 1)))
