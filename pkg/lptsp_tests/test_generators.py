import pytest

from lptsp import exceptions
from lptsp import generators
from lptsp import graphs


@pytest.mark.parametrize('model,n,m,diameter', [
    ('star', 5, 4, 2),
    ('path', 5, 4, 4),
    ('cycle', 5, 5, 2),
    ('cycle', 6, 6, 3),
    ('complete', 5, 10, 1),
    ('star', 1, 0, 0),
    ('path', 1, 0, 0),
])
def test_deterministic_models(model, n, m, diameter):
    graph = generators.generate(model, n)
    assert graph.n == n
    assert graph.m == m
    assert graphs.diameter(graph) == diameter


@pytest.mark.parametrize('model', generators.MODEL_NAMES)
def test_models_are_connected(model):
    for seed in range(10):
        graph = generators.generate(model, 7, seed=seed)
        assert graph.n == 7
        assert graphs.is_connected(graph)


@pytest.mark.parametrize('model', ['random', 'split', 'apex'])
def test_seeds_are_reproducible(model):
    first = generators.generate(model, 8, seed=42)
    assert generators.generate(model, 8, seed=42) == first
    assert any(generators.generate(model, 8, seed=seed) != first
               for seed in range(43, 53))


def test_random_max_diameter():
    for seed in range(20):
        graph = generators.random_connected(
            8, 0.4, max_diameter=2, seed=seed)
        assert graphs.diameter(graph) <= 2


def test_random_generation_failed():
    with pytest.raises(exceptions.GenerationFailed):
        generators.random_connected(6, 0.0, max_tries=5)

    with pytest.raises(exceptions.GenerationFailed) as excinfo:
        generators.random_connected(3, 1.0, max_diameter=0, max_tries=5)
    assert 'diameter <= 0' in str(excinfo.value)


def test_random_single_vertex():
    graph = generators.random_connected(1, 0.0)
    assert graph.n == 1
    assert graph.m == 0


def test_split():
    for seed in range(20):
        graph = generators.split(9, clique_size=4, edge_prob=0.3, seed=seed)
        assert graphs.diameter(graph) <= 3
        for u in range(4):
            for v in range(u + 1, 4):
                assert graph.has_edge(u, v)
        for u in range(4, 9):
            assert all(v < 4 for v in graph.neighbours(u))
            assert graph.degree(u) >= 1


def test_split_default_clique():
    graph = generators.split(5, seed=1)
    assert all(graph.has_edge(u, v) for u in range(3) for v in range(u + 1, 3))


def test_apex():
    for seed in range(20):
        graph = generators.apex(7, edge_prob=0.6, seed=seed)
        assert graphs.diameter(graph) <= 2
        assert graph.degree(6) == 6


@pytest.mark.parametrize('call', [
    lambda: generators.cycle(2),
    lambda: generators.split(4, clique_size=5),
    lambda: generators.split(4, clique_size=0),
    lambda: generators.apex(1),
    lambda: generators.random_connected(0),
    lambda: generators.generate('hypercube', 4),
])
def test_invalid_arguments(call):
    with pytest.raises(exceptions.InvalidModelArguments):
        call()
