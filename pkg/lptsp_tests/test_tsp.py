import numpy as np
import pytest

from lptsp import exceptions
from lptsp import models
from lptsp import tsp

from . import helpers


def _random_instances(seed, count, low_n, high_n):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield helpers.random_metric_instance(
            rng, int(rng.integers(low_n, high_n + 1)))


def _band_instances(seed, count, low_n, high_n):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield helpers.band_metric_instance(
            rng, int(rng.integers(low_n, high_n + 1)),
            int(rng.integers(1, 6)))


def _check_held_karp(instances):
    for instance in instances:
        path = tsp.held_karp_path(instance)
        assert path.length == helpers.brute_force_path_length(instance)
        assert path.length == models.path_length(instance, path.order)
        assert sorted(path.order) == list(range(instance.n))


def test_held_karp_matches_brute_force():
    _check_held_karp(_random_instances(1, 40, 1, 7))
    _check_held_karp(_band_instances(11, 40, 1, 7))


@pytest.mark.slow
def test_held_karp_matches_brute_force_full():
    _check_held_karp(_random_instances(2, 200, 1, 9))


def test_held_karp_non_metric():
    instance = models.MetricInstance([[0, 3, 1], [3, 0, 1], [1, 1, 0]])
    path = tsp.held_karp_path(instance)
    assert path.length == 2
    assert path.order == (0, 2, 1)


def test_held_karp_lexicographic_tie_break():
    weights = np.full((5, 5), 3) - 3 * np.eye(5, dtype=int)
    path = tsp.held_karp_path(models.MetricInstance(weights))
    assert path.order == (0, 1, 2, 3, 4)
    assert path.length == 12

    p3 = models.MetricInstance([[0, 2, 1], [2, 0, 2], [1, 2, 0]])
    assert tsp.held_karp_path(p3).order == (0, 2, 1)


def test_held_karp_large_weights_use_int64():
    weights = np.full((4, 4), 2 ** 30) - 2 ** 30 * np.eye(4, dtype=np.int64)
    path = tsp.held_karp_path(models.MetricInstance(weights))
    assert path.length == 3 * 2 ** 30


def test_held_karp_caps():
    instance = models.MetricInstance(np.zeros((5, 5), dtype=int))
    with pytest.raises(exceptions.InstanceTooLarge) as excinfo:
        tsp.held_karp_path(instance, max_n=4)
    assert excinfo.value.n == 5
    assert excinfo.value.cap == 4

    with pytest.raises(ValueError):
        tsp.held_karp_path(models.MetricInstance(np.zeros((0, 0))))


def _check_christofides(instances, dp_max=None):
    for instance in instances:
        optimum = tsp.held_karp_path(instance).length
        path = tsp.christofides_path(instance, dp_max=dp_max)
        assert sorted(path.order) == list(range(instance.n))
        assert path.length == models.path_length(instance, path.order)
        assert 2 * path.length <= 3 * optimum


def test_christofides_ratio():
    _check_christofides(_random_instances(3, 150, 1, 10))
    _check_christofides(_band_instances(13, 150, 1, 10))


def test_christofides_ratio_blossom():
    _check_christofides(_random_instances(4, 60, 1, 10), dp_max=0)


@pytest.mark.slow
def test_christofides_ratio_full():
    _check_christofides(_random_instances(5, 1000, 1, 14))
    _check_christofides(_band_instances(15, 1000, 1, 14))


def test_christofides_rejects_non_metric():
    instance = models.MetricInstance([[0, 3, 1], [3, 0, 1], [1, 1, 0]])
    with pytest.raises(exceptions.NonMetricInstance) as excinfo:
        tsp.christofides_path(instance)
    assert excinfo.value.triple == (0, 2, 1)


def test_christofides_two_vertices():
    instance = models.MetricInstance([[0, 5], [5, 0]])
    assert tsp.christofides_path(instance).length == 5


def test_matching_subsets_and_blossom_agree():
    rng = np.random.default_rng(6)
    for m in (2, 4, 6, 8, 10):
        for _ in range(10):
            weights = rng.integers(1, 30, size=(m, m))
            weights = np.triu(weights, 1)
            weights = weights + weights.T

            pairs, total = tsp.min_weight_matching_leave_two(weights)
            _, blossom_total = tsp.min_weight_matching_leave_two(
                weights, dp_max=0)
            assert total == blossom_total
            assert len(pairs) == m // 2 - 1
            assert total == sum(weights[i, j] for i, j in pairs)

            matched = [v for pair in pairs for v in pair]
            assert len(set(matched)) == len(matched)


def test_matching_needs_even_size():
    with pytest.raises(ValueError):
        tsp.min_weight_matching_leave_two([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    with pytest.raises(ValueError):
        tsp.min_weight_matching_leave_two([[0]])


def test_nearest_neighbor_tie_break():
    weights = [[0, 2, 1, 1], [2, 0, 2, 2], [1, 2, 0, 1], [1, 2, 1, 0]]
    path = tsp.nearest_neighbor_path(models.MetricInstance(weights), 0)
    assert path.order == (0, 2, 3, 1)
    assert path.length == 4

    with pytest.raises(ValueError):
        tsp.nearest_neighbor_path(models.MetricInstance(weights), 4)


def test_two_opt_never_worse():
    rng = np.random.default_rng(7)
    for instance in _random_instances(8, 60, 2, 10):
        start = models.HamiltonianPath.from_order(
            instance, rng.permutation(instance.n))
        improved = tsp.two_opt_improve(instance, start)
        assert improved.length <= start.length
        assert sorted(improved.order) == list(range(instance.n))

        # a local optimum stays put
        again = tsp.two_opt_improve(instance, improved)
        assert again.order == improved.order


def test_two_opt_budget():
    instance = models.MetricInstance([[0, 2, 1], [2, 0, 2], [1, 2, 0]])
    start = models.HamiltonianPath.from_order(instance, [0, 1, 2])
    assert tsp.two_opt_improve(instance, start, budget=0) == start
    assert tsp.two_opt_improve(instance, start, budget=1).length == 3


def test_local_search_sorts_a_line():
    points = [5, 0, 1, 9, 10]
    weights = [[abs(a - b) for b in points] for a in points]
    instance = models.MetricInstance(weights)
    start = models.HamiltonianPath.from_order(instance, [0, 1, 2, 3, 4])
    improved = tsp.two_opt_improve(instance, start)
    assert improved.length == 10


def test_heuristic_path():
    for instance in _random_instances(9, 30, 1, 8):
        path = tsp.heuristic_path(instance)
        assert path.length >= tsp.held_karp_path(instance).length
        assert sorted(path.order) == list(range(instance.n))
