'''Graph sources and brute force references shared by the tests'''
import itertools

import networkx
import numpy as np

from lptsp import generators
from lptsp import graphs
from lptsp import models
from lptsp import reduction

#: Separation vectors with p_max <= 2 * p_min
RATIO_OK_VECTORS = [
    (2, 1),
    (1, 1),
    (2, 2),
    (3, 2),
    (1, 2),
    (2, 2, 1),
]


def from_networkx(nx_graph):
    nodes = sorted(nx_graph.nodes())
    index = dict((v, i) for i, v in enumerate(nodes))
    return models.Graph.from_edges(
        len(nodes), [(index[u], index[v]) for u, v in nx_graph.edges()])


def atlas_graphs(max_n, min_n=1, connected=None):
    '''Every graph up to isomorphism on ``min_n..max_n <= 7`` vertices'''
    for nx_graph in networkx.graph_atlas_g():
        n = nx_graph.number_of_nodes()
        if not min_n <= n <= max_n:
            continue
        if connected is not None and \
                networkx.is_connected(nx_graph) != connected:
            continue
        yield from_networkx(nx_graph)


def random_graphs(seed, n, count, max_diameter=None, edge_prob=0.5):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield generators.random_connected(
            n, edge_prob, max_diameter=max_diameter, seed=rng)


def applicable_vectors(graph, vectors=RATIO_OK_VECTORS):
    '''Vectors whose ``k`` covers the graph's diameter'''
    diameter = graphs.diameter(graph)
    for p in vectors:
        if diameter <= len(p):
            yield models.PVector(p)


def truncated(p, graph):
    '''``p`` cut down to the graph's diameter, at least one entry'''
    diameter = graphs.diameter(graph)
    if diameter == float('inf'):
        return models.PVector(p)
    return models.PVector(p[:max(1, min(len(p), diameter))])


def random_metric_instance(rng, n, low=1, high=20):
    '''Shortest path closure of random integer weights'''
    weights = rng.integers(low, high + 1, size=(n, n))
    weights = np.triu(weights, 1)
    weights = weights + weights.T
    for x in range(n):
        detour = weights[:, x, None] + weights[None, x, :]
        weights = np.minimum(weights, detour)
    return models.MetricInstance(weights)


def band_metric_instance(rng, n, p_min):
    '''Random weights in ``[p_min, 2 * p_min]``, metric by construction'''
    weights = rng.integers(p_min, 2 * p_min + 1, size=(n, n))
    weights = np.triu(weights, 1)
    return models.MetricInstance(weights + weights.T)


def brute_force_path_length(instance):
    weights = instance.w.tolist()
    n = instance.n
    if n < 2:
        return 0

    best = None
    for order in itertools.permutations(range(n)):
        if order[0] > order[-1]:
            continue
        length = sum(weights[u][v] for u, v in zip(order, order[1:]))
        if best is None or length < best:
            best = length
    return best


def brute_force_cycle(weights):
    '''Shortest Hamiltonian cycle and its city order, city 0 fixed first'''
    n = len(weights)
    best = None
    for rest in itertools.permutations(range(1, n)):
        order = (0, ) + rest
        length = sum(weights[order[i]][order[(i + 1) % n]] for i in range(n))
        if best is None or length < best[0]:
            best = length, order
    return best


def brute_force_path_cover(graph):
    if graph.n == 1:
        return 1

    best = graph.n
    for order in itertools.permutations(range(graph.n)):
        breaks = sum(1 for u, v in zip(order, order[1:])
                     if not graph.has_edge(u, v))
        best = min(best, breaks + 1)
    return best


def brute_force_chromatic_number(graph):
    edges = list(graph.edges())
    for colors in range(1, graph.n + 1):
        for coloring in itertools.product(range(colors), repeat=graph.n):
            if all(coloring[u] != coloring[v] for u, v in edges):
                return colors
    return 0


def valid_labelings(graph, pvector, max_label):
    '''Every valid label tuple over ``0..max_label``, lexicographically'''
    distances = graphs.all_pairs_distances(graph)
    separation = reduction.separation_matrix(distances, pvector).tolist()
    pairs = [(u, v, separation[u][v]) for u in range(graph.n)
             for v in range(u + 1, graph.n)]
    for labels in itertools.product(range(max_label + 1), repeat=graph.n):
        if all(abs(labels[u] - labels[v]) >= required
               for u, v, required in pairs):
            yield labels
