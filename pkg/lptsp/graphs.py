'''
Distances and the graph transformations built on them.

The distance matrix is computed with one breadth-first search per vertex,
which is ``O(nm)`` in total and the dominant cost of the reduction.
'''
import collections
import logging
import math

import numpy as np

from . import models

logger = logging.getLogger(__name__)


def all_pairs_distances(graph):
    '''Hop distances between every pair of vertices

    >>> g = models.Graph.from_edges(3, [(0, 1), (1, 2)])
    >>> d = all_pairs_distances(g)
    >>> d[0, 2], d[0, 1], d[1, 1]
    (2, 1, 0)
    >>> all_pairs_distances(models.Graph(2, [[], []]))[0, 1]
    2
    '''
    n = graph.n
    unreachable = max(n, 1)
    matrix = np.full((n, n), unreachable, dtype=np.int64)

    for source in range(n):
        row = matrix[source]
        row[source] = 0
        queue = collections.deque([source])
        while queue:
            v = queue.popleft()
            level = row[v] + 1
            for u in graph.adjacency[v]:
                if row[u] == unreachable:
                    row[u] = level
                    queue.append(u)

    return models.DistanceMatrix(matrix)


def diameter(distances):
    '''Largest distance, ``math.inf`` when some pair is unreachable

    Accepts a :py:class:`~lptsp.models.DistanceMatrix` or a graph.

    >>> diameter(models.Graph.from_edges(3, [(0, 1), (1, 2)]))
    2
    >>> diameter(models.Graph(2, [[], []]))
    inf
    >>> diameter(models.Graph(1, [[]]))
    0
    '''
    if isinstance(distances, models.Graph):
        distances = all_pairs_distances(distances)

    if not distances.connected:
        return math.inf
    if distances.n == 0:
        return 0
    return int(distances.matrix.max())


def is_connected(graph):
    return all_pairs_distances(graph).connected if graph.n else True


def complement(graph):
    '''Graph on the same vertices whose edges are the non-edges of ``graph``

    >>> complement(models.Graph.from_edges(3, [(0, 1), (1, 2)])).adjacency
    ((2,), (), (0,))
    '''
    everything = frozenset(range(graph.n))
    return models.Graph(graph.n, [
        everything - graph.neighbours(v) - {v} for v in range(graph.n)
    ])


def graph_power(graph, k, distances=None):
    '''The ``k``-th power: ``u`` and ``v`` adjacent iff ``1 <= dist <= k``

    >>> p3 = models.Graph.from_edges(3, [(0, 1), (1, 2)])
    >>> graph_power(p3, 1) == p3
    True
    >>> graph_power(p3, 2).m
    3
    '''
    if k < 1:
        raise ValueError('k must be at least 1, got %r' % k)
    if distances is None:
        distances = all_pairs_distances(graph)

    matrix = distances.matrix
    within = (matrix >= 1) & (matrix <= k) & (matrix < distances.unreachable)
    power = models.Graph(graph.n, [
        np.flatnonzero(row).tolist() for row in within
    ])
    logger.debug('power %d of %r is %r', k, graph, power)
    return power
