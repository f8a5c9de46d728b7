'''
The diameter two route for L(p, q)-labeling through path covers.

In a graph of diameter at most two every pair of vertices is either adjacent
(gap ``p``) or at distance two (gap ``q``). When ``p <= q`` a shortest
Hamiltonian path in the reduced instance uses as many ``p`` edges as possible,
which is ``n - s`` for a minimum path cover of ``s`` paths, so

    span = (n - 1) * p + (q - p) * (s(G) - 1)

When ``p > q`` the roles swap and the cheap edges are the non-edges of the
graph, so the cover is taken in the complement instead.

>>> c4 = models.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
>>> min_path_cover(c4).s
1
>>> span_via_path_cover(c4, 1, 2)
3
'''
import logging

import numpy as np

from . import exceptions
from . import graphs
from . import models
from . import reduction
from . import tsp

logger = logging.getLogger(__name__)


def min_path_cover(graph, max_n=None):
    '''Fewest vertex disjoint paths, along edges of ``graph``, covering it

    A shortest Hamiltonian path in the complete instance with weight 0 on
    the edges and 1 on the non-edges of ``graph`` crosses ``s - 1`` non-edges.
    Splitting its order at those crossings gives the paths.

    Args:
        graph (Graph): The graph, ``n >= 1``
        max_n (int): Override for :py:data:`lptsp.tsp.HELD_KARP_MAX_N`

    >>> star = models.Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    >>> min_path_cover(star)
    <PathCover s=2 ((1, 0, 2), (3,))>
    >>> min_path_cover(models.Graph(3, [[], [], []])).s
    3
    '''
    weights = np.ones((graph.n, graph.n), dtype=np.int64)
    np.fill_diagonal(weights, 0)
    for u, v in graph.edges():
        weights[u, v] = weights[v, u] = 0

    instance = models.MetricInstance(weights)
    path = tsp.held_karp_path(instance, max_n=max_n)

    paths = [[path.order[0]]]
    for u, v in zip(path.order, path.order[1:]):
        if instance.weight(u, v):
            paths.append([v])
        else:
            paths[-1].append(v)

    cover = models.PathCover(paths)
    assert cover.s == path.length + 1
    logger.debug('path cover of %r: %r', graph, cover)
    return cover


def _cover_graph(graph, p, q):
    '''Check the route's preconditions, return the graph to cover'''
    pvector = models.PVector([p, q])

    distances = graphs.all_pairs_distances(graph)
    if not distances.connected:
        raise exceptions.Disconnected()
    diameter = graphs.diameter(distances)
    if diameter > 2:
        raise exceptions.DiameterExceedsK(diameter, 2)
    if not pvector.ratio_ok:
        raise exceptions.RatioViolated(pvector.p_max, pvector.p_min)

    if p <= q:
        return pvector, graph
    return pvector, graphs.complement(graph)


def span_via_path_cover(graph, p, q, max_n=None):
    '''Minimum L(p, q) span of a diameter two graph from a path cover

    Raises:
        Disconnected: ``graph`` is not connected
        DiameterExceedsK: ``graph`` has diameter above 2
        RatioViolated: ``max(p, q) > 2 * min(p, q)``
        InvalidPVector: ``p`` or ``q`` is below 1

    >>> k3 = models.Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    >>> span_via_path_cover(k3, 2, 1)
    4
    >>> star = models.Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    >>> span_via_path_cover(star, 2, 1)
    4
    '''
    _, cover_graph = _cover_graph(graph, p, q)
    s = min_path_cover(cover_graph, max_n).s
    low, high = sorted((p, q))
    return (graph.n - 1) * low + (high - low) * (s - 1)


def labeling_via_path_cover(graph, p, q, max_n=None):
    '''Optimal L(p, q)-labeling of a diameter two graph

    The cover paths are concatenated into one vertex order which is then
    labeled greedily. Consecutive vertices of a cover path get the smaller
    of the two gaps, so the span matches :py:func:`span_via_path_cover`.

    >>> p3 = models.Graph.from_edges(3, [(0, 1), (1, 2)])
    >>> labeling = labeling_via_path_cover(p3, 2, 1)
    >>> labeling.span, labeling.method
    (3, 'pathcover')
    '''
    pvector, cover_graph = _cover_graph(graph, p, q)
    cover = min_path_cover(cover_graph, max_n)
    order = [v for path in cover.paths for v in path]
    labeling = reduction.greedy_label_for_order(graph, pvector, order)
    return models.Labeling(labeling.labels, method='pathcover')


def apex_complement(graph):
    '''Complement of ``graph`` plus a new vertex ``n`` adjacent to all others

    The result always has diameter at most two and its L(2, 1) span is
    ``n + s(graph)``, so ``graph`` has a Hamiltonian path exactly when the
    span is ``n + 1``.

    >>> p3 = models.Graph.from_edges(3, [(0, 1), (1, 2)])
    >>> apex = apex_complement(p3)
    >>> apex.adjacency
    ((2, 3), (3,), (0, 3), (0, 1, 2))
    >>> span_via_path_cover(apex, 2, 1)
    4
    '''
    inverse = graphs.complement(graph)
    apex = graph.n
    adjacency = [set(neighbours) | {apex} for neighbours in inverse.adjacency]
    adjacency.append(set(range(graph.n)))
    return models.Graph(graph.n + 1, adjacency)
