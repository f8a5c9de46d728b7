'''
Reduction of L(p)-labeling to path TSP.

For a graph ``G`` of diameter at most ``k`` the complete graph ``H`` on the
same vertices gets the weight ``w(u, v) = p_d`` where ``d`` is the distance
of ``u`` and ``v`` in ``G``. When ``p_max <= 2 * p_min`` every weight lies in
``[p_min, 2 * p_min]`` so ``H`` is metric, and the minimum span labeling
whose labels are nondecreasing along a vertex order is exactly the prefix sum
of the weights along that order. Minimising the span over all orders is then
the same as finding a shortest Hamiltonian path in ``H``.

>>> from lptsp import parser
>>> p3 = parser.parse_graph('3 2\\n0 1\\n1 2')
>>> p = models.PVector([2, 1])
>>> check_preconditions(p3, p).ok
True
>>> inst = build_instance(p3, p)
>>> inst.w.tolist()
[[0, 2, 1], [2, 0, 2], [1, 2, 0]]
>>> path = models.HamiltonianPath.from_order(inst, [1, 0, 2])
>>> label_from_path(inst, path).labels
{0: 2, 1: 0, 2: 3}
>>> greedy_label_for_order(p3, p, [1, 0, 2]).labels
{0: 2, 1: 0, 2: 3}
'''
import logging
import math

import numpy as np

from . import exceptions
from . import graphs
from . import models

logger = logging.getLogger(__name__)


def separation_matrix(distances, pvector):
    '''Required gap per vertex pair, 0 for pairs further apart than ``k``

    >>> d = graphs.all_pairs_distances(models.Graph.from_edges(
    ...     4, [(0, 1), (1, 2), (2, 3)]))
    >>> separation_matrix(d, models.PVector([2, 1])).tolist()
    [[0, 2, 1, 0], [2, 0, 2, 1], [1, 2, 0, 2], [0, 1, 2, 0]]
    '''
    lookup = np.zeros(distances.unreachable + 1, dtype=np.int64)
    # the last slot is the unreachable marker and stays 0
    k = min(pvector.k, distances.unreachable - 1)
    lookup[1:k + 1] = pvector.p[:k]
    return lookup[distances.matrix]


def check_preconditions(graph, pvector, distances=None):
    '''Report whether the reduction applies to ``graph`` and ``pvector``

    The diameter condition requires ``graph`` to be connected with
    ``diam <= k``, the ratio condition requires ``p_max <= 2 * p_min``.
    Nothing is raised, callers decide what to enforce.

    >>> p4 = models.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    >>> check_preconditions(p4, models.PVector([2, 1]))
    <PreconditionReport diameter=3 k=2 diameter_ok=False ratio_ok=True>
    '''
    if distances is None:
        distances = graphs.all_pairs_distances(graph)

    diameter = graphs.diameter(distances)
    return models.PreconditionReport(
        diameter_ok=diameter <= pvector.k,
        ratio_ok=pvector.ratio_ok,
        diameter=diameter,
        k=pvector.k,
    )


def build_instance(graph, pvector, distances=None):
    '''Build the path TSP instance ``H`` for ``graph`` and ``pvector``

    The instance is built even when ``p_max > 2 * p_min``; it is then not
    necessarily metric, which :py:meth:`MetricInstance.is_metric` reveals.

    Raises:
        Disconnected: Some pair of vertices is unreachable
        DiameterExceedsK: Some pair is further apart than ``k``

    >>> star = models.Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    >>> build_instance(star, models.PVector([2, 1])).w.tolist()
    [[0, 2, 2, 2], [2, 0, 1, 1], [2, 1, 0, 1], [2, 1, 1, 0]]
    '''
    if distances is None:
        distances = graphs.all_pairs_distances(graph)

    if not distances.connected:
        raise exceptions.Disconnected()

    diameter = graphs.diameter(distances)
    if diameter > pvector.k:
        raise exceptions.DiameterExceedsK(diameter, pvector.k)

    if not pvector.ratio_ok:
        logger.warning(
            'p=%s has p_max > 2*p_min, the instance may not be metric',
            pvector)

    instance = models.MetricInstance(
        separation_matrix(distances, pvector), pvector=pvector)
    logger.info('built %r for %r with p=%s', instance, graph, pvector)
    return instance


def label_from_path(instance, path):
    '''Labels as prefix sums of the weights along ``path``

    The first vertex gets 0 and the span equals the path length.

    >>> inst = models.MetricInstance([[0, 2, 2], [2, 0, 2], [2, 2, 0]])
    >>> label_from_path(inst, models.HamiltonianPath([0, 1, 2])).labels
    {0: 0, 1: 2, 2: 4}
    '''
    order = list(path.order)
    if len(order) != instance.n:
        raise ValueError('path has %d vertices, instance has %d' % (
            len(order), instance.n))

    steps = instance.w[order[:-1], order[1:]]
    prefix = np.concatenate(([0], np.cumsum(steps)))
    return models.Labeling(dict(zip(order, prefix.tolist())))


def greedy_label_for_order(graph, pvector, order, distances=None):
    '''Minimum span labeling that is nondecreasing along ``order``

    Every vertex gets the smallest label that keeps the required gap to all
    vertices before it. This is exact for any graph and any ``pvector``,
    pairs further apart than ``k`` only enforce the monotonicity.

    >>> p3 = models.Graph.from_edges(3, [(0, 1), (1, 2)])
    >>> greedy_label_for_order(p3, models.PVector([2, 1]), [0, 1, 2]).labels
    {0: 0, 1: 2, 2: 4}
    '''
    order = [int(v) for v in order]
    if sorted(order) != list(range(graph.n)):
        raise ValueError('order %r is not a permutation of 0..%d' % (
            order, graph.n - 1))
    if distances is None:
        distances = graphs.all_pairs_distances(graph)

    separation = separation_matrix(distances, pvector).tolist()
    return models.Labeling(_greedy_labels(separation, order))


def _greedy_labels(separation, order):
    labels = {}
    for v in order:
        row = separation[v]
        label = 0
        for u, placed in labels.items():
            label = max(label, placed + row[u])
        labels[v] = label
    return labels


def pad_pvector(pvector, diameter):
    '''Pad ``pvector`` with ``p_min`` entries so it covers ``diameter``

    >>> pad_pvector(models.PVector([2, 1]), 4)
    PVector(2, 1, 1, 1)
    >>> pad_pvector(models.PVector([2, 1]), 1)
    PVector(2, 1)
    '''
    if diameter == math.inf:
        raise exceptions.Disconnected()
    if diameter > pvector.k:
        logger.warning('padding p=%s with p_min up to diameter %d',
                       pvector, diameter)
    return pvector.padded(diameter)
