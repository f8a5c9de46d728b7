'''
Graph powers, their colorings and neighborhood diversity.

An L(1, ..., 1)-labeling with ``k`` ones is exactly a proper coloring of the
``k``-th power of the graph, so its minimum span is ``chi(G^k) - 1``.
Scaling such a labeling by ``p_max`` gives a valid L(p)-labeling, which is
what :py:func:`lptsp.labeling.pmax_approx_labeling` builds on.

>>> c5 = models.Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
>>> l1_labeling_via_coloring(c5, 2).span
4
>>> l1_labeling_via_coloring(c5, 1).span
2
>>> neighborhood_diversity(c5).nd
5
'''
import logging

import networkx

from . import exceptions
from . import graphs
from . import models
from . import utils

logger = logging.getLogger(__name__)

#: Largest graph :py:func:`chromatic_coloring` accepts
COLORING_MAX_N = 24


def neighborhood_diversity(graph):
    '''Partition into classes of twins

    ``u`` and ``v`` are twins when ``N(u) - {v} == N(v) - {u}``. Being twins
    is an equivalence relation, so comparing against one representative per
    class is enough. Every class is a clique (true twins) or an independent
    set (false twins).

    >>> star = models.Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    >>> neighborhood_diversity(star).classes
    ((0,), (1, 2, 3))
    >>> p4 = models.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    >>> neighborhood_diversity(p4).nd
    4
    '''
    classes = []
    for v in range(graph.n):
        for members in classes:
            u = members[0]
            if graph.neighbours(u) - {v} == graph.neighbours(v) - {u}:
                members.append(v)
                break
        else:
            classes.append([v])

    return models.TwinPartition(classes)


class _ColoringSearch(object):
    '''DSATUR branch and bound, stops as soon as the clique bound is met'''

    def __init__(self, graph, clique, upper):
        self.graph = graph
        self.lower = len(clique)
        self.best = upper
        self.best_count = max(upper) + 1
        self.colors = [-1] * graph.n
        self.neighbour_colors = [dict() for _ in range(graph.n)]
        self.nodes = 0

        for color, v in enumerate(clique):
            self._assign(v, color)

    def _assign(self, v, color):
        self.colors[v] = color
        for u in self.graph.adjacency[v]:
            counts = self.neighbour_colors[u]
            counts[color] = counts.get(color, 0) + 1

    def _unassign(self, v, color):
        self.colors[v] = -1
        for u in self.graph.adjacency[v]:
            counts = self.neighbour_colors[u]
            counts[color] -= 1
            if not counts[color]:
                del counts[color]

    def _select(self):
        best = None
        for v in range(self.graph.n):
            if self.colors[v] >= 0:
                continue
            free_degree = sum(
                1 for u in self.graph.adjacency[v] if self.colors[u] < 0)
            key = len(self.neighbour_colors[v]), free_degree
            if best is None or key > best[0]:
                best = key, v
        return best[1]

    def run(self):
        self._search(self.lower, self.lower)
        return self.best

    def _search(self, used, colored):
        self.nodes += 1
        if colored == self.graph.n:
            if used < self.best_count:
                self.best = list(self.colors)
                self.best_count = used
            return used == self.lower

        v = self._select()
        forbidden = self.neighbour_colors[v]
        for color in range(used + 1):
            if color + 1 >= self.best_count:
                break
            if color in forbidden:
                continue

            self._assign(v, color)
            if self._search(max(used, color + 1), colored + 1):
                return True
            self._unassign(v, color)

        return False


def chromatic_coloring(graph, max_n=None):
    '''Optimal proper coloring, one color per vertex in ``0..chi-1``

    A maximum clique is precolored and gives the lower bound, greedy DSATUR
    gives the first upper bound, and the branch and bound only has to close
    the gap between the two.

    >>> k4 = models.Graph.from_edges(4, [(u, v) for u in range(4)
    ...                                  for v in range(u + 1, 4)])
    >>> sorted(chromatic_coloring(k4))
    [0, 1, 2, 3]
    '''
    max_n = utils.coalesce(max_n, COLORING_MAX_N)
    if graph.n > max_n:
        raise exceptions.InstanceTooLarge(graph.n, max_n)
    if graph.n == 0:
        return []

    nx_graph = graph.to_networkx()
    clique, _ = networkx.max_weight_clique(nx_graph, weight=None)
    greedy = networkx.coloring.greedy_color(nx_graph, strategy='DSATUR')
    upper = [greedy[v] for v in range(graph.n)]

    if max(upper) + 1 == len(clique):
        logger.debug('DSATUR meets the clique bound %d', len(clique))
        return upper

    search = _ColoringSearch(graph, sorted(clique), upper)
    colors = search.run()
    logger.debug('coloring of %r: %d colors, clique %d, %d search nodes',
                 graph, max(colors) + 1, len(clique), search.nodes)
    return colors


def l1_labeling_via_coloring(graph, k, max_n=None, distances=None):
    '''Optimal L(1, ..., 1)-labeling with ``k`` ones

    The labels are the colors of an optimal coloring of ``G^k``, so the span
    is ``chi(G^k) - 1``.

    >>> p3 = models.Graph.from_edges(3, [(0, 1), (1, 2)])
    >>> labeling = l1_labeling_via_coloring(p3, 2)
    >>> labeling.span, sorted(labeling.labels.values())
    (2, [0, 1, 2])
    '''
    power = graphs.graph_power(graph, k, distances)
    return models.Labeling(
        chromatic_coloring(power, max_n), method='coloring')
