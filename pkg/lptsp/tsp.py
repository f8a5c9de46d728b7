'''
Free endpoint path TSP solvers.

All solvers take a :py:class:`~lptsp.models.MetricInstance` and return a
:py:class:`~lptsp.models.HamiltonianPath`. They are deterministic: ties are
broken towards the smallest vertex ids.

+-------------------------+-------------------------------------------------+
| Solver                  | Guarantee                                       |
+=========================+=================================================+
| `held_karp_path`        | exact, ``O(2^n n^2)`` time, ``O(2^n n)`` memory |
+-------------------------+-------------------------------------------------+
| `christofides_path`     | at most 1.5 times the optimum, metric only      |
+-------------------------+-------------------------------------------------+
| `nearest_neighbor_path` | none, seed for the local search                 |
+-------------------------+-------------------------------------------------+
| `two_opt_improve`       | never longer than its input                     |
+-------------------------+-------------------------------------------------+
| `heuristic_path`        | none, best local optimum over all seeds         |
+-------------------------+-------------------------------------------------+

>>> inst = models.MetricInstance([[0, 2, 1], [2, 0, 2], [1, 2, 0]])
>>> held_karp_path(inst)
<HamiltonianPath (0, 2, 1) length=3>
>>> christofides_path(inst).length
3
>>> nearest_neighbor_path(inst, 1)
<HamiltonianPath (1, 0, 2) length=3>
>>> two_opt_improve(inst, models.HamiltonianPath.from_order(inst, [0, 1, 2]))
<HamiltonianPath (1, 0, 2) length=3>
'''
import functools
import logging
import math

import networkx
import numpy as np

from . import exceptions
from . import models
from . import utils

logger = logging.getLogger(__name__)

#: Largest instance :py:func:`held_karp_path` accepts, the table needs
#: ``2^n * n`` entries
HELD_KARP_MAX_N = 24

#: Largest odd vertex set matched by the subset DP, above it the blossom
#: algorithm takes over
MATCHING_DP_MAX = 18


def held_karp_path(instance, max_n=None):
    '''Shortest Hamiltonian path with free endpoints

    The table entry ``(S, v)`` holds the length of the shortest path that
    visits exactly the vertices in ``S`` and ends in ``v``. Subsets are
    processed layer by layer in order of their size, each layer as one
    vectorised numpy operation per end vertex.

    Among all optimal paths the lexicographically smallest vertex order is
    returned.

    Args:
        instance (MetricInstance): The instance, metric or not
        max_n (int): Override for :py:data:`HELD_KARP_MAX_N`

    >>> held_karp_path(models.MetricInstance([[0]]))
    <HamiltonianPath (0,) length=0>
    >>> held_karp_path(models.MetricInstance(np.full((3, 3), 2) - 2 * np.eye(
    ...     3, dtype=int))).length
    4
    '''
    max_n = utils.coalesce(max_n, HELD_KARP_MAX_N)
    n = instance.n
    if n < 1:
        raise ValueError('cannot route an empty instance')
    if n > max_n:
        raise exceptions.InstanceTooLarge(n, max_n)
    if n == 1:
        return models.HamiltonianPath((0, ), 0)

    # int32 halves the table when the lengths allow it
    bound = int(instance.w.max()) * n
    dtype = np.int32 if bound < 2 ** 28 else np.int64
    infinity = np.iinfo(dtype).max // 4
    weights = instance.w.astype(dtype)

    size = 1 << n
    table = np.full((size, n), infinity, dtype=dtype)
    vertices = np.arange(n)
    table[1 << vertices, vertices] = 0

    masks = np.arange(size, dtype=np.int64)
    popcount = np.zeros(size, dtype=np.int64)
    for v in range(n):
        popcount += (masks >> v) & 1
    by_size = masks[np.argsort(popcount, kind='stable')]
    bounds = np.concatenate(([0], np.cumsum(np.bincount(popcount))))

    for subset_size in range(2, n + 1):
        layer = by_size[bounds[subset_size]:bounds[subset_size + 1]]
        logger.debug('layer %d: %d subsets', subset_size, len(layer))
        for v in range(n):
            bit = 1 << v
            ending = layer[(layer & bit) != 0]
            previous = table[ending ^ bit]
            table[ending, v] = (previous + weights[:, v]).min(axis=1)

    full = size - 1
    best = int(table[full].min())

    # paths reverse, so table[S, v] is also the best path starting at v
    current = int(np.flatnonzero(table[full] == best)[0])
    order = [current]
    remaining = full ^ (1 << current)
    cost = 0
    while remaining:
        for u in range(n):
            if not remaining >> u & 1:
                continue
            step = int(weights[current, u])
            if cost + step + int(table[remaining, u]) == best:
                break
        else:  # pragma: no cover
            raise AssertionError('no optimal continuation from %d' % current)

        order.append(u)
        cost += step
        remaining ^= 1 << u
        current = u

    path = models.HamiltonianPath(order, best)
    logger.debug('held-karp: %r', path)
    return path


def min_weight_matching_leave_two(weights, dp_max=None):
    '''Minimum weight matching that leaves exactly two vertices unmatched

    Args:
        weights: Symmetric matrix over the vertices ``0..m-1`` to match, ``m``
                 even and at least 2
        dp_max (int): Override for :py:data:`MATCHING_DP_MAX`

    Returns:
        tuple: The matched pairs ``(i, j)`` with ``i < j`` in ascending order
        and the total weight

    >>> min_weight_matching_leave_two([[0, 7], [7, 0]])
    ([], 0)
    >>> weights = [[0, 1, 5, 5], [1, 0, 5, 5], [5, 5, 0, 1], [5, 5, 1, 0]]
    >>> min_weight_matching_leave_two(weights)
    ([(2, 3)], 1)
    >>> min_weight_matching_leave_two(weights, dp_max=0)[1]
    1
    '''
    weights = np.asarray(weights, dtype=np.int64)
    m = len(weights)
    if m < 2 or m % 2:
        raise ValueError('need an even number of at least 2 vertices, got %d'
                         % m)

    if m <= utils.coalesce(dp_max, MATCHING_DP_MAX):
        pairs, total = _matching_by_subsets(weights.tolist())
    else:
        pairs, total = _matching_by_blossom(weights)

    logger.debug('matched %d of %d odd vertices, weight %d',
                 2 * len(pairs), m, total)
    return sorted(pairs), total


def _matching_by_subsets(weights):
    @functools.lru_cache(maxsize=None)
    def best(mask, skips):
        if not mask:
            return (0, ()) if not skips else (math.inf, ())

        i = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << i)
        result = math.inf, ()
        if skips:
            result = best(rest, skips - 1)

        others = rest
        while others:
            j = (others & -others).bit_length() - 1
            others ^= 1 << j
            cost, pairs = best(rest ^ (1 << j), skips)
            cost += weights[i][j]
            if cost < result[0]:
                result = cost, ((i, j), ) + pairs

        return result

    total, pairs = best((1 << len(weights)) - 1, 2)
    return list(pairs), int(total)


def _matching_by_blossom(weights):
    # Two zero weight dummies soak up the unmatched pair, a perfect matching
    # of maximum inverted weight then is a minimum near-perfect matching
    m = len(weights)
    top = int(weights.max()) + 1
    graph = networkx.Graph()
    for i in range(m):
        for j in range(i + 1, m):
            graph.add_edge(i, j, weight=top - int(weights[i, j]))
        for dummy in (m, m + 1):
            graph.add_edge(i, dummy, weight=top)

    matching = networkx.max_weight_matching(graph, maxcardinality=True)
    pairs = [tuple(sorted(pair)) for pair in matching if max(pair) < m]
    assert len(pairs) == m // 2 - 1, 'matching is not near perfect'
    return pairs, int(sum(weights[i, j] for i, j in pairs))


def christofides_path(instance, dp_max=None):
    '''1.5-approximate shortest Hamiltonian path with free endpoints

    Minimum spanning tree, plus a minimum matching on its odd degree
    vertices that leaves two of them unmatched, gives a multigraph with an
    Eulerian path between the two; skipping repeated vertices along that
    walk never makes it longer in a metric instance.

    Raises:
        NonMetricInstance: The triangle inequality fails somewhere

    >>> christofides_path(models.MetricInstance([[0]]))
    <HamiltonianPath (0,) length=0>
    >>> christofides_path(models.MetricInstance([[0, 3, 1], [3, 0, 1],
    ...                                          [1, 1, 0]]))
    Traceback (most recent call last):
    ...
    NonMetricInstance: ...
    '''
    violation = instance.triangle_violation()
    if violation is not None:
        raise exceptions.NonMetricInstance(*violation)

    n = instance.n
    if n == 1:
        return models.HamiltonianPath((0, ), 0)

    graph = networkx.Graph()
    graph.add_nodes_from(range(n))
    for u in range(n):
        for v in range(u + 1, n):
            graph.add_edge(u, v, weight=instance.weight(u, v))

    tree = networkx.minimum_spanning_tree(graph)
    odd = sorted(v for v, degree in tree.degree() if degree % 2)
    pairs, _ = min_weight_matching_leave_two(
        instance.w[np.ix_(odd, odd)], dp_max=dp_max)

    multigraph = networkx.MultiGraph(tree)
    matched = set()
    for i, j in pairs:
        multigraph.add_edge(odd[i], odd[j])
        matched.update((i, j))
    ends = [odd[i] for i in range(len(odd)) if i not in matched]
    assert len(ends) == 2, 'expected two unmatched odd vertices, got %r' % (
        ends, )

    walk = list(networkx.eulerian_path(multigraph, source=ends[0]))
    seen = set()
    order = []
    for v in [walk[0][0]] + [edge[1] for edge in walk]:
        if v not in seen:
            seen.add(v)
            order.append(v)

    path = models.HamiltonianPath.from_order(instance, order)
    logger.debug('christofides: tree %d, %d matched pairs, %r',
                 int(tree.size(weight='weight')), len(pairs), path)
    return path


def nearest_neighbor_path(instance, start=0):
    '''Greedy path from ``start`` to the nearest unvisited vertex each step

    >>> inst = models.MetricInstance([[0, 2, 2], [2, 0, 2], [2, 2, 0]])
    >>> nearest_neighbor_path(inst, 0)
    <HamiltonianPath (0, 1, 2) length=4>
    '''
    if not 0 <= start < instance.n:
        raise ValueError('start %r out of range [0, %d)' % (
            start, instance.n))

    weights = instance.w.tolist()
    order = [start]
    unvisited = set(range(instance.n)) - {start}
    while unvisited:
        row = weights[order[-1]]
        nearest = min(unvisited, key=lambda u: (row[u], u))
        unvisited.remove(nearest)
        order.append(nearest)

    return models.HamiltonianPath.from_order(instance, order)


def two_opt_improve(instance, path, budget=None):
    '''Local search with 2-opt and Or-opt moves

    A 2-opt move reverses a stretch of the path (a prefix or suffix
    reversal only swaps one edge since the endpoints are free), an Or-opt
    move relocates a run of up to three vertices, optionally reversed.
    The first improving move in ascending position order is applied until
    no move improves or ``budget`` moves were made.

    Args:
        instance (MetricInstance): The instance
        path (HamiltonianPath): Starting path
        budget (int): Maximum number of moves, unlimited when ``None``
    '''
    weights = instance.w.tolist()

    def weight(a, b):
        if a is None or b is None:
            return 0
        return weights[a][b]

    order = list(path.order)
    moves = 0
    while budget is None or moves < budget:
        improved = _two_opt_move(order, weight)
        if improved is None:
            improved = _or_opt_move(order, weight)
        if improved is None:
            break

        order = improved
        moves += 1

    result = models.HamiltonianPath.from_order(instance, order)
    logger.debug('local search: %d moves, length %s -> %d',
                 moves, path.length, result.length)
    return result


def _two_opt_move(order, weight):
    n = len(order)
    for i in range(n - 1):
        before = order[i - 1] if i else None
        for j in range(i + 1, n):
            if i == 0 and j == n - 1:
                continue
            after = order[j + 1] if j + 1 < n else None
            a, b = order[i], order[j]
            delta = weight(before, b) + weight(a, after) \
                - weight(before, a) - weight(b, after)
            if delta < 0:
                return order[:i] + order[i:j + 1][::-1] + order[j + 1:]


def _or_opt_move(order, weight):
    n = len(order)
    for length in (1, 2, 3):
        for i in range(n - length + 1):
            segment = order[i:i + length]
            rest = order[:i] + order[i + length:]
            before = order[i - 1] if i else None
            after = order[i + length] if i + length < n else None
            removal = weight(before, after) - weight(before, segment[0]) \
                - weight(segment[-1], after)

            for t in range(len(rest) + 1):
                x = rest[t - 1] if t else None
                y = rest[t] if t < len(rest) else None
                for piece in (segment, segment[::-1]):
                    if t == i and piece is segment:
                        continue
                    delta = removal + weight(x, piece[0]) \
                        + weight(piece[-1], y) - weight(x, y)
                    if delta < 0:
                        return rest[:t] + piece + rest[t:]


def heuristic_path(instance, budget=None):
    '''Best local optimum over nearest neighbour seeds from every vertex

    >>> inst = models.MetricInstance([[0, 2, 1], [2, 0, 2], [1, 2, 0]])
    >>> heuristic_path(inst).length
    3
    '''
    best = None
    for start in range(instance.n):
        path = two_opt_improve(
            instance, nearest_neighbor_path(instance, start), budget)
        if best is None or path.length < best.length:
            best = path
    return best
