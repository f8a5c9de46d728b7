'''
The value types every module passes around.

All of them are immutable after construction: the numpy matrices inside
:py:class:`DistanceMatrix` and :py:class:`MetricInstance` are flagged
read-only and the vertex orders and adjacency lists are tuples.

Each model exposes a ``data`` property with a JSON-ready representation which
:py:class:`lptsp.json.JSONEncoder` uses when dumping.
'''
import collections
from collections import abc

import numpy as np

from . import exceptions


class Model(object):

    def __repr__(self):
        return '<%s>' % self.__class__.__name__


class Graph(Model):
    '''Simple undirected graph on the vertices ``0..n-1``

    Args:
        n (int): Number of vertices
        adjacency (list): Per vertex an iterable of neighbour ids

    >>> g = Graph.from_edges(3, [(0, 1), (1, 2), (1, 0)])
    >>> g.n, g.m
    (3, 2)
    >>> g.adjacency
    ((1,), (0, 2), (1,))
    >>> g.has_edge(2, 1), g.has_edge(0, 2)
    (True, False)
    >>> list(g.edges())
    [(0, 1), (1, 2)]
    >>> g
    <Graph n=3 m=2>

    >>> Graph.from_edges(2, [(1, 1)])
    Traceback (most recent call last):
    ...
    ValueError: self-loop on vertex 1
    '''

    def __init__(self, n, adjacency):
        if n < 0:
            raise ValueError('negative vertex count %r' % n)
        if len(adjacency) != n:
            raise ValueError('expected %d adjacency lists, got %d' % (
                n, len(adjacency)))

        self.n = n
        self.adjacency = tuple(
            tuple(sorted(set(int(u) for u in neighbours)))
            for neighbours in adjacency)

        for v, neighbours in enumerate(self.adjacency):
            for u in neighbours:
                if not 0 <= u < n:
                    raise ValueError('vertex %d out of range [0, %d)' % (u, n))
                if u == v:
                    raise ValueError('self-loop on vertex %d' % v)
                if v not in self._neighbour_sets[u]:
                    raise ValueError('edge %d-%d is not symmetric' % (v, u))

    @property
    def _neighbour_sets(self):
        sets = self.__dict__.get('_sets')
        if sets is None:
            sets = self.__dict__['_sets'] = tuple(
                frozenset(neighbours) for neighbours in self.adjacency)
        return sets

    @classmethod
    def from_edges(cls, n, edges):
        '''Build a graph from an edge iterable, dropping duplicate edges'''
        adjacency = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError('self-loop on vertex %d' % u)
            for x in (u, v):
                if not 0 <= x < n:
                    raise ValueError('vertex %d out of range [0, %d)' % (x, n))
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(n, adjacency)

    @property
    def m(self):
        return sum(len(neighbours) for neighbours in self.adjacency) // 2

    def neighbours(self, v):
        return self._neighbour_sets[v]

    def degree(self, v):
        return len(self.adjacency[v])

    def has_edge(self, u, v):
        return v in self._neighbour_sets[u]

    def edges(self):
        for v, neighbours in enumerate(self.adjacency):
            for u in neighbours:
                if v < u:
                    yield v, u

    def to_networkx(self):
        import networkx

        nx_graph = networkx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    @property
    def data(self):
        return dict(n=self.n, edges=[list(edge) for edge in self.edges()])

    def __eq__(self, other):
        return isinstance(other, Graph) and \
            self.adjacency == other.adjacency

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.adjacency)

    def __repr__(self):
        return '<%s n=%d m=%d>' % (self.__class__.__name__, self.n, self.m)


class DistanceMatrix(Model):
    '''Hop distances between all vertex pairs

    Unreachable pairs hold :py:attr:`unreachable`, which is ``n`` and thereby
    strictly greater than any distance a graph on ``n`` vertices can have.

    >>> d = DistanceMatrix([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    >>> d[0, 2], d.unreachable, d.connected
    (2, 3, True)
    >>> DistanceMatrix([[0, 2], [2, 0]]).connected
    False
    '''

    def __init__(self, matrix):
        matrix = np.array(matrix, dtype=np.int64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError('distance matrix must be square, got %r' % (
                matrix.shape, ))

        matrix.setflags(write=False)
        self.matrix = matrix
        self.n = matrix.shape[0]
        self.unreachable = max(self.n, 1)

    def __getitem__(self, key):
        u, v = key
        return int(self.matrix[u, v])

    def reachable(self, u, v):
        return self.matrix[u, v] < self.unreachable

    @property
    def connected(self):
        return not (self.matrix >= self.unreachable).any()

    @property
    def data(self):
        return self.matrix.tolist()

    def __repr__(self):
        return '<%s n=%d>' % (self.__class__.__name__, self.n)


class PVector(Model):
    '''Separation requirements ``(p_1, ..., p_k)``

    Vertices at distance ``d <= k`` need labels at least ``p_d`` apart,
    vertices further apart are unconstrained.

    >>> p = PVector([2, 1])
    >>> p.k, p.p_min, p.p_max, p.ratio_ok
    (2, 1, 2, True)
    >>> p.requirement(1), p.requirement(2), p.requirement(3)
    (2, 1, 0)
    >>> PVector.from_string('3, 2,1')
    PVector(3, 2, 1)
    >>> PVector([2, 1]).padded(4)
    PVector(2, 1, 1, 1)
    >>> PVector([2, 1]).scaled(3)
    PVector(6, 3)
    >>> PVector([2, 0])
    Traceback (most recent call last):
    ...
    ZeroSeparation: ...
    >>> PVector([])
    Traceback (most recent call last):
    ...
    InvalidPVector: ...
    '''

    def __init__(self, p):
        values = tuple(p)
        if not values:
            raise exceptions.InvalidPVector('p needs at least one entry')

        for value in values:
            if isinstance(value, bool) or \
                    not isinstance(value, (int, np.integer)):
                raise exceptions.InvalidPVector(
                    'p entries must be integers, got %r' % (value, ))
            if value < 0:
                raise exceptions.InvalidPVector(
                    'p entries must be positive, got %r' % (value, ))
            if value == 0:
                raise exceptions.ZeroSeparation(
                    'p entries must be at least 1, got %r' % (values, ))

        self.p = tuple(int(value) for value in values)

    @classmethod
    def from_string(cls, value):
        try:
            return cls(int(part) for part in value.split(','))
        except ValueError:
            raise exceptions.InvalidPVector(
                'expected a comma separated list of integers, got %r' % value)

    @classmethod
    def ones(cls, k):
        return cls([1] * k)

    @property
    def k(self):
        return len(self.p)

    @property
    def p_min(self):
        return min(self.p)

    @property
    def p_max(self):
        return max(self.p)

    @property
    def ratio_ok(self):
        return self.p_max <= 2 * self.p_min

    def requirement(self, d):
        '''Separation for distance ``d``; 0 for ``d > k`` and ``d == 0``'''
        if 1 <= d <= self.k:
            return self.p[d - 1]
        return 0

    def padded(self, k):
        '''Extend with ``p_min`` entries up to length ``k``'''
        return PVector(self.p + (self.p_min, ) * max(0, k - self.k))

    def scaled(self, c):
        return PVector(c * value for value in self.p)

    @property
    def data(self):
        return list(self.p)

    def __iter__(self):
        return iter(self.p)

    def __len__(self):
        return self.k

    def __eq__(self, other):
        return isinstance(other, PVector) and self.p == other.p

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.p)

    def __str__(self):
        return ','.join(str(value) for value in self.p)

    def __repr__(self):
        return '%s(%s)' % (
            self.__class__.__name__, ', '.join(str(v) for v in self.p))


class MetricInstance(Model):
    '''Complete edge weighted graph for path TSP

    The weights are non-negative integers with a zero diagonal. Instances
    built by :py:func:`lptsp.reduction.build_instance` are strictly positive
    off the diagonal; the path cover route also uses 0/1 instances.

    Args:
        weights: Square symmetric integer matrix
        pvector (PVector): The vector the instance was reduced from, if any

    >>> inst = MetricInstance([[0, 2, 1], [2, 0, 2], [1, 2, 0]])
    >>> inst.n, inst.weight(0, 1), inst.is_metric()
    (3, 2, True)
    >>> MetricInstance([[0, 3, 1], [3, 0, 1], [1, 1, 0]]).triangle_violation()
    (0, 2, 1)
    '''

    def __init__(self, weights, pvector=None):
        w = np.array(weights, dtype=np.int64)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ValueError('weight matrix must be square, got %r' % (
                w.shape, ))
        if (np.diag(w) != 0).any():
            raise ValueError('weight matrix needs a zero diagonal')
        if (w != w.T).any():
            raise ValueError('weight matrix must be symmetric')
        if (w < 0).any():
            raise ValueError('weights must be non-negative')

        w.setflags(write=False)
        self.w = w
        self.n = w.shape[0]
        self.pvector = pvector
        self._violation = False

    def weight(self, u, v):
        return int(self.w[u, v])

    def triangle_violation(self):
        '''First triple ``(u, x, v)`` with ``w(u,v) > w(u,x) + w(x,v)``

        Triples are scanned with ``x`` ascending, then ``u`` and ``v`` in row
        major order. Returns ``None`` for a metric instance.
        '''
        if self._violation is False:
            self._violation = None
            for x in range(self.n):
                detour = self.w[:, x, None] + self.w[None, x, :]
                violations = np.argwhere(self.w > detour)
                if len(violations):
                    u, v = violations[0]
                    self._violation = int(u), x, int(v)
                    break
        return self._violation

    def is_metric(self):
        return self.triangle_violation() is None

    @property
    def data(self):
        return dict(n=self.n, weights=self.w.tolist())

    def __repr__(self):
        return '<%s n=%d>' % (self.__class__.__name__, self.n)


def path_length(instance, order):
    '''Sum of consecutive weights along ``order``

    >>> inst = MetricInstance([[0, 2, 1], [2, 0, 2], [1, 2, 0]])
    >>> path_length(inst, (1, 0, 2))
    3
    >>> path_length(inst, (0, ))
    0
    '''
    order = list(order)
    if len(order) < 2:
        return 0
    return int(instance.w[order[:-1], order[1:]].sum())


class HamiltonianPath(Model):
    '''A vertex order visiting every vertex once, with its length

    >>> inst = MetricInstance([[0, 2, 1], [2, 0, 2], [1, 2, 0]])
    >>> HamiltonianPath.from_order(inst, [1, 0, 2])
    <HamiltonianPath (1, 0, 2) length=3>
    >>> HamiltonianPath([0, 0, 1])
    Traceback (most recent call last):
    ...
    ValueError: order (0, 0, 1) is not a permutation of 0..2
    '''

    def __init__(self, order, length=None):
        order = tuple(int(v) for v in order)
        if sorted(order) != list(range(len(order))):
            raise ValueError('order %r is not a permutation of 0..%d' % (
                order, len(order) - 1))

        self.order = order
        self.length = length

    @classmethod
    def from_order(cls, instance, order):
        order = tuple(order)
        if len(order) != instance.n:
            raise ValueError('order has %d vertices, instance has %d' % (
                len(order), instance.n))
        return cls(order, path_length(instance, order))

    @property
    def n(self):
        return len(self.order)

    @property
    def data(self):
        return dict(order=list(self.order), length=self.length)

    def __iter__(self):
        return iter(self.order)

    def __len__(self):
        return len(self.order)

    def __eq__(self, other):
        return isinstance(other, HamiltonianPath) and \
            (self.order, self.length) == (other.order, other.length)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.order, self.length))

    def __repr__(self):
        return '<%s %s length=%s>' % (
            self.__class__.__name__, self.order, self.length)


class Labeling(Model):
    '''Vertex labels with their span

    Args:
        labels: Either a mapping vertex -> label or a sequence indexed by
                vertex
        method (str): Name of whatever produced the labeling

    >>> labeling = Labeling([0, 2, 4], method='exact')
    >>> labeling.labels, labeling.span
    ({0: 0, 1: 2, 2: 4}, 4)
    >>> labeling[1]
    2
    >>> Labeling({1: 3, 0: 5}).normalized().labels
    {0: 2, 1: 0}
    >>> Labeling.from_dict({'labels': {'0': 0, '1': 2}}).labels
    {0: 0, 1: 2}
    '''

    def __init__(self, labels, method=None):
        if isinstance(labels, abc.Mapping):
            items = labels.items()
        else:
            items = enumerate(labels)

        self.labels = dict(sorted((int(v), int(l)) for v, l in items))
        self.method = method

    @classmethod
    def from_dict(cls, data):
        '''Load the JSON representation, or a bare vertex -> label map'''
        if 'labels' in data:
            return cls(data['labels'], data.get('method'))
        return cls(data)

    @property
    def span(self):
        return max(self.labels.values()) if self.labels else 0

    def normalized(self):
        '''Shift every label so the smallest one is 0'''
        if not self.labels:
            return self
        low = min(self.labels.values())
        return Labeling(
            dict((v, l - low) for v, l in self.labels.items()), self.method)

    def scaled(self, c, method=None):
        return Labeling(
            dict((v, c * l) for v, l in self.labels.items()),
            method or self.method)

    @property
    def data(self):
        return dict(labels=self.labels, span=self.span, method=self.method)

    def __getitem__(self, v):
        return self.labels[v]

    def __contains__(self, v):
        return v in self.labels

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        return isinstance(other, Labeling) and self.labels == other.labels

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(tuple(self.labels.items()))

    def __repr__(self):
        return '<%s span=%d %s>' % (
            self.__class__.__name__, self.span, self.labels)


#: A pair ``u < v`` at distance ``d`` whose labels are ``actual`` apart while
#: ``required`` was needed
Violation = collections.namedtuple(
    'Violation', ['u', 'v', 'd', 'required', 'actual'])


class PreconditionReport(Model):
    '''Whether the reduction's preconditions hold for a graph and p

    >>> PreconditionReport(True, False, 2, 2)
    <PreconditionReport diameter=2 k=2 diameter_ok=True ratio_ok=False>
    '''

    def __init__(self, diameter_ok, ratio_ok, diameter, k):
        self.diameter_ok = diameter_ok
        self.ratio_ok = ratio_ok
        self.diameter = diameter
        self.k = k

    @property
    def ok(self):
        return self.diameter_ok and self.ratio_ok

    @property
    def data(self):
        return dict(diameter_ok=self.diameter_ok, ratio_ok=self.ratio_ok,
                    diameter=self.diameter, k=self.k)

    def __eq__(self, other):
        return isinstance(other, PreconditionReport) and \
            self.data == other.data

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<%s diameter=%s k=%d diameter_ok=%s ratio_ok=%s>' % (
            self.__class__.__name__, self.diameter, self.k,
            self.diameter_ok, self.ratio_ok)


class SolveReport(Model):
    '''Result of the solve pipeline

    Args:
        labeling (Labeling): The labeling found
        path (HamiltonianPath): The path the labeling was read from, if any
        method (str): Solver method name
        wall_time (float): Seconds spent in the pipeline
        metric (bool): Whether the reduced instance satisfied the triangle
                       inequality
        guaranteed_optimal (bool): Whether the span is provably minimum
    '''

    def __init__(self, labeling, path, method, wall_time, metric=True,
                 guaranteed_optimal=False):
        self.labeling = labeling
        self.path = path
        self.method = method
        self.wall_time = wall_time
        self.metric = metric
        self.guaranteed_optimal = guaranteed_optimal

    @property
    def span(self):
        return self.labeling.span

    @property
    def path_length(self):
        if self.path is not None:
            return self.path.length

    @property
    def data(self):
        return dict(
            method=self.method,
            path=list(self.path.order) if self.path is not None else None,
            path_length=self.path_length,
            wall_time=self.wall_time,
            metric=self.metric,
            guaranteed_optimal=self.guaranteed_optimal,
        )

    def __repr__(self):
        return '<%s %s span=%d in %.3fs>' % (
            self.__class__.__name__, self.method, self.span, self.wall_time)


class PathCover(Model):
    '''Vertex disjoint paths covering every vertex

    >>> cover = PathCover([[0, 1, 2], [3]])
    >>> cover.s, cover.paths
    (2, ((0, 1, 2), (3,)))
    '''

    def __init__(self, paths):
        self.paths = tuple(tuple(path) for path in paths)

    @property
    def s(self):
        return len(self.paths)

    @property
    def data(self):
        return dict(s=self.s, paths=[list(path) for path in self.paths])

    def __repr__(self):
        return '<%s s=%d %s>' % (self.__class__.__name__, self.s, self.paths)


class TwinPartition(Model):
    '''Partition of the vertices into twin classes

    >>> TwinPartition([[0], [1, 2, 3]]).nd
    2
    '''

    def __init__(self, classes):
        self.classes = tuple(tuple(sorted(c)) for c in classes)

    @property
    def nd(self):
        return len(self.classes)

    @property
    def data(self):
        return dict(nd=self.nd, classes=[list(c) for c in self.classes])

    def __repr__(self):
        return '<%s nd=%d %s>' % (
            self.__class__.__name__, self.nd, self.classes)
