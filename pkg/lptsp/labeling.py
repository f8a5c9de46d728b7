'''
What an L(p)-labeling is, two exact oracles, and the solve pipeline.

A labeling ``l`` is an L(p)-labeling when every two vertices at distance
``d <= k`` have ``|l(u) - l(v)| >= p_d``. The oracles here compute the
minimum span without going through the TSP reduction, so they also work
when the reduction's preconditions fail and can cross check it.

>>> from lptsp import parser
>>> p3 = parser.parse_graph('3 2\\n0 1\\n1 2')
>>> p = models.PVector([2, 1])
>>> solve(p3, p).labeling.labels
{0: 0, 1: 3, 2: 1}
>>> oracle_span_permutations(p3, p).span
3
>>> oracle_span_branch_bound(p3, p, upper=4).span
3
>>> verify_labeling(p3, p, models.Labeling([0, 1, 3]))
[Violation(u=0, v=1, d=1, required=2, actual=1)]
'''
import enum
import logging
import math

from . import exceptions
from . import graphs
from . import models
from . import power
from . import processors
from . import reduction
from . import tsp
from . import utils

logger = logging.getLogger(__name__)

#: Largest graph :py:func:`oracle_span_permutations` accepts
PERMUTATION_ORACLE_MAX_N = 10


def verify_labeling(graph, pvector, labeling, distances=None):
    '''Every pair whose labels are closer than required

    Args:
        graph (Graph): The graph
        pvector (PVector): Separation requirements
        labeling: A :py:class:`~lptsp.models.Labeling` or a vertex -> label
                  mapping
        distances (DistanceMatrix): Precomputed distances, optional

    Returns: :py:class:`list` of :py:class:`~lptsp.models.Violation`, empty
    when the labeling is valid

    Raises:
        MissingLabel: Some vertex has no label

    >>> p3 = models.Graph.from_edges(3, [(0, 1), (1, 2)])
    >>> verify_labeling(p3, models.PVector([2, 1]), {0: 0, 1: 2, 2: 4})
    []
    >>> verify_labeling(p3, models.PVector([2, 1]), {0: 0, 1: 2})
    Traceback (most recent call last):
    ...
    MissingLabel: no label for vertices 2
    '''
    if isinstance(labeling, models.Labeling):
        labels = labeling.labels
    else:
        labels = models.Labeling(labeling).labels

    missing = set(range(graph.n)) - set(labels)
    if missing:
        raise exceptions.MissingLabel(missing)

    if distances is None:
        distances = graphs.all_pairs_distances(graph)
    separation = reduction.separation_matrix(distances, pvector).tolist()

    violations = []
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            required = separation[u][v]
            gap = abs(labels[u] - labels[v])
            if gap < required:
                violations.append(models.Violation(
                    u, v, distances[u, v], required, gap))

    return violations


def oracle_span_permutations(graph, pvector, max_n=None, distances=None):
    '''Minimum span over all vertex orders, each labeled greedily

    Every labeling, sorted by label, gives an order whose greedy labeling is
    no worse, so this is exact for any graph and vector. Orders are explored
    depth first in lexicographic order; a prefix whose last label already
    reaches the best span is cut off since labels only grow along an order.
    The first optimal order found is kept.

    Raises:
        InstanceTooLarge: ``n`` above :py:data:`PERMUTATION_ORACLE_MAX_N`

    >>> k3 = models.Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    >>> oracle_span_permutations(k3, models.PVector([2, 1])).span
    4
    '''
    max_n = utils.coalesce(max_n, PERMUTATION_ORACLE_MAX_N)
    n = graph.n
    if n > max_n:
        raise exceptions.InstanceTooLarge(n, max_n)
    if distances is None:
        distances = graphs.all_pairs_distances(graph)

    separation = reduction.separation_matrix(distances, pvector).tolist()
    order = []
    labels = [0] * n
    placed = [False] * n
    best = [math.inf, None]

    def extend():
        if len(order) == n:
            best[:] = labels[order[-1]] if order else 0, list(labels)
            return

        for v in range(n):
            if placed[v]:
                continue
            row = separation[v]
            label = max([labels[u] + row[u] for u in order] or [0])
            if label >= best[0]:
                continue

            labels[v] = label
            placed[v] = True
            order.append(v)
            extend()
            order.pop()
            placed[v] = False

    extend()
    return models.Labeling(best[1], method='oracle-permutations')


def oracle_span_branch_bound(graph, pvector, upper=None, distances=None):
    '''Minimum span by depth first search over label assignments

    For every candidate span from a trivial lower bound up to ``upper``
    labels ``0..span`` are tried for the vertices in order of descending
    degree, pruning any label that conflicts with the vertices already
    labeled. The first vertex only gets labels up to ``span // 2`` since
    ``span - l`` mirrors every labeling. Once the minimum span is known one
    more search at that span walks the vertices by id without the mirror
    cap, so the labeling returned is the lexicographically smallest optimal
    one.

    Args:
        upper (int): A span known to be achievable, the greedy labeling of
                     the identity order when ``None``

    Raises:
        NoLabelingFound: ``upper`` was below the optimum

    >>> c4 = models.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    >>> oracle_span_branch_bound(c4, models.PVector([2, 1]), upper=6).labels
    {0: 0, 1: 3, 2: 1, 3: 4}
    '''
    n = graph.n
    if distances is None:
        distances = graphs.all_pairs_distances(graph)
    separation = reduction.separation_matrix(distances, pvector)

    if upper is None:
        upper = reduction.greedy_label_for_order(
            graph, pvector, range(n), distances).span
    lower = int(separation.max()) if n > 1 else 0

    separation = separation.tolist()
    labels = [None] * n

    def place(order, index, span, mirror):
        if index == n:
            return True

        v = order[index]
        row = separation[v]
        highest = span // 2 if mirror and index == 0 else span
        for label in range(highest + 1):
            for u in order[:index]:
                if abs(label - labels[u]) < row[u]:
                    break
            else:
                labels[v] = label
                if place(order, index + 1, span, mirror):
                    return True

        labels[v] = None
        return False

    by_degree = sorted(range(n), key=lambda v: (-graph.degree(v), v))
    for span in range(lower, upper + 1):
        if place(by_degree, 0, span, True):
            logger.debug('branch and bound: span %d feasible', span)
            place(list(range(n)), 0, span, False)
            return models.Labeling(labels, method='oracle-branch-bound')
        logger.debug('branch and bound: span %d infeasible', span)

    raise exceptions.NoLabelingFound(
        'no labeling with span at most %d' % upper)


def pmax_approx_labeling(graph, pvector, max_n=None, distances=None):
    '''L(p)-labeling from an optimal L(1, ..., 1)-labeling scaled by p_max

    Vertices within distance ``k`` get distinct colors in the coloring of
    ``G^k``, so scaled by ``p_max`` they are at least ``p_max >= p_d``
    apart. The span is ``p_max * lambda_1(G)``, at most ``p_max`` times the
    optimum.

    >>> k3 = models.Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    >>> pmax_approx_labeling(k3, models.PVector([2, 1])).span
    4
    '''
    base = power.l1_labeling_via_coloring(
        graph, pvector.k, max_n=max_n, distances=distances)
    return base.scaled(pvector.p_max, method='pmax')


@enum.unique
class Method(enum.Enum):
    EXACT = 'exact'
    APPROX = 'approx'
    HEURISTIC = 'heuristic'
    PMAX = 'pmax'


#: Path solver per method, :py:attr:`Method.PMAX` bypasses the reduction
SOLVERS = {
    Method.EXACT: tsp.held_karp_path,
    Method.APPROX: tsp.christofides_path,
    Method.HEURISTIC: tsp.heuristic_path,
}


class Solver(object):
    '''
    Runs the pipeline: reduce, route, read the labels off the path

    Args:
        method (Method): One of :py:class:`Method` or its value
        processors (dict): Processor lists per stage, merged into
                           :py:attr:`DEFAULT_PROCESSORS`
        force (bool): Solve even when ``p_max > 2 * p_min``
        **options: Passed on to the path solver (``max_n`` for exact,
                   ``dp_max`` for approx, ``budget`` for heuristic)
    '''

    #: Using the processors you can adjust the inputs and outputs of every
    #: pipeline stage, see :py:mod:`lptsp.processors`
    DEFAULT_PROCESSORS = dict(
        pre_pvector=[],
        post_instance=[],
        post_path=[],
        post_labeling=[processors.normalize_labeling_post_processor],
    )

    def __init__(self, method=Method.EXACT, processors=None, force=False,
                 **options):
        self.method = Method(method)
        self.processors = self.DEFAULT_PROCESSORS.copy()
        if processors:
            self.processors.update(processors)
        self.force = force
        self.options = options
        self.logger = logger.getChild(self.__class__.__name__)

        self.graph = None
        self.distances = None
        self.pvector = None
        self.instance = None

    def process(self, stage, value):
        for processor in self.processors.get(stage, []):
            value = processor(self, stage, value)
        return value

    def solve(self, graph, pvector):
        '''Solve and return a :py:class:`~lptsp.models.SolveReport`

        Raises:
            Disconnected, DiameterExceedsK: From the reduction
            RatioViolated: ``p_max > 2 * p_min`` without ``force``
            InstanceTooLarge, NonMetricInstance: From the path solvers
        '''
        with utils.Timer() as timer:
            self.graph = graph
            self.distances = graphs.all_pairs_distances(graph)
            self.pvector = self.process('pre_pvector', pvector)

            if self.method is Method.PMAX:
                path = None
                metric = None
                labeling = pmax_approx_labeling(
                    graph, self.pvector, distances=self.distances,
                    **self.options)
            else:
                path, metric, labeling = self._route()

            labeling = self.process('post_labeling', labeling)

        report = models.SolveReport(
            labeling, path, self.method.value, timer.elapsed, metric=metric,
            guaranteed_optimal=bool(metric) and self.method is Method.EXACT)
        self.logger.info('%r', report)
        return report

    def _route(self):
        if not self.pvector.ratio_ok:
            if not self.force:
                raise exceptions.RatioViolated(
                    self.pvector.p_max, self.pvector.p_min)
            self.logger.warning(
                'forced run with p=%s, approximation guarantees are void',
                self.pvector)

        instance = reduction.build_instance(
            self.graph, self.pvector, self.distances)
        self.instance = self.process('post_instance', instance)

        path = SOLVERS[self.method](self.instance, **self.options)
        path = self.process('post_path', path)
        self.logger.debug('%s path %r', self.method.value, path)

        # Prefix sums are a valid labeling exactly when the path's detours
        # are never shorter than the direct weight, i.e. on metric instances
        metric = self.instance.is_metric()
        if metric:
            labels = reduction.label_from_path(self.instance, path)
        else:
            self.logger.warning(
                'instance is not metric, labeling the order greedily')
            labels = reduction.greedy_label_for_order(
                self.graph, self.pvector, path.order, self.distances)

        return path, metric, models.Labeling(
            labels.labels, method=self.method.value)


def solve(graph, pvector, method=Method.EXACT, force=False, processors=None,
          **options):
    '''
    Solve L(p)-labeling through the path TSP reduction

    :param graph: the graph
    :param pvector: the separation requirements
    :param method: exact, approx, heuristic or pmax
    :return: The labeling with the path and timing it came from
    :rtype: lptsp.models.SolveReport

    >>> c4 = models.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    >>> solve(c4, models.PVector([2, 2])).span
    6
    '''
    return Solver(method, processors, force, **options).solve(graph, pvector)
