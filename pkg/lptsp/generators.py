'''
Graph families for experiments and the ``gen`` command.

Random models draw from :py:func:`numpy.random.default_rng` so a seed fully
determines the graph.

>>> generate('cycle', 4)
<Graph n=4 m=4>
>>> random_connected(6, 0.5, max_diameter=2, seed=1) == random_connected(
...     6, 0.5, max_diameter=2, seed=1)
True
'''
import logging

import numpy as np

from . import exceptions
from . import graphs
from . import models
from . import pathcover
from . import utils

logger = logging.getLogger(__name__)

#: Attempts :py:func:`random_connected` makes before giving up
MAX_TRIES = 1000


def _random_edges(n, edge_prob, rng):
    coins = np.triu(rng.random((n, n)) < edge_prob, 1)
    return [tuple(edge) for edge in np.argwhere(coins).tolist()]


def random_connected(n, edge_prob=0.5, max_diameter=None, seed=None,
                     max_tries=None):
    '''Connected ``G(n, edge_prob)`` graph by rejection sampling

    Args:
        n (int): Number of vertices
        edge_prob (float): Probability of each edge
        max_diameter (int): Reject graphs with a larger diameter
        seed: Anything :py:func:`numpy.random.default_rng` accepts
        max_tries (int): Override for :py:data:`MAX_TRIES`

    Raises:
        GenerationFailed: No sample was accepted within ``max_tries``

    >>> random_connected(5, 0.0, max_tries=3)
    Traceback (most recent call last):
    ...
    GenerationFailed: no connected graph with n=5 p=0.0 in 3 tries
    '''
    if n < 1:
        raise exceptions.InvalidModelArguments(
            'n must be at least 1, got %r' % n)

    rng = np.random.default_rng(seed)
    max_tries = utils.coalesce(max_tries, MAX_TRIES)
    for attempt in range(max_tries):
        graph = models.Graph.from_edges(n, _random_edges(n, edge_prob, rng))
        diameter = graphs.diameter(graph)
        if max_diameter is None and diameter < float('inf') or \
                max_diameter is not None and diameter <= max_diameter:
            logger.debug('accepted %r after %d tries', graph, attempt + 1)
            return graph

    if max_diameter is None:
        raise exceptions.GenerationFailed(
            'no connected graph with n=%d p=%s in %d tries' % (
                n, edge_prob, max_tries))
    raise exceptions.GenerationFailed(
        'no connected graph with n=%d p=%s and diameter <= %d in %d tries' % (
            n, edge_prob, max_diameter, max_tries))


def star(n):
    '''``K_{1, n-1}`` with center 0

    >>> star(4).adjacency
    ((1, 2, 3), (0,), (0,), (0,))
    '''
    return models.Graph.from_edges(n, [(0, v) for v in range(1, n)])


def path(n):
    return models.Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n):
    '''``C_n``, needs ``n >= 3``'''
    if n < 3:
        raise exceptions.InvalidModelArguments(
            'a cycle needs at least 3 vertices, got %d' % n)
    return models.Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def complete(n):
    return models.Graph.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def split(n, clique_size=None, edge_prob=0.5, seed=None):
    '''Clique on ``0..c-1`` plus an independent set attached to it

    Every independent vertex gets at least one random clique neighbour, so
    the graph is connected with diameter at most 3.

    >>> g = split(6, clique_size=3, seed=7)
    >>> all(g.has_edge(u, v) for u in range(3) for v in range(u + 1, 3))
    True
    >>> any(g.has_edge(u, v) for u in range(3, 6) for v in range(u + 1, 6))
    False
    '''
    clique_size = utils.coalesce(clique_size, (n + 1) // 2)
    if not 1 <= clique_size <= n:
        raise exceptions.InvalidModelArguments(
            'clique size %r out of range [1, %d]' % (clique_size, n))

    rng = np.random.default_rng(seed)
    edges = [(u, v) for u in range(clique_size)
             for v in range(u + 1, clique_size)]
    for v in range(clique_size, n):
        coins = rng.random(clique_size) < edge_prob
        coins[rng.integers(clique_size)] = True
        edges.extend((int(u), v) for u in np.flatnonzero(coins))

    return models.Graph.from_edges(n, edges)


def apex(n, edge_prob=0.5, seed=None):
    '''Apex complement of a random graph on ``n - 1`` vertices

    See :py:func:`lptsp.pathcover.apex_complement`.
    '''
    if n < 2:
        raise exceptions.InvalidModelArguments(
            'an apex graph needs at least 2 vertices, got %d' % n)

    rng = np.random.default_rng(seed)
    base = models.Graph.from_edges(
        n - 1, _random_edges(n - 1, edge_prob, rng))
    return pathcover.apex_complement(base)


def generate(model, n, seed=None, edge_prob=0.5, max_diameter=None,
             clique_size=None):
    '''Dispatch to the generator called ``model``

    Options a model does not use are ignored.
    '''
    if model == 'random':
        return random_connected(n, edge_prob, max_diameter, seed)
    elif model == 'split':
        return split(n, clique_size, edge_prob, seed)
    elif model == 'apex':
        return apex(n, edge_prob, seed)
    elif model in MODELS:
        return MODELS[model](n)
    else:
        raise exceptions.InvalidModelArguments('unknown model %r' % model)


#: Deterministic models by name
MODELS = dict(
    star=star,
    cycle=cycle,
    path=path,
    complete=complete,
)

#: Every name :py:func:`generate` accepts
MODEL_NAMES = ('random', 'star', 'cycle', 'path', 'complete', 'split', 'apex')
