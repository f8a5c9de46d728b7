# vim: fileencoding=utf-8:
'''

Format
---------------------

Graphs are read from a plain edge list:

::

    # comment lines and blank lines are ignored
    n m
    u v
    ...

The first line holds the vertex count ``n`` and the number of edge lines
``m`` that follow. Vertex ids are dense integers ``0..n-1``. Duplicate edges
are dropped silently, self-loops and out of range ids are an error.
'''

import logging
import os

from . import exceptions
from . import models

logger = logging.getLogger(__name__)


def _read(src):
    def safe_is_file(filename):
        try:
            return os.path.isfile(filename)
        except (TypeError, ValueError):  # pragma: no cover
            return False

    if hasattr(src, 'read'):
        data = src.read()
    elif safe_is_file(src):
        with open(src, 'rb') as fh:
            data = fh.read()
    else:
        data = src

    return decode(data)


def decode(data):
    '''Text from ``data``, decoding bytes as UTF-8

    >>> decode(b'3 2\\n0 1\\xff')
    Traceback (most recent call last):
    ...
    ParseError: invalid UTF-8 at byte 7
    '''
    if not hasattr(data, 'decode'):
        return data

    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as exception:
        logger.error('undecodable input: %s', exception)
        raise exceptions.ParseError(
            'invalid UTF-8 at byte %d' % exception.start)


def _significant_lines(data):
    for number, line in enumerate(data.split('\n'), 1):
        line = line.replace('\r', '').strip()
        if line and not line.startswith('#'):
            yield number, line


def _integers(number, line, count):
    parts = line.split()
    if len(parts) != count:
        logger.error('line %d: %r has %d fields', number, line, len(parts))
        raise exceptions.ParseError(
            'expected %d integers, got %r' % (count, line), line=number)

    try:
        return [int(part, 10) for part in parts]
    except ValueError:
        logger.error('line %d: %r is not numeric', number, line)
        raise exceptions.ParseError(
            'expected %d integers, got %r' % (count, line), line=number)


def parse_graph(src):
    '''
    Parses an edge list and returns the graph

    :param src: file handler to read, filename to read or raw data as string
    :return: The graph
    :rtype: lptsp.models.Graph

    >>> parse_graph('3 2\\n0 1\\n1 2')
    <Graph n=3 m=2>
    >>> parse_graph('# duplicate edges are dropped\\n3 2\\n0 1\\n1 0').m
    1
    >>> parse_graph('2 1\\n0 2')
    Traceback (most recent call last):
    ...
    ParseError: line 2: vertex 2 out of range [0, 2)
    '''
    lines = _significant_lines(_read(src))

    try:
        number, header = next(lines)
    except StopIteration:
        raise exceptions.ParseError('empty graph document')

    n, m = _integers(number, header, 2)
    if n <= 0:
        raise exceptions.ParseError(
            'vertex count must be positive, got %d' % n, line=number)
    if m < 0:
        raise exceptions.ParseError(
            'edge count must not be negative, got %d' % m, line=number)

    edges = []
    for number, line in lines:
        if len(edges) == m:
            raise exceptions.ParseError(
                'more than the %d announced edges' % m, line=number)

        u, v = _integers(number, line, 2)
        for x in (u, v):
            if not 0 <= x < n:
                raise exceptions.ParseError(
                    'vertex %d out of range [0, %d)' % (x, n), line=number)
        if u == v:
            raise exceptions.ParseError(
                'self-loop on vertex %d' % u, line=number)

        edges.append((u, v))

    if len(edges) != m:
        raise exceptions.ParseError(
            'expected %d edges, got %d' % (m, len(edges)))

    graph = models.Graph.from_edges(n, edges)
    logger.debug('parsed %r from %d edge lines', graph, m)
    return graph


def format_graph(graph):
    '''Write ``graph`` in the edge list format

    >>> print(format_graph(parse_graph('3 2\\n1 2\\n0 1')), end='')
    3 2
    0 1
    1 2
    '''
    lines = ['%d %d' % (graph.n, graph.m)]
    lines.extend('%d %d' % edge for edge in graph.edges())
    return '\n'.join(lines) + '\n'
