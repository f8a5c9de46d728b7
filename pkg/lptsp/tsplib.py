'''
TSPLIB import and export for external TSP solvers.

External solvers search cycles while the reduction asks for a path with free
endpoints. The exported instance therefore gets one extra dummy city, number
``n + 1``, at weight 0 to every other city: an optimal cycle through the dummy
minus the dummy is an optimal path. The zero weights break the triangle
inequality, exact solvers do not mind.

Format
---------------------

::

    NAME: <name>
    TYPE: TSP
    COMMENT: L(p)-labeling reduction, dummy city <n+1>
    DIMENSION: <n+1>
    EDGE_WEIGHT_TYPE: EXPLICIT
    EDGE_WEIGHT_FORMAT: FULL_MATRIX
    EDGE_WEIGHT_SECTION
    <n+1 rows of n+1 integers>
    EOF

Tours are read from a ``TOUR_SECTION`` listing 1-based cities, optionally
terminated by ``-1``.

>>> inst = models.MetricInstance([[0, 2, 1], [2, 0, 2], [1, 2, 0]])
>>> print(export_tsplib(inst, 'p3'), end='')
NAME: p3
TYPE: TSP
COMMENT: L(p)-labeling reduction, dummy city 4
DIMENSION: 4
EDGE_WEIGHT_TYPE: EXPLICIT
EDGE_WEIGHT_FORMAT: FULL_MATRIX
EDGE_WEIGHT_SECTION
0 2 1 0
2 0 2 0
1 2 0 0
0 0 0 0
EOF
>>> import_tour('TOUR_SECTION\\n4\\n2\\n1\\n3\\n-1\\nEOF\\n', 3, inst)
<HamiltonianPath (1, 0, 2) length=3>
'''
import logging

import numpy as np

from . import exceptions
from . import models
from . import parser

logger = logging.getLogger(__name__)


def export_tsplib(instance, name):
    '''Write ``instance`` plus the dummy city as a TSPLIB document

    >>> print(export_tsplib(models.MetricInstance([[0]]), 'k1'), end='')
    NAME: k1
    TYPE: TSP
    COMMENT: L(p)-labeling reduction, dummy city 2
    DIMENSION: 2
    EDGE_WEIGHT_TYPE: EXPLICIT
    EDGE_WEIGHT_FORMAT: FULL_MATRIX
    EDGE_WEIGHT_SECTION
    0 0
    0 0
    EOF
    '''
    n = instance.n
    if n < 1:
        raise ValueError('cannot export an empty instance')

    weights = np.zeros((n + 1, n + 1), dtype=np.int64)
    weights[:n, :n] = instance.w

    lines = [
        'NAME: %s' % name,
        'TYPE: TSP',
        'COMMENT: L(p)-labeling reduction, dummy city %d' % (n + 1),
        'DIMENSION: %d' % (n + 1),
        'EDGE_WEIGHT_TYPE: EXPLICIT',
        'EDGE_WEIGHT_FORMAT: FULL_MATRIX',
        'EDGE_WEIGHT_SECTION',
    ]
    lines.extend(' '.join(str(w) for w in row) for row in weights.tolist())
    lines.append('EOF')
    return '\n'.join(lines) + '\n'


def _lines(text):
    text = parser.decode(text)
    for number, line in enumerate(text.split('\n'), 1):
        line = line.strip()
        if line:
            yield number, line


def _integer(number, token):
    try:
        return int(token, 10)
    except ValueError:
        logger.error('line %d: %r is not an integer', number, token)
        raise exceptions.ParseError(
            'expected an integer, got %r' % token, line=number)


def load_tsplib(text):
    '''Read an exported document back, without the dummy city

    Only explicit full matrices are supported.

    >>> inst = models.MetricInstance([[0, 2, 1], [2, 0, 2], [1, 2, 0]])
    >>> load_tsplib(export_tsplib(inst, 'p3')).w.tolist()
    [[0, 2, 1], [2, 0, 2], [1, 2, 0]]
    >>> load_tsplib('NAME: x\\nEDGE_WEIGHT_TYPE: EUC_2D\\n')
    Traceback (most recent call last):
    ...
    ParseError: line 2: unsupported EDGE_WEIGHT_TYPE 'EUC_2D'
    '''
    header = {}
    values = []
    number = 0
    in_weights = False
    for number, line in _lines(text):
        if line == 'EOF':
            break
        elif in_weights:
            values.extend(_integer(number, token) for token in line.split())
        elif line.startswith('EDGE_WEIGHT_SECTION'):
            in_weights = True
        elif ':' in line:
            key, value = (part.strip() for part in line.split(':', 1))
            header[key.upper()] = value
            if key.upper() == 'EDGE_WEIGHT_TYPE' and value != 'EXPLICIT' or \
                    key.upper() == 'EDGE_WEIGHT_FORMAT' and \
                    value != 'FULL_MATRIX':
                raise exceptions.ParseError(
                    'unsupported %s %r' % (key.upper(), value), line=number)
        else:
            raise exceptions.ParseError(
                'unexpected line %r' % line, line=number)

    if 'DIMENSION' not in header:
        raise exceptions.ParseError('missing DIMENSION')
    dimension = _integer(number, header['DIMENSION'])
    if dimension < 2:
        raise exceptions.ParseError(
            'DIMENSION must be at least 2, got %d' % dimension)
    if len(values) != dimension * dimension:
        raise exceptions.ParseError('expected %d weights, got %d' % (
            dimension * dimension, len(values)))

    weights = np.array(values, dtype=np.int64).reshape(dimension, dimension)
    if weights[-1].any() or weights[:, -1].any():
        raise exceptions.ParseError(
            'city %d is not a zero weight dummy' % dimension)

    try:
        return models.MetricInstance(weights[:-1, :-1])
    except ValueError as exception:
        raise exceptions.ParseError(str(exception))


def import_tour(text, n, instance=None):
    '''Path over the ``n`` original cities from a tour through the dummy

    The tour is rotated to start right after the dummy city, which is then
    dropped, and the cities are shifted to 0-based ids.

    Args:
        text (str): Document with a ``TOUR_SECTION``
        n (int): Number of original cities
        instance (MetricInstance): When given the path length is computed

    Raises:
        ParseError: No ``TOUR_SECTION`` or a non integer city
        BadTour: The cities are not a permutation of ``1..n+1``

    >>> import_tour('TOUR_SECTION\\n1 2 -1\\n', 1)
    <HamiltonianPath (0,) length=None>
    >>> import_tour('TOUR_SECTION\\n1 2 2 -1\\n', 2)
    Traceback (most recent call last):
    ...
    BadTour: ...
    '''
    cities = []
    in_tour = False
    for number, line in _lines(text):
        if line.startswith('TOUR_SECTION'):
            in_tour = True
            line = line[len('TOUR_SECTION'):]
        elif not in_tour:
            continue

        tokens = line.split()
        if 'EOF' in tokens:
            tokens = tokens[:tokens.index('EOF')]
            in_tour = False
        if '-1' in tokens:
            tokens = tokens[:tokens.index('-1')]
            in_tour = False

        cities.extend(_integer(number, token) for token in tokens)
        if not in_tour:
            break
    else:
        if not in_tour:
            raise exceptions.ParseError('missing TOUR_SECTION')

    if sorted(cities) != list(range(1, n + 2)):
        raise exceptions.BadTour(
            'tour %r is not a permutation of 1..%d' % (cities, n + 1))

    dummy = cities.index(n + 1)
    order = [city - 1 for city in cities[dummy + 1:] + cities[:dummy]]

    if instance is not None:
        return models.HamiltonianPath.from_order(instance, order)
    return models.HamiltonianPath(order)
