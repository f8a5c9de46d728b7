from .json import JSONEncoder
from . import exceptions
from . import generators
from . import graphs
from . import labeling
from . import models
from . import parser
from . import pathcover
from . import power
from . import processors
from . import reduction
from . import tsp
from . import tsplib
from . import utils

parse_graph = parser.parse_graph
solve = labeling.solve

__all__ = [
    'JSONEncoder',
    'exceptions',
    'generators',
    'graphs',
    'labeling',
    'models',
    'parser',
    'pathcover',
    'power',
    'processors',
    'reduction',
    'tsp',
    'tsplib',
    'utils',
    'parse_graph',
    'solve',
    'json',
]
