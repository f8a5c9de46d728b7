import json

import numpy as np

from . import exceptions
from . import models


class JSONEncoder(json.JSONEncoder):
    '''
    Encoder for the library's models and the numpy values inside them

    >>> json.dumps(models.Labeling([0, 2], method='exact'), cls=JSONEncoder,
    ...            sort_keys=True)
    '{"labels": {"0": 0, "1": 2}, "method": "exact", "span": 2}'
    '''

    def default(self, value):
        if isinstance(value, np.integer):
            return int(value)

        elif isinstance(value, np.floating):
            return float(value)

        elif isinstance(value, np.ndarray):
            return value.tolist()

        elif isinstance(value, (tuple, frozenset, set)):
            return list(value)

        # If an object has a `data` attribute, return that instead of the
        # `__dict__` to prevent loops
        elif hasattr(value, 'data'):
            return value.data

        else:  # pragma: no cover
            return json.JSONEncoder.default(self, value)


def dumps(value, **kwargs):
    kwargs.setdefault('cls', JSONEncoder)
    return json.dumps(value, **kwargs)


def load_labeling(src):
    '''
    Read a labeling written by :py:func:`dumps`, or a bare vertex -> label map

    :param src: file handler to read or the JSON document as string

    >>> load_labeling('{"labels": {"0": 0, "1": 2}, "span": 2}').labels
    {0: 0, 1: 2}
    >>> load_labeling('[0, 2')
    Traceback (most recent call last):
    ...
    ParseError: invalid labeling JSON: ...
    '''
    if hasattr(src, 'read'):
        src = src.read()

    try:
        data = json.loads(src)
    except ValueError as exception:
        raise exceptions.ParseError('invalid labeling JSON: %s' % exception)

    try:
        if isinstance(data, list):
            return models.Labeling(data)
        return models.Labeling.from_dict(data)
    except (AttributeError, TypeError, ValueError) as exception:
        raise exceptions.ParseError('invalid labeling: %s' % exception)
