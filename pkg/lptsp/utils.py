import time


def coalesce(*args):
    '''
    Return the first non-None argument

    >>> coalesce()

    >>> coalesce(0, 24)
    0
    >>> coalesce(None, 24)
    24
    '''

    for arg in args:
        if arg is not None:
            return arg


class Timer(object):
    '''Wall clock stopwatch usable as a context manager

    >>> with Timer() as timer:
    ...     pass
    >>> timer.elapsed >= 0
    True
    '''

    def __init__(self):
        self.start = None
        self.elapsed = 0.0

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc_info):
        self.elapsed = time.perf_counter() - self.start
