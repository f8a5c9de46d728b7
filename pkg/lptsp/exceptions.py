'''
Exceptions raised by the library.

Everything derives from :py:class:`LabelingError`. Problems with the input
itself (files, vectors, labels) are an :py:class:`InputError`, an instance
that is well formed but outside the reach of a route is a
:py:class:`PreconditionError`. The command line maps the two families to
different exit codes.

>>> str(ParseError('expected two integers', line=3))
'line 3: expected two integers'
>>> str(DiameterExceedsK(3, 2))
'diameter 3 exceeds k=2'
>>> issubclass(ZeroSeparation, InputError)
True
'''


class LabelingError(Exception):
    pass


class InvalidLabeling(LabelingError):
    '''a computed labeling broke a separation constraint'''

    def __init__(self, violations):
        self.violations = list(violations)
        super(InvalidLabeling, self).__init__(self.violations)

    def __str__(self):
        return 'invalid labeling, %d violations, first %r' % (
            len(self.violations), self.violations[0])


class InputError(LabelingError):
    pass


class PreconditionError(LabelingError):
    pass


class ParseError(InputError):

    def __init__(self, message, line=None):
        self.message = message
        self.line = line
        super(ParseError, self).__init__(message, line)

    def __str__(self):
        if self.line is None:
            return self.message
        return 'line %d: %s' % (self.line, self.message)


class BadTour(InputError):
    pass


class InvalidPVector(InputError):
    pass


class ZeroSeparation(InvalidPVector):
    '''p contains a zero; every separation must be at least 1'''


class MissingLabel(InputError):

    def __init__(self, vertices):
        self.vertices = sorted(vertices)
        super(MissingLabel, self).__init__(self.vertices)

    def __str__(self):
        return 'no label for vertices %s' % ', '.join(
            str(v) for v in self.vertices)


class Disconnected(PreconditionError):

    def __str__(self):
        return 'graph is disconnected'


class DiameterExceedsK(PreconditionError):

    def __init__(self, diameter, k):
        self.diameter = diameter
        self.k = k
        super(DiameterExceedsK, self).__init__(diameter, k)

    def __str__(self):
        return 'diameter %s exceeds k=%d' % (self.diameter, self.k)


class RatioViolated(PreconditionError):

    def __init__(self, p_max, p_min):
        self.p_max = p_max
        self.p_min = p_min
        super(RatioViolated, self).__init__(p_max, p_min)

    def __str__(self):
        return 'p_max=%d exceeds 2*p_min=%d' % (self.p_max, 2 * self.p_min)


class NonMetricInstance(PreconditionError):

    def __init__(self, u, x, v):
        self.triple = u, x, v
        super(NonMetricInstance, self).__init__(u, x, v)

    def __str__(self):
        return 'triangle inequality fails for w(%d,%d) > w(%d,%d) + ' \
            'w(%d,%d)' % (self.triple[0], self.triple[2], self.triple[0],
                          self.triple[1], self.triple[1], self.triple[2])


class InstanceTooLarge(PreconditionError):

    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super(InstanceTooLarge, self).__init__(n, cap)

    def __str__(self):
        return 'n=%d is above the cap of %d' % (self.n, self.cap)


class GenerationFailed(PreconditionError):
    pass


class InvalidModelArguments(InputError, ValueError):
    '''a graph model was asked for a size it cannot produce'''


class NoLabelingFound(PreconditionError):
    pass
