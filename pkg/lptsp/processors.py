'''
Hooks for the :py:class:`lptsp.labeling.Solver` pipeline.

A processor is called as ``processor(solver, stage, value)`` and returns the
(possibly replaced) value. The stages are ``pre_pvector`` (the separation
vector before the preconditions are checked), ``post_instance`` (the reduced
instance), ``post_path`` (the path found by the solver) and
``post_labeling`` (the final labeling). The solver exposes ``graph``,
``distances``, ``pvector`` and ``instance`` for the processors to use.
'''
import logging

from . import exceptions
from . import graphs
from . import reduction
from . import tsp

logger = logging.getLogger(__name__)


def pad_pvector_pre_processor(solver, stage, pvector):
    '''
    Pad p with ``p_min`` entries until it covers the graph's diameter.

    Vertices further apart than the original ``k`` get a ``p_min`` gap. The
    labeling stays valid for the original vector but is no longer guaranteed
    optimal for it.
    '''
    return reduction.pad_pvector(pvector, graphs.diameter(solver.distances))


def two_opt_post_processor(budget=None):
    '''Polish the solver's path with 2-opt and Or-opt moves

    Args:
        budget (int): Maximum number of improving moves
    '''
    def _two_opt_post_processor(solver, stage, path):
        improved = tsp.two_opt_improve(solver.instance, path, budget)
        if improved.length < path.length:
            logger.info('local search shortened the path from %d to %d',
                        path.length, improved.length)
        return improved

    return _two_opt_post_processor


def normalize_labeling_post_processor(solver, stage, labeling):
    return labeling.normalized()


def verify_labeling_post_processor(solver, stage, labeling):
    '''Re-check the labeling against the graph, independent of the route'''
    from . import labeling as labeling_

    violations = labeling_.verify_labeling(
        solver.graph, solver.pvector, labeling, solver.distances)
    if violations:
        logger.error('labeling violates %r', violations)
        raise exceptions.InvalidLabeling(violations)
    return labeling
