'''
Command line interface.

Every subcommand parses its inputs, calls one library operation and prints
the result. Input problems exit with 1, unmet preconditions with 2 and a
labeling that fails ``--verify`` with 3, all after an ``error: <message>``
line on stderr.

::

    lptsp solve -g p3.txt -p 2,1 --method exact
    lptsp gen --model cycle -n 4 > c4.txt
    lptsp export -g c4.txt -p 2,1 -o c4.tsp
'''
import argparse
import logging
import sys

from . import __about__
from . import exceptions
from . import generators
from . import graphs
from . import json
from . import labeling
from . import models
from . import parser
from . import pathcover
from . import power
from . import processors
from . import reduction
from . import tsplib

logger = logging.getLogger(__name__)

LOG_LEVELS = {
    0: logging.WARNING,
    1: logging.INFO,
    2: logging.DEBUG,
}


def _print_json(value, output=None):
    print(json.dumps(value, indent=2, sort_keys=True),
          file=output or sys.stdout)


def _graph(args):
    return parser.parse_graph(args.graph)


def _pvector(args):
    return models.PVector.from_string(args.p)


def cmd_solve(args):
    graph = _graph(args)
    pvector = _pvector(args)

    stages = dict(post_labeling=[
        processors.normalize_labeling_post_processor])
    if args.pad:
        stages['pre_pvector'] = [processors.pad_pvector_pre_processor]
    if args.polish:
        stages['post_path'] = [
            processors.two_opt_post_processor(args.budget)]
    if args.verify:
        stages['post_labeling'].append(
            processors.verify_labeling_post_processor)

    options = dict()
    if args.method == labeling.Method.HEURISTIC.value and \
            args.budget is not None:
        options['budget'] = args.budget

    report = labeling.solve(graph, pvector, args.method, force=args.force,
                            processors=stages, **options)

    if args.json:
        data = report.labeling.data
        data['report'] = report.data
        _print_json(data)
    else:
        _print_json(report.labeling)
        print('%s: span %d, path length %s, %s, %.3fs' % (
            report.method, report.span, report.path_length,
            'optimal' if report.guaranteed_optimal else 'not proven optimal',
            report.wall_time), file=sys.stderr)


def cmd_oracle(args):
    graph = _graph(args)
    pvector = _pvector(args)
    if args.method == 'permutations':
        result = labeling.oracle_span_permutations(graph, pvector)
    else:
        result = labeling.oracle_span_branch_bound(
            graph, pvector, upper=args.upper)
    _print_json(result)


def cmd_verify(args):
    graph = _graph(args)
    pvector = _pvector(args)
    labels = json.load_labeling(args.labels)

    violations = labeling.verify_labeling(graph, pvector, labels)
    if not violations:
        print('valid')
        return 0

    print('invalid')
    for violation in violations:
        print('  %d-%d at distance %d: gap %d, need %d' % (
            violation.u, violation.v, violation.d, violation.actual,
            violation.required))
    return 1


def cmd_reduce(args):
    graph = _graph(args)
    pvector = _pvector(args)
    instance = reduction.build_instance(graph, pvector)
    if args.json:
        _print_json(instance)
    else:
        for row in instance.w.tolist():
            print(' '.join(str(w) for w in row))

    if not instance.is_metric():
        logger.warning('instance is not metric, triangle %r fails',
                       instance.triangle_violation())


def cmd_export(args):
    graph = _graph(args)
    pvector = _pvector(args)
    instance = reduction.build_instance(graph, pvector)
    args.output.write(tsplib.export_tsplib(instance, args.name))
    args.output.flush()


def cmd_import(args):
    graph = _graph(args)
    pvector = _pvector(args)
    distances = graphs.all_pairs_distances(graph)
    instance = reduction.build_instance(graph, pvector, distances)
    path = tsplib.import_tour(args.tour.read(), graph.n, instance)

    if instance.is_metric():
        result = reduction.label_from_path(instance, path)
    else:
        result = reduction.greedy_label_for_order(
            graph, pvector, path.order, distances)
    _print_json(models.Labeling(result.labels, method='tsplib'))


def cmd_pathcover(args):
    graph = _graph(args)
    if args.pq is None:
        _print_json(pathcover.min_path_cover(graph))
        return

    pq = models.PVector.from_string(args.pq)
    if pq.k != 2:
        raise exceptions.InvalidPVector(
            '--pq takes exactly two entries, got %s' % pq)
    result = pathcover.labeling_via_path_cover(graph, *pq)
    _print_json(result)


def cmd_power(args):
    graph = _graph(args)
    twins = power.neighborhood_diversity(graph)
    result = power.l1_labeling_via_coloring(graph, args.k)
    _print_json(dict(
        nd=twins.nd,
        classes=twins.classes,
        k=args.k,
        labeling=result,
    ))


def cmd_gen(args):
    graph = generators.generate(
        args.model, args.n, seed=args.seed, edge_prob=args.edge_prob,
        max_diameter=args.max_diameter, clique_size=args.clique_size)
    args.output.write(parser.format_graph(graph))
    args.output.flush()


def _positive(value):
    value = int(value)
    if value < 1:
        raise argparse.ArgumentTypeError('%d is not positive' % value)
    return value


def get_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='more logging, repeat for debug output')

    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument('-g', '--graph', required=True,
                       type=argparse.FileType('rb'),
                       help='edge list file, - for stdin')

    pvector = argparse.ArgumentParser(add_help=False)
    pvector.add_argument('-p', required=True, metavar='P1,P2,...',
                         help='separation vector, k is its length')

    root = argparse.ArgumentParser(
        prog='lptsp', description=__about__.__description__)
    root.add_argument('--version', action='version',
                      version='%(prog)s ' + __about__.__version__)
    commands = root.add_subparsers(dest='command', metavar='command')
    commands.required = True

    sub = commands.add_parser(
        'solve', parents=[common, graph, pvector],
        help='minimum span labeling through the path TSP reduction')
    sub.add_argument('--method', default=labeling.Method.EXACT.value,
                     choices=[method.value for method in labeling.Method])
    sub.add_argument('--force', action='store_true',
                     help='solve even when p_max > 2 * p_min')
    sub.add_argument('--json', action='store_true',
                     help='one JSON object with the labeling and report')
    sub.add_argument('--pad', action='store_true',
                     help='pad p with p_min up to the diameter')
    sub.add_argument('--polish', action='store_true',
                     help='improve the path with 2-opt and Or-opt')
    sub.add_argument('--budget', type=_positive,
                     help='local search move budget')
    sub.add_argument('--verify', action='store_true',
                     help='re-check the labeling before printing it')
    sub.set_defaults(func=cmd_solve)

    sub = commands.add_parser(
        'oracle', parents=[common, graph, pvector],
        help='minimum span without the reduction')
    sub.add_argument('--method', default='branch-bound',
                     choices=['branch-bound', 'permutations'])
    sub.add_argument('--upper', type=int,
                     help='known achievable span for branch and bound')
    sub.set_defaults(func=cmd_oracle)

    sub = commands.add_parser(
        'verify', parents=[common, graph, pvector],
        help='check a labeling JSON file')
    sub.add_argument('-l', '--labels', required=True,
                     type=argparse.FileType('rb'))
    sub.set_defaults(func=cmd_verify)

    sub = commands.add_parser(
        'reduce', parents=[common, graph, pvector],
        help='print the reduced weight matrix')
    sub.add_argument('--json', action='store_true')
    sub.set_defaults(func=cmd_reduce)

    sub = commands.add_parser(
        'export', parents=[common, graph, pvector],
        help='write the reduced instance as TSPLIB')
    sub.add_argument('--name', default='lptsp')
    sub.add_argument('-o', '--output', default='-',
                     type=argparse.FileType('w'))
    sub.set_defaults(func=cmd_export)

    sub = commands.add_parser(
        'import', parents=[common, graph, pvector],
        help='label the graph from an external TSPLIB tour')
    sub.add_argument('-t', '--tour', required=True,
                     type=argparse.FileType('rb'))
    sub.set_defaults(func=cmd_import)

    sub = commands.add_parser(
        'pathcover', parents=[common, graph],
        help='minimum path cover, or the diameter 2 L(p,q) route')
    sub.add_argument('--pq', metavar='P,Q',
                     help='label with L(p,q) from the path cover')
    sub.set_defaults(func=cmd_pathcover)

    sub = commands.add_parser(
        'power', parents=[common, graph],
        help='neighborhood diversity and L(1,...,1) by coloring G^k')
    sub.add_argument('-k', type=_positive, default=2)
    sub.set_defaults(func=cmd_power)

    sub = commands.add_parser(
        'gen', parents=[common], help='generate a graph edge list')
    sub.add_argument('--model', required=True,
                     choices=generators.MODEL_NAMES)
    sub.add_argument('-n', type=_positive, required=True)
    sub.add_argument('--seed', type=int)
    sub.add_argument('--edge-prob', type=float, default=0.5)
    sub.add_argument('--max-diameter', type=_positive)
    sub.add_argument('--clique-size', type=_positive)
    sub.add_argument('-o', '--output', default='-',
                     type=argparse.FileType('w'))
    sub.set_defaults(func=cmd_gen)

    return root


def main(argv=None):
    args = get_parser().parse_args(argv)
    logging.basicConfig(
        level=LOG_LEVELS.get(args.verbose, logging.DEBUG),
        format='%(levelname)s:%(name)s:%(message)s')

    try:
        return args.func(args) or 0
    except exceptions.InputError as exception:
        print('error: %s' % exception, file=sys.stderr)
        return 1
    except exceptions.PreconditionError as exception:
        print('error: %s' % exception, file=sys.stderr)
        return 2
    except exceptions.InvalidLabeling as exception:
        print('error: %s' % exception, file=sys.stderr)
        return 3
