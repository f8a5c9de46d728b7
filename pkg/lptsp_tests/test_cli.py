import json
import os

import pytest

from lptsp import cli
from lptsp import generators
from lptsp import labeling
from lptsp import models
from lptsp import processors
from lptsp import reduction
from lptsp import tsplib

GRAPHS = os.path.join(os.path.dirname(__file__), 'graphs')


def graph_file(name):
    return os.path.join(GRAPHS, name + '.txt')


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve(capsys):
    code, out, err = run(capsys, 'solve', '-g', graph_file('p3'), '-p', '2,1')
    assert code == 0
    data = json.loads(out)
    assert data['span'] == 3
    assert data['method'] == 'exact'
    assert 'exact: span 3, path length 3, optimal' in err

    violations = labeling.verify_labeling(
        generators.path(3), models.PVector([2, 1]), data['labels'])
    assert violations == []


def test_solve_json(capsys):
    code, out, err = run(capsys, 'solve', '-g', graph_file('k3'),
                         '-p', '2,1', '--json')
    assert code == 0
    data = json.loads(out)
    assert data['span'] == 4
    assert data['report']['guaranteed_optimal'] is True
    assert data['report']['path_length'] == 4
    assert data['report']['metric'] is True


def test_solve_diameter_exceeds_k(capsys):
    code, out, err = run(capsys, 'solve', '-g', graph_file('p4'), '-p', '2,1')
    assert code == 2
    assert out == ''
    assert 'error: diameter 3 exceeds k=2' in err


def test_solve_pad(capsys):
    code, out, err = run(capsys, 'solve', '-g', graph_file('p4'),
                         '-p', '2,1', '--pad')
    assert code == 0
    assert json.loads(out)['span'] == 3


def test_solve_ratio(capsys):
    code, out, err = run(capsys, 'solve', '-g', graph_file('star13'),
                         '-p', '3,1')
    assert code == 2
    assert 'error: p_max=3 exceeds 2*p_min=2' in err

    code, out, err = run(capsys, 'solve', '-g', graph_file('star13'),
                         '-p', '1,3', '--force', '--json')
    assert code == 0
    data = json.loads(out)
    assert data['report']['guaranteed_optimal'] is False
    assert data['report']['metric'] is False
    violations = labeling.verify_labeling(
        generators.star(4), models.PVector([1, 3]), data['labels'])
    assert violations == []


@pytest.mark.parametrize('argv', [
    ['--method', 'approx', '--polish', '--verify'],
    ['--method', 'heuristic', '--budget', '5'],
    ['--method', 'pmax', '--verify'],
])
def test_solve_methods(capsys, argv):
    code, out, err = run(capsys, 'solve', '-g', graph_file('c5'),
                         '-p', '2,1', *argv)
    assert code == 0
    data = json.loads(out)
    violations = labeling.verify_labeling(
        generators.cycle(5), models.PVector([2, 1]), data['labels'])
    assert violations == []


def test_solve_pmax_span(capsys):
    code, out, err = run(capsys, 'solve', '-g', graph_file('p3'),
                         '-p', '2,1', '--method', 'pmax')
    assert code == 0
    assert json.loads(out)['span'] == 4


@pytest.mark.parametrize('document', [
    '3 2\n0 1\n',
    '3 1\n0 3\n',
    'three vertices\n',
])
def test_solve_bad_graph(capsys, tmp_path, document):
    filename = tmp_path / 'bad.txt'
    filename.write_text(document)
    code, out, err = run(capsys, 'solve', '-g', str(filename), '-p', '2,1')
    assert code == 1
    assert err.startswith('error: ')


@pytest.mark.parametrize('p', ['a,b', '2,0', ''])
def test_solve_bad_pvector(capsys, p):
    code, out, err = run(capsys, 'solve', '-g', graph_file('p3'), '-p', p)
    assert code == 1
    assert err.startswith('error: ')


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(['solve'])
    assert excinfo.value.code == 2

    with pytest.raises(SystemExit) as excinfo:
        cli.main(['solve', '-g', graph_file('p3'), '-p', '2,1',
                  '--method', 'magic'])
    assert excinfo.value.code == 2

    with pytest.raises(SystemExit):
        cli.main([])


@pytest.mark.parametrize('method', ['branch-bound', 'permutations'])
def test_oracle(capsys, method):
    code, out, err = run(capsys, 'oracle', '-g', graph_file('c4'),
                         '-p', '2,1', '--method', method)
    assert code == 0
    assert json.loads(out)['span'] == 4


def test_oracle_upper_too_small(capsys):
    code, out, err = run(capsys, 'oracle', '-g', graph_file('c4'),
                         '-p', '2,1', '--upper', '3')
    assert code == 2
    assert 'error: no labeling with span at most 3' in err


def test_verify(capsys, tmp_path):
    labels = tmp_path / 'labels.json'
    labels.write_text('[2, 0, 3]')
    code, out, err = run(capsys, 'verify', '-g', graph_file('p3'),
                         '-p', '2,1', '-l', str(labels))
    assert code == 0
    assert out == 'valid\n'

    labels.write_text('{"labels": {"0": 0, "1": 1, "2": 2}}')
    code, out, err = run(capsys, 'verify', '-g', graph_file('p3'),
                         '-p', '2,1', '-l', str(labels))
    assert code == 1
    assert out.splitlines() == [
        'invalid',
        '  0-1 at distance 1: gap 1, need 2',
        '  1-2 at distance 1: gap 1, need 2',
    ]


def test_verify_missing_label(capsys, tmp_path):
    labels = tmp_path / 'labels.json'
    labels.write_text('[2, 0]')
    code, out, err = run(capsys, 'verify', '-g', graph_file('p3'),
                         '-p', '2,1', '-l', str(labels))
    assert code == 1
    assert 'error: no label for vertices 2' in err


def test_solve_then_verify(capsys, tmp_path):
    code, out, err = run(capsys, 'solve', '-g', graph_file('petersen'),
                         '-p', '2,1')
    assert code == 0
    labels = tmp_path / 'labels.json'
    labels.write_text(out)

    code, out, err = run(capsys, 'verify', '-g', graph_file('petersen'),
                         '-p', '2,1', '-l', str(labels))
    assert code == 0
    assert out == 'valid\n'


def test_reduce(capsys):
    code, out, err = run(capsys, 'reduce', '-g', graph_file('star13'),
                         '-p', '2,1')
    assert code == 0
    assert out == '0 2 2 2\n2 0 1 1\n2 1 0 1\n2 1 1 0\n'

    code, out, err = run(capsys, 'reduce', '-g', graph_file('star13'),
                         '-p', '2,1', '--json')
    assert json.loads(out) == dict(n=4, weights=[
        [0, 2, 2, 2], [2, 0, 1, 1], [2, 1, 0, 1], [2, 1, 1, 0]])


def test_reduce_non_metric(capsys, caplog):
    code, out, err = run(capsys, 'reduce', '-g', graph_file('star13'),
                         '-p', '1,3')
    assert code == 0
    assert 'instance is not metric' in caplog.text


def test_export(capsys, tmp_path):
    output = tmp_path / 'p3.tsp'
    code, out, err = run(capsys, 'export', '-g', graph_file('p3'),
                         '-p', '2,1', '--name', 'p3', '-o', str(output))
    assert code == 0

    instance = reduction.build_instance(
        generators.path(3), models.PVector([2, 1]))
    assert output.read_text() == tsplib.export_tsplib(instance, 'p3')


def test_export_stdout(capsys):
    code, out, err = run(capsys, 'export', '-g', graph_file('p3'),
                         '-p', '2,1')
    assert code == 0
    assert out.startswith('NAME: lptsp\n')
    assert out.endswith('EOF\n')


def test_import(capsys, tmp_path):
    tour = tmp_path / 'p3.tour'
    tour.write_text('NAME: p3.tour\nTYPE: TOUR\nDIMENSION: 4\n'
                    'TOUR_SECTION\n4\n2\n1\n3\n-1\nEOF\n')
    code, out, err = run(capsys, 'import', '-g', graph_file('p3'),
                         '-p', '2,1', '-t', str(tour))
    assert code == 0
    assert json.loads(out) == dict(
        labels={'0': 2, '1': 0, '2': 3}, span=3, method='tsplib')


def test_import_bad_tour(capsys, tmp_path):
    tour = tmp_path / 'p3.tour'
    tour.write_text('TOUR_SECTION\n1\n2\n-1\nEOF\n')
    code, out, err = run(capsys, 'import', '-g', graph_file('p3'),
                         '-p', '2,1', '-t', str(tour))
    assert code == 1
    assert err.startswith('error: ')


def test_pathcover(capsys):
    code, out, err = run(capsys, 'pathcover', '-g', graph_file('star13'))
    assert code == 0
    assert json.loads(out) == dict(s=2, paths=[[1, 0, 2], [3]])


def test_pathcover_pq(capsys):
    code, out, err = run(capsys, 'pathcover', '-g', graph_file('c5'),
                         '--pq', '2,1')
    assert code == 0
    data = json.loads(out)
    assert data['span'] == 4
    assert data['method'] == 'pathcover'


@pytest.mark.parametrize('pq,code', [
    ('2,1,1', 1),
    ('2', 1),
    ('3,1', 2),
])
def test_pathcover_pq_errors(capsys, pq, code):
    result, out, err = run(capsys, 'pathcover', '-g', graph_file('c5'),
                           '--pq', pq)
    assert result == code
    assert err.startswith('error: ')


def test_power(capsys):
    code, out, err = run(capsys, 'power', '-g', graph_file('p3'))
    assert code == 0
    data = json.loads(out)
    assert data['nd'] == 2
    assert data['k'] == 2
    assert data['labeling']['span'] == 2
    assert data['labeling']['method'] == 'coloring'


def test_gen(capsys):
    code, out, err = run(capsys, 'gen', '--model', 'cycle', '-n', '4')
    assert code == 0
    assert out == '4 4\n0 1\n0 3\n1 2\n2 3\n'


def test_gen_output_parses(capsys, tmp_path):
    output = tmp_path / 'random.txt'
    code, out, err = run(capsys, 'gen', '--model', 'random', '-n', '7',
                         '--seed', '3', '--max-diameter', '2',
                         '-o', str(output))
    assert code == 0

    code, out, err = run(capsys, 'solve', '-g', str(output), '-p', '2,1')
    assert code == 0


def test_gen_failure(capsys):
    code, out, err = run(capsys, 'gen', '--model', 'random', '-n', '5',
                         '--edge-prob', '0')
    assert code == 2
    assert 'error: no connected graph with n=5' in err


def test_gen_invalid(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.main(['gen', '--model', 'cycle', '-n', '0'])
    assert excinfo.value.code == 2


@pytest.mark.parametrize('argv,message', [
    (['-n', '2', '--model', 'cycle'],
     'error: a cycle needs at least 3 vertices, got 2'),
    (['-n', '3', '--model', 'split', '--clique-size', '5'],
     'error: clique size 5 out of range [1, 3]'),
    (['-n', '1', '--model', 'apex'],
     'error: an apex graph needs at least 2 vertices, got 1'),
])
def test_gen_model_arguments(capsys, argv, message):
    code, out, err = run(capsys, 'gen', *argv)
    assert code == 1
    assert out == ''
    assert err == message + '\n'


def test_undecodable_inputs(capsys, tmp_path):
    graph = tmp_path / 'graph.txt'
    graph.write_bytes(b'3 2\n0 1\n1 \xff2\n')
    code, out, err = run(capsys, 'solve', '-g', str(graph), '-p', '2,1')
    assert code == 1
    assert err == 'error: invalid UTF-8 at byte 10\n'

    tour = tmp_path / 'p3.tour'
    tour.write_bytes(b'TOUR_SECTION\n4\n\xff\n-1\nEOF\n')
    code, out, err = run(capsys, 'import', '-g', graph_file('p3'),
                         '-p', '2,1', '-t', str(tour))
    assert code == 1
    assert err.startswith('error: invalid UTF-8')

    labels = tmp_path / 'labels.json'
    labels.write_bytes(b'[2, 0, \xff]')
    code, out, err = run(capsys, 'verify', '-g', graph_file('p3'),
                         '-p', '2,1', '-l', str(labels))
    assert code == 1
    assert err.startswith('error: invalid labeling JSON')


def test_solve_verify_failure(capsys, monkeypatch):
    def squash(solver, stage, value):
        return models.Labeling([0] * solver.graph.n, value.method)

    monkeypatch.setattr(
        processors, 'normalize_labeling_post_processor', squash)
    code, out, err = run(capsys, 'solve', '-g', graph_file('p3'),
                         '-p', '2,1', '--verify')
    assert code == 3
    assert out == ''
    assert err.startswith('error: invalid labeling, 3 violations')
