import pathlib

import pytest

import lptsp
from lptsp import exceptions
from lptsp import parser

_tests_path = pathlib.Path(__file__).parent

P3 = '3 2\n0 1\n1 2\n'


def test_parse_data():
    graph = lptsp.parse_graph(P3)
    assert graph.n == 3
    assert list(graph.edges()) == [(0, 1), (1, 2)]


def test_parse_bytes():
    assert lptsp.parse_graph(P3.encode('utf-8')) == lptsp.parse_graph(P3)


def test_parse_fh():
    with (_tests_path / 'graphs' / 'p3.txt').open() as fh:
        assert lptsp.parse_graph(fh) == lptsp.parse_graph(P3)


def test_parse_filename():
    path = str(_tests_path / 'graphs' / 'p3.txt')
    assert lptsp.parse_graph(path) == lptsp.parse_graph(P3)


def test_parse_comments_and_crlf():
    data = '# a path\r\n\r\n3 2\r\n# middle\r\n0 1\r\n1 2\r\n'
    assert lptsp.parse_graph(data) == lptsp.parse_graph(P3)


def test_parse_duplicate_edges():
    graph = lptsp.parse_graph('3 3\n0 1\n1 0\n1 2\n')
    assert graph.m == 2


def test_parse_isolated_vertices():
    graph = lptsp.parse_graph('4 1\n0 1\n')
    assert graph.n == 4
    assert graph.degree(3) == 0


@pytest.mark.parametrize('data,line', [
    ('', None),
    ('# only a comment\n', None),
    ('0 0\n', 1),
    ('3\n', 1),
    ('3 -1\n', 1),
    ('3 x\n', 1),
    ('3 1\n0 1\n1 2\n', 3),
    ('3 2\n0 1\n', None),
    ('3 1\n0 x\n', 2),
    ('3 1\n0 1 2\n', 2),
    ('3 1\n1 1\n', 2),
    ('3 1\n0 3\n', 2),
    ('3 1\n-1 0\n', 2),
    ('# header comment\n3 1\n0 5\n', 3),
])
def test_parse_errors(data, line):
    with pytest.raises(exceptions.ParseError) as excinfo:
        parser.parse_graph(data)

    assert excinfo.value.line == line
    if line is not None:
        assert str(excinfo.value).startswith('line %d: ' % line)


def test_parse_error_is_input_error():
    with pytest.raises(exceptions.InputError):
        parser.parse_graph('3 1\n1 1\n')


def test_format_graph():
    graph = lptsp.generators.cycle(4)
    data = parser.format_graph(graph)
    assert data == '4 4\n0 1\n0 3\n1 2\n2 3\n'
    assert parser.parse_graph(data) == graph


def test_parse_invalid_utf8(tmp_path):
    with pytest.raises(exceptions.ParseError) as excinfo:
        parser.parse_graph(b'3 2\n0 1\n1 \xff2\n')
    assert str(excinfo.value) == 'invalid UTF-8 at byte 10'

    filename = tmp_path / 'latin1.txt'
    filename.write_bytes(b'# gr\xe4ph\n3 2\n0 1\n1 2\n')
    with pytest.raises(exceptions.ParseError):
        parser.parse_graph(str(filename))
