import pytest

from lptsp import utils


@pytest.mark.parametrize('args,output', [
    ((), None),
    ((None, None), None),
    ((None, 0, 24), 0),
    ((18, 24), 18),
])
def test_coalesce(args, output):
    assert utils.coalesce(*args) == output


def test_timer():
    with utils.Timer() as timer:
        sum(range(1000))

    assert timer.elapsed >= 0
    assert timer.start is not None
