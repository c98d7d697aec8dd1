import pytest

from deltaring.expr import Evaluator


@pytest.fixture(scope='session')
def evaluator():
    return Evaluator()
