from fractions import Fraction

import pytest

from src.algebra.scalar_qcore import QContext
from src.etc.consts import TEST_Q_VALUES
from src.suites import random_sequence


@pytest.fixture(params=TEST_Q_VALUES)
def ctx(request):
    """ one QContext per q in the test matrix """
    return QContext(Fraction(request.param))


@pytest.fixture
def half():
    return QContext(Fraction(1, 2))


@pytest.fixture
def random_seq(ctx):
    return random_sequence(ctx, 8, seed=7)
