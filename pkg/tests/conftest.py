import random

import pytest

from gensubres import ZY, ZZ, parse_poly


def P(text, ring=ZZ):
    return parse_poly(text, ring)


def PY(text):
    return parse_poly(text, ZY)


@pytest.fixture
def rng():
    return random.Random(20001)
