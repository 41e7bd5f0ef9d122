from fractions import Fraction

import pytest
from hypothesis import settings

from weylfold.rootsys import all_types, build

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

SMALL = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]
MEDIUM = SMALL + ["A4", "B4", "C4", "D4", "F4"]
ALL = [str(t) for t in all_types(8)]


def F(*xs):
    return tuple(Fraction(x) for x in xs)


@pytest.fixture(params=SMALL)
def small_rs(request):
    return build(request.param)


@pytest.fixture(params=MEDIUM)
def medium_rs(request):
    return build(request.param)


@pytest.fixture(params=ALL)
def any_rs(request):
    return build(request.param)
