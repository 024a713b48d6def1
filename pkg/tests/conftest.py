import os

import hypothesis
import numpy as np
import pytest

from models.finite_field.field import parse_field

np.seterr(all="warn")

hypothesis.settings.register_profile("default", max_examples=50, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.register_profile("ci", max_examples=200, deadline=None, derandomize=True)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))

SMALL_FIELDS = ("2", "3", "4", "5")


@pytest.fixture(scope="session")
def gf2():
    return parse_field("2")


@pytest.fixture(scope="session")
def gf3():
    return parse_field("3")


@pytest.fixture(scope="session")
def gf4():
    return parse_field("4")


@pytest.fixture(scope="session")
def gf5():
    return parse_field("5")


@pytest.fixture(scope="session")
def gf7():
    return parse_field("7")


@pytest.fixture(scope="session", params=SMALL_FIELDS)
def small_field(request):
    return parse_field(request.param)
