import pytest
from hypothesis import strategies as st

from affine_weyl.group_element import from_letters, pi_power
from affine_weyl.root_datum import parse_datum


def pytest_collection_modifyitems(config, items):
    if config.getoption("-m"):
        return
    skip_slow = pytest.mark.skip(reason="slow; select with -m slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def sl2():
    return parse_datum("SL:2")


@pytest.fixture(scope="session")
def sl3():
    return parse_datum("SL:3")


@pytest.fixture(scope="session")
def sl4():
    return parse_datum("SL:4")


@pytest.fixture(scope="session")
def sl5():
    return parse_datum("SL:5")


@pytest.fixture(scope="session")
def gl3():
    return parse_datum("GL:3")


@st.composite
def elements(draw, selector="SL:3", max_length=6, with_pi=True):
    """A random word in s_0..s_n, optionally preceded by a power of pi"""
    datum = parse_datum(selector)
    letters = draw(st.lists(st.integers(min_value=0, max_value=datum.rank), max_size=max_length))
    g = from_letters(datum, letters)
    if with_pi:
        g = pi_power(datum, draw(st.integers(min_value=0, max_value=datum.size - 1))) * g
    return g
