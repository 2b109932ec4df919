import pytest

from portraits import ZERO_PORTRAIT, portrait_from_ray_pair, validate


@pytest.fixture(scope="session")
def zero():
    return ZERO_PORTRAIT


@pytest.fixture(scope="session")
def s12():
    portrait, flag = portrait_from_ray_pair("1/3", "2/3")
    assert flag
    return portrait


@pytest.fixture(scope="session")
def s13():
    portrait, flag = portrait_from_ray_pair("1/7", "2/7")
    assert flag
    return portrait


@pytest.fixture(scope="session")
def eq1():
    """The period-2, valence-3 satellite with characteristic arc (22/63, 25/63)."""
    return validate([["22/63", "25/63", "37/63"], ["11/63", "44/63", "50/63"]])


@pytest.fixture(scope="session")
def airplane():
    """The primitive period-3 portrait with characteristic arc (3/7, 4/7)."""
    return validate([["3/7", "4/7"], ["6/7", "1/7"], ["5/7", "2/7"]])


@pytest.fixture(scope="session")
def p4():
    """The period-4 portrait with characteristic arc (1/5, 4/15)."""
    portrait, flag = portrait_from_ray_pair("1/5", "4/15")
    assert flag
    return portrait
