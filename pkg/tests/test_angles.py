from fractions import Fraction

import pytest

from portraits.angles import (
    Angle,
    SideRequired,
    angles_of_period,
    binary_block,
    binary_expansion,
    bits_value,
    block_value,
    double,
    exact_period,
    orbit,
    preperiod_period,
)
from portraits.enumeration import nu2


@pytest.mark.parametrize(
    "t, expected",
    [("1/3", "2/3"), ("2/3", "1/3"), ("22/63", "44/63")],
)
def test_double(t, expected):
    assert double(Angle(t)) == Angle(expected)


def test_angle_normalization():
    assert Angle(1) == Angle(0)
    assert Angle("3/15") == Angle("1/5")  # unreduced input accepted
    assert str(Angle("3/15")) == "1/5"
    assert str(Angle(0)) == "0/1"
    assert Angle(-1, 3) == Angle(2, 3)


@pytest.mark.parametrize(
    "t, n",
    [("1/7", 3), ("22/63", 6), ("1/3", 2), ("0", 1)],
)
def test_exact_period(t, n):
    assert exact_period(Angle(t)) == n


def test_exact_period_none_for_even_denominator():
    assert exact_period(Angle("1/2")) is None
    assert exact_period(Angle("5/12")) is None


def test_exact_period_matches_orbit_enumeration():
    # independent oracle: walk the orbit and count the cycle
    for t in ["1/7", "22/63", "4/15", "11/31"]:
        t = Angle(t)
        points = orbit(t)
        assert exact_period(t) == len(points)
        assert double(points[-1]) == t


@pytest.mark.parametrize(
    "t, expected",
    [("1/2", (1, 1)), ("1/3", (0, 2)), ("5/12", (2, 2))],
)
def test_preperiod_period(t, expected):
    assert preperiod_period(Angle(t)) == expected


def test_angles_of_period_small():
    assert angles_of_period(1) == (Angle(0),)
    assert angles_of_period(2) == (Angle("1/3"), Angle("2/3"))
    assert angles_of_period(3) == tuple(Angle(k, 7) for k in range(1, 7))


@pytest.mark.parametrize("n", range(2, 13))
def test_angles_of_period_counts(n):
    assert len(angles_of_period(n)) == nu2(n)


@pytest.mark.parametrize("n", range(2, 9))
def test_period_is_exact(n):
    for t in angles_of_period(n):
        u = t
        for k in range(1, n):
            u = double(u)
            assert u != t, f"{t} returned after {k} < {n} doublings"
        assert double(u) == t


@pytest.mark.parametrize(
    "t, block",
    [("1/3", "01"), ("1/5", "0011"), ("4/15", "0100"), ("0", "0")],
)
def test_binary_block(t, block):
    assert binary_block(Angle(t)) == block


def test_binary_block_rejects_preperiodic():
    with pytest.raises(ValueError):
        binary_block(Angle("1/2"))


def test_binary_block_round_trip():
    # every periodic angle with denominator <= 2^12 - 1
    for n in range(1, 13):
        for t in angles_of_period(n):
            word = binary_block(t)
            assert len(word) == n
            assert block_value(word) == t


def test_binary_expansion_dyadic_sides():
    assert binary_expansion(Fraction(1, 2), "R") == ("1", "0")
    assert binary_expansion(Fraction(1, 2), "L") == ("0", "1")
    assert bits_value(*binary_expansion(Fraction(1, 2), "L")) == Fraction(1, 2)
    assert binary_expansion(Fraction(0), "R") == ("", "0")
    assert bits_value(*binary_expansion(Fraction(0), "L")) == 1
    with pytest.raises(SideRequired):
        binary_expansion(Fraction(3, 8))


def test_binary_expansion_non_dyadic():
    for t in [Fraction(1, 3), Fraction(22, 63), Fraction(5, 12), Fraction(3, 10)]:
        prefix, block = binary_expansion(t)
        assert bits_value(prefix, block) == t
