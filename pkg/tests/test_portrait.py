from fractions import Fraction

import pytest

from portraits.angles import Angle, angles_of_period, double
from portraits.circle import CircleArc
from portraits.portrait import (
    ZERO_PORTRAIT,
    CyclicOrderViolated,
    DoublingNotBijective,
    Linked,
    NotARayPair,
    NotPeriodic,
    PeriodMismatch,
    PeriodsDiffer,
    PortraitKind,
    ZeroPortraitError,
    conjugate_angle,
    parse_portrait,
    portrait_from_ray_pair,
    validate,
)
from portraits.enumeration import enumerate_portraits, portraits_up_to


def test_validate_eq1(eq1):
    assert eq1.orbit_period == 2
    assert eq1.valence == 3
    assert eq1.ray_period == 6
    assert eq1.rotation == Fraction(1, 3)
    assert eq1.kind is PortraitKind.SATELLITE
    # canonical indexing puts the characteristic set first
    assert eq1.angle_sets[0] == (Angle("22/63"), Angle("25/63"), Angle("37/63"))


def test_validate_diagnoses():
    with pytest.raises(DoublingNotBijective):
        validate([["1/7", "2/7"]])
    with pytest.raises(CyclicOrderViolated):
        validate([["1/9", "2/9", "4/9", "5/9", "7/9", "8/9"]])
    with pytest.raises(NotPeriodic):
        validate([["1/2"], ["0"]])
    with pytest.raises(PeriodsDiffer):
        validate([["1/3", "1/7"], ["2/3", "2/7"]])
    with pytest.raises(Linked):
        validate([["1/15", "4/15"], ["2/15", "8/15"]])


def test_zero_portrait(zero):
    assert zero.kind is PortraitKind.ZERO
    assert zero.is_nontrivial
    assert zero.characteristic_arc == CircleArc(Angle(0), Fraction(1))
    assert zero.complementary_arcs(0) == [CircleArc(Angle(0), Fraction(1))]
    with pytest.raises(ZeroPortraitError):
        zero.critical_and_value_arcs()


def test_complementary_arcs(airplane, eq1):
    arcs = airplane.complementary_arcs(0)  # the set {3/7, 4/7}
    assert sorted(a.length for a in arcs) == [Fraction(1, 7), Fraction(6, 7)]
    lengths = sorted(a.length for a in eq1.complementary_arcs(0))
    assert lengths == [Fraction(3, 63), Fraction(12, 63), Fraction(48, 63)]
    for portrait in (airplane, eq1):
        for j in range(portrait.orbit_period):
            assert sum(a.length for a in portrait.complementary_arcs(j)) == 1


def test_critical_and_value_arcs(airplane, eq1, s12):
    pairs = airplane.critical_and_value_arcs()
    # the set {6/7, 1/7} is A_2 (index 1 after canonical rotation)
    crit, value = pairs[1]
    assert crit == CircleArc(Angle("1/7"), Fraction(5, 7))
    assert value.length == Fraction(3, 7)
    assert [v for _, v in eq1.critical_and_value_arcs()][0] == CircleArc(
        Angle("22/63"), Fraction(3, 63)
    )
    crit, value = s12.critical_and_value_arcs()[0]
    assert crit == CircleArc(Angle("2/3"), Fraction(2, 3))
    assert value == CircleArc(Angle("1/3"), Fraction(1, 3))


def test_characteristic_arcs(eq1, airplane):
    assert str(eq1.characteristic_arc) == "(22/63,25/63)"
    assert str(airplane.characteristic_arc) == "(3/7,4/7)"
    fig8 = validate(
        [["11/31", "12/31"], ["22/31", "24/31"], ["13/31", "17/31"],
         ["26/31", "3/31"], ["21/31", "6/31"]]
    )
    assert str(fig8.characteristic_arc) == "(11/31,12/31)"


def test_rotation_numbers(eq1, airplane):
    assert eq1.rotation == Fraction(1, 3)
    fig7 = validate([["4/9", "5/9"], ["8/9", "1/9"], ["7/9", "2/9"]])
    assert fig7.rotation == Fraction(1, 2)
    assert fig7.ray_period == 6
    assert airplane.rotation == Fraction(0, 1)


def test_classify(eq1, airplane, zero):
    assert airplane.kind is PortraitKind.PRIMITIVE
    assert eq1.kind is PortraitKind.SATELLITE
    assert zero.kind is PortraitKind.ZERO


def test_portrait_from_ray_pair_examples(eq1, s12, s13):
    portrait, flag = portrait_from_ray_pair("1/3", "2/3")
    assert portrait == s12 and flag
    assert portrait.angle_sets == ((Angle("1/3"), Angle("2/3")),)
    portrait, flag = portrait_from_ray_pair("22/63", "25/63")
    assert portrait == eq1 and flag
    portrait, flag = portrait_from_ray_pair("1/7", "2/7")
    assert portrait == s13 and flag
    assert portrait.angle_sets == ((Angle("1/7"), Angle("2/7"), Angle("4/7")),)


def test_ray_pair_non_characteristic(eq1, s13):
    # pairs inside one set of a satellite portrait co-land but are not
    # characteristic; both orders of discovery are exercised
    portrait, flag = portrait_from_ray_pair("25/63", "37/63")
    assert portrait == eq1 and not flag
    portrait, flag = portrait_from_ray_pair("22/63", "37/63")
    assert portrait == eq1 and not flag
    portrait, flag = portrait_from_ray_pair("1/7", "4/7")
    assert portrait == s13 and not flag


def test_ray_pair_errors():
    with pytest.raises(PeriodMismatch):
        portrait_from_ray_pair("1/3", "1/7")
    with pytest.raises(NotARayPair):
        portrait_from_ray_pair("1/7", "3/7")
    with pytest.raises(NotPeriodic):
        portrait_from_ray_pair("1/4", "1/2")


def test_ray_pair_zero_degenerate(zero):
    portrait, flag = portrait_from_ray_pair("0", "0")
    assert portrait == zero and flag


@pytest.mark.parametrize(
    "t, partner",
    [("1/7", "2/7"), ("3/7", "4/7"), ("7/15", "8/15"), ("2/5", "3/5"),
     ("22/63", "25/63")],
)
def test_conjugate_examples(t, partner):
    assert conjugate_angle(Angle(t)) == Angle(partner)
    assert conjugate_angle(Angle(partner)) == Angle(t)


def test_conjugate_zero():
    assert conjugate_angle(Angle(0)) is None


@pytest.mark.parametrize("n", range(2, 7))
def test_conjugate_involution(n):
    seen = {}
    for t in angles_of_period(n):
        seen[t] = conjugate_angle(t)
    assert all(seen[partner] == t for t, partner in seen.items())
    assert len({frozenset((t, u)) for t, u in seen.items()}) == len(seen) // 2


def test_characteristic_flag_for_conjugates():
    for n in range(2, 6):
        for t in angles_of_period(n)[::3]:
            partner = conjugate_angle(t)
            lo, hi = min(t, partner), max(t, partner)
            portrait, flag = portrait_from_ray_pair(lo, hi)
            assert flag


def test_parse_round_trip(eq1, s12):
    assert parse_portrait(str(eq1)) == eq1
    assert parse_portrait("{{1/3,2/3}}") == s12
    assert parse_portrait("1/5,4/15").ray_period == 4
    import json

    assert parse_portrait(json.dumps(eq1.to_json())) == eq1


def test_portrait_structure_invariants():
    half = Fraction(1, 2)
    for portrait in portraits_up_to(6):
        if portrait.kind is PortraitKind.ZERO:
            continue
        arcs_by_set = [
            portrait.complementary_arcs(j) for j in range(portrait.orbit_period)
        ]
        for arcs in arcs_by_set:
            assert sum(a.length for a in arcs) == 1
            longs = [a for a in arcs if a.length > half]
            assert len(longs) == 1
        # doubling sends each non-critical arc to an arc of twice the length
        for j, arcs in enumerate(arcs_by_set):
            nxt = arcs_by_set[(j + 1) % portrait.orbit_period]
            for a in arcs:
                if a.length < half:
                    image = CircleArc(double(a.start), 2 * a.length)
                    assert image in nxt
        # the characteristic arc sits inside every critical value arc
        char = portrait.characteristic_arc
        for _, value in portrait.critical_and_value_arcs():
            assert value.contains_arc(char)
        # cycle number is 1 or 2
        r = portrait.rotation.denominator if portrait.rotation else 1
        assert portrait.valence / r in (1, 2)
