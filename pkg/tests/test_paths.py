from fractions import Fraction

import pytest

from cylqt.cylindric import enumerate_cpps, macdonald_weight, validate
from cylqt.paths import (
    Cube,
    PathFamily,
    check_family,
    classify_cubes,
    cube_arm_leg,
    d_alphabet,
    d_alphabet_interlacing,
    family_from_json_dict,
    from_paths,
    to_paths,
    vertical_readings,
)
from cylqt.series import Q_MINUS_T, SignedAlphabet, Space, omega, scale_alphabet

WORKED = validate("11010", [(3, 2, 2), (5, 3, 2), (6, 4, 3, 2), (4, 3, 2), (4, 3, 2, 1), (3, 2, 2)])


def weight_value(c, q, t):
    return macdonald_weight(c).eval_at(q, t)


def alphabet_value(alpha, q, t):
    val = Fraction(1)
    for (n, m), c in alpha.terms.items():
        val *= ((1 - q ** n * t ** (m + 1)) / (1 - q ** (n + 1) * t ** m)) ** c
    return val


def test_worked_example_paths_and_starts():
    fam = to_paths(WORKED)
    assert list(fam.paths) == [
        (2, "10101"),
        (4, "10110"),
        (10, "00111"),
        (14, "00111"),
        (16, "01110"),
        (18, "10110"),
        (20, "11010"),
    ]
    assert fam.profile() == "11010"


def test_worked_example_vertical_readings():
    rd = vertical_readings(to_paths(WORKED))
    assert rd[0] == "110010111"
    assert rd[1] == "110101101"
    # the third reading decodes mu^2 = (6,4,3,2); it needs all ten
    # characters including the final unoccupied slot
    assert rd[2] == "1101010110"
    assert rd[3] == "110101011"
    assert rd[4] == "1010101011"
    assert rd[5] == "110010111"
    assert rd[0] == rd[5]


def test_round_trip_worked_example():
    fam = to_paths(WORKED)
    assert from_paths(fam) == WORKED
    assert to_paths(from_paths(fam)) == fam


def test_empty_sequence_paths_repeat_profile():
    c = validate("1010", [(), (), (), (), ()])
    fam = to_paths(c)
    assert len(fam.paths) == 1
    assert fam.paths[0][1] == "1010"
    assert from_paths(fam) == c


def test_round_trip_enumerated():
    for profile in ("10", "01", "110", "0", "11", "1010"):
        for c in enumerate_cpps(profile, 6):
            fam = to_paths(c)
            assert from_paths(fam) == c
            assert to_paths(from_paths(fam)) == fam


def test_family_validation_errors():
    with pytest.raises(ValueError):  # odd start
        check_family(PathFamily(2, [(1, "10")]))
    with pytest.raises(ValueError):  # wrong step length
        check_family(PathFamily(2, [(0, "101")]))
    with pytest.raises(ValueError):  # intersection
        check_family(PathFamily(2, [(0, "10"), (2, "01")]))
    with pytest.raises(ValueError):  # cyclic closure broken
        check_family(PathFamily(2, [(0, "10"), (2, "10"), (4, "01")]))
    with pytest.raises(ValueError):  # spare spectator path: not minimal
        check_family(PathFamily(2, [(0, "10"), (2, "10")]))


def test_classify_cubes_single_box():
    c = validate("10", [(), (1,), ()])
    fam = to_paths(c)
    cubes = classify_cubes(fam)
    assert len(cubes["all"]) == 1
    assert len(cubes["valleys"]) == 1 and not cubes["peaks"]
    cube, level = cubes["surface"][0]
    assert level == 1
    assert cube_arm_leg(fam, cube) == (0, 0)


def test_classify_cubes_empty():
    fam = to_paths(validate("110", [(), (), (), ()]))
    cubes = classify_cubes(fam)
    assert not cubes["all"]


def test_cube_count_is_weight():
    for profile in ("10", "110", "0110"):
        for c in enumerate_cpps(profile, 6):
            assert len(classify_cubes(to_paths(c))["all"]) == c.weight()


def test_worked_example_marked_cubes():
    fam = to_paths(WORKED)
    cubes = classify_cubes(fam)
    # the seam column x=5 carries the x=0 picture shifted by one
    valley = Cube(5, 5, 13)
    assert valley in cubes["valleys"]
    assert cube_arm_leg(fam, valley) == (2, 1)
    peak = Cube(1, 5, 11)
    assert peak in cubes["peaks"]
    assert cube_arm_leg(fam, peak) == (1, 1)


def test_cube_arm_leg_contract():
    fam = to_paths(WORKED)
    cubes = classify_cubes(fam)
    for cube, level in cubes["surface"]:
        a, l = cube_arm_leg(fam, cube)
        assert l == 0  # no occupied vertex between
        assert a + l == level - 1
    with pytest.raises(ValueError):
        cube_arm_leg(fam, Cube(1, 4, 6))


def test_d_alphabet_single_box():
    c = validate("10", [(), (1,), ()])
    assert d_alphabet(c) == SignedAlphabet({(0, 0): 1})
    q, t = Fraction(2, 7), Fraction(3, 5)
    assert alphabet_value(d_alphabet(c), q, t) == (1 - t) / (1 - q)


def test_d_alphabet_all_empty():
    c = validate("0110", [(), (), (), (), ()])
    assert not d_alphabet(c)
    assert not d_alphabet_interlacing(c)


def test_alphabet_routes_agree_and_match_weight():
    q1, t1 = Fraction(2, 7), Fraction(3, 5)
    q2, t2 = Fraction(3, 11), Fraction(5, 4)
    for profile in ("10", "01", "0", "110", "1010", "11010"):
        for c in enumerate_cpps(profile, 6):
            a = d_alphabet(c)
            assert a == d_alphabet_interlacing(c)
            w = macdonald_weight(c)
            assert alphabet_value(a, q1, t1) == w.eval_at(q1, t1)
            assert alphabet_value(a, q2, t2) == w.eval_at(q2, t2)


def test_omega_route_in_series_mode():
    space = Space(("q", "t"), (6, 6))
    for c in enumerate_cpps("110", 4):
        a = d_alphabet(c)
        w = macdonald_weight(c)
        lhs = omega(scale_alphabet(Q_MINUS_T, a), space)
        rhs = space.one()
        for f in w.num:
            rhs = rhs * (space.one() - space.monomial(f))
        for f in w.den:
            rhs = rhs * (space.one() - space.monomial(f)).inverse()
        assert lhs == rhs, c


def test_hall_littlewood_reduction():
    """At q = 0 only arm-zero terms survive, one factor per level."""
    t = Fraction(3, 5)
    for profile in ("10", "110", "1010"):
        for c in enumerate_cpps(profile, 6):
            direct = macdonald_weight(c).eval_at(Fraction(0), t)
            val = Fraction(1)
            for (n, m), coef in d_alphabet(c).terms.items():
                if n == 0:
                    val *= (1 - t ** (m + 1)) ** coef
            assert direct == val, c


def test_q_equals_t_kills_alphabet_weight():
    q = Fraction(1, 3)
    for c in enumerate_cpps("1010", 5):
        assert alphabet_value(d_alphabet(c), q, q) == 1


def test_family_json_round_trip():
    fam = to_paths(WORKED)
    assert family_from_json_dict(fam.to_json_dict()) == fam
