from collections import Counter

import pytest
from hypothesis import given, strategies as st

from cylqt.partitions import (
    add_horizontal_strips,
    arm_leg,
    arm_leg_inversion,
    box_of_inversion,
    boxes,
    conjugate,
    from_profile,
    hook,
    inversions,
    is_horizontal_strip,
    is_horizontal_strip_columns,
    is_horizontal_strip_profiles,
    normalize,
    partitions_upto,
    remove_horizontal_strips,
    size,
    to_minimal_profile,
)


def test_conjugate_examples():
    assert conjugate((5, 3, 3, 2)) == (4, 4, 3, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((1, 1, 1)) == (3,)


def test_conjugate_involution():
    for lam in partitions_upto(12):
        assert conjugate(conjugate(lam)) == lam


def test_profile_examples():
    assert to_minimal_profile((5, 3, 3, 2)) == "110100110"
    assert to_minimal_profile(()) == ""
    assert to_minimal_profile((2,)) == "110"
    assert from_profile("110100110") == (5, 3, 3, 2)
    assert from_profile("0011") == ()
    assert from_profile("110") == (2,)


def test_profile_round_trip():
    for lam in partitions_upto(20):
        prof = to_minimal_profile(lam)
        assert from_profile(prof) == lam
        if lam:
            assert prof[0] == "1" and prof[-1] == "0"
        # generalized profiles normalize for free
        assert from_profile("00" + prof + "11") == lam


def test_inversions_examples():
    assert inversions("10") == [(0, 1)]
    assert inversions("110") == [(0, 2), (1, 2)]
    assert inversions("01") == []


def test_inversion_count_is_size():
    for lam in partitions_upto(20):
        assert len(inversions(to_minimal_profile(lam))) == size(lam)


def test_arm_leg_examples():
    assert arm_leg((5, 3, 3, 2), (1, 1)) == (4, 3)
    assert arm_leg((1,), (1, 1)) == (0, 0)
    assert arm_leg_inversion("110", (0, 2)) == (1, 0)
    with pytest.raises(ValueError):
        arm_leg((2, 1), (1, 3))
    with pytest.raises(ValueError):
        arm_leg_inversion("10", (1, 0))


def test_arm_leg_coordinate_agreement():
    """Cartesian and inversion statistics agree as multisets, and in
    fact pointwise under the rank-of-one / rank-of-zero pairing."""
    for lam in partitions_upto(12):
        prof = to_minimal_profile(lam)
        invs = inversions(prof)
        cart = Counter(arm_leg(lam, b) for b in boxes(lam))
        invc = Counter(arm_leg_inversion(prof, i) for i in invs)
        assert cart == invc
        for inv in invs:
            assert arm_leg(lam, box_of_inversion(prof, inv)) == arm_leg_inversion(prof, inv)


def test_horizontal_strip_examples():
    assert is_horizontal_strip((3, 2), (2, 2))
    assert is_horizontal_strip((4, 1), (4, 1))
    assert not is_horizontal_strip((2, 2), (1,))


def test_strip_criteria_equivalence():
    for lam in partitions_upto(10):
        for mu in partitions_upto(10):
            a = is_horizontal_strip(lam, mu)
            assert a == is_horizontal_strip_columns(lam, mu)
            assert a == is_horizontal_strip_profiles(lam, mu)
            if a:
                assert size(lam) - size(mu) >= 0


def test_hook():
    assert hook((1,), (1, 1)) == 1
    assert hook((5, 3, 3, 2), (1, 1)) == 8


def test_strip_generators_match_predicate():
    for mu in partitions_upto(6):
        added = list(add_horizontal_strips(mu, size(mu) + 3))
        assert len(set(added)) == len(added)
        expect = [lam for lam in partitions_upto(size(mu) + 3) if is_horizontal_strip(lam, mu)]
        assert sorted(added) == sorted(expect)
        removed = list(remove_horizontal_strips(mu))
        expect = [nu for nu in partitions_upto(size(mu)) if is_horizontal_strip(mu, nu)]
        assert sorted(set(removed)) == sorted(expect)


@given(st.lists(st.integers(min_value=1, max_value=9), max_size=7))
def test_normalize_accepts_any_sorted_input(parts):
    parts.sort(reverse=True)
    lam = normalize(parts)
    assert from_profile(to_minimal_profile(lam)) == lam


def test_normalize_rejects_increasing():
    with pytest.raises(ValueError):
        normalize((1, 2))
