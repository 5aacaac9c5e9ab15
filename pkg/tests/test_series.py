import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cylqt import _mul_py
from cylqt.partitions import partitions_upto, size
from cylqt.series import (
    LaurentMonomial,
    Q_MINUS_T,
    SignedAlphabet,
    Space,
    TruncatedSeries,
    omega,
    pochhammer_ratio,
    scale_alphabet,
)

QT = Space(("q", "t"), (6, 6))


def geometric_q(space, n=1, m=0):
    acc = space.zero()
    cur = (0, 0)
    while space.admissible(cur):
        acc = acc + space.monomial(cur)
        cur = (cur[0] + n, cur[1] + m)
    return acc


def test_omega_single_q():
    # {q} -> 1/(1-q)
    assert omega(SignedAlphabet({(1, 0): 1}), QT) == geometric_q(QT)


def test_omega_q_minus_t():
    # q - t -> (1-t)/(1-q): expand (1-t) * sum q^n directly
    got = omega(Q_MINUS_T, QT)
    expect = (QT.one() - QT.monomial((0, 1))) * geometric_q(QT)
    assert got == expect


def test_omega_empty():
    assert omega(SignedAlphabet(), QT) == QT.one()


def test_omega_rejects_constant_term():
    with pytest.raises(ValueError):
        omega(SignedAlphabet({(0, 0): 1}), QT)


def test_scale_alphabet_examples():
    single = SignedAlphabet({(2, 3): 1})
    assert scale_alphabet(Q_MINUS_T, single) == SignedAlphabet({(3, 3): 1, (2, 4): -1})
    assert scale_alphabet(single, SignedAlphabet()) == SignedAlphabet()
    unit = SignedAlphabet({(0, 0): 1})
    assert scale_alphabet(Q_MINUS_T, unit) == Q_MINUS_T
    assert omega(scale_alphabet(Q_MINUS_T, unit), QT) == omega(Q_MINUS_T, QT)


alphabet_terms = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)).filter(lambda k: k != (0, 0)),
    st.integers(-2, 2),
    max_size=4,
)


@settings(max_examples=40, deadline=None)
@given(alphabet_terms, alphabet_terms)
def test_omega_is_multiplicative(a_terms, b_terms):
    a, b = SignedAlphabet(a_terms), SignedAlphabet(b_terms)
    assert omega(a + b, QT) == omega(a, QT) * omega(b, QT)


@settings(max_examples=25, deadline=None)
@given(alphabet_terms)
def test_omega_of_negation_inverts(terms):
    a = SignedAlphabet(terms)
    assert omega(a, QT) * omega(-a, QT) == QT.one()


QTZ = Space(("q", "t", "z"), (4, 4, 4))


def test_pochhammer_ratio_first_order():
    r = pochhammer_ratio(LaurentMonomial({"z": 1}), QTZ)
    assert r.coefficient((0, 0, 0)) == 1
    # z-coefficient is (1-t)/(1-q) expanded: q^a - q^a t
    for a in range(5):
        assert r.coefficient((a, 0, 1)) == 1
        assert r.coefficient((a, 1, 1)) == -1
        assert r.coefficient((a, 2, 1)) == 0


def test_pochhammer_ratio_specializes_to_geometric():
    r = pochhammer_ratio(LaurentMonomial({"z": 1}), QTZ)
    qz = Space(("q", "z"), (4, 4))
    collapsed = r.substitute({"t": LaurentMonomial({"q": 1})}, qz)
    expect = qz.zero()
    for k in range(5):
        expect = expect + qz.monomial((0, k))
    assert collapsed == expect


def test_pochhammer_ratio_high_degree_argument():
    space = Space(("q", "t", "z"), (4, 4, 1))
    r = pochhammer_ratio(LaurentMonomial({"z": 2}), space)
    assert r == space.one()


def test_pochhammer_ratio_rejects_constant():
    with pytest.raises(ValueError):
        pochhammer_ratio(LaurentMonomial({"q": 1}), QTZ)


def test_inverse_pair():
    space = Space(("z",), (8,))
    one_minus = space.one() - space.monomial((1,))
    geo = one_minus.inverse()
    assert one_minus * geo == space.one()
    assert geo.coefficient((5,)) == 1


def test_inverse_of_qt_factor():
    f = QT.one() - QT.monomial((1, 1))
    inv = f.inverse()
    for n in range(7):
        assert inv.coefficient((n, n)) == 1
    assert f * inv == QT.one()


def test_inverse_requires_unit():
    with pytest.raises(ValueError):
        QT.monomial((1, 0)).inverse()


def test_substitute_collapses_variables():
    space = Space(("z0", "z1"), (4, 4), cap_start=0, cap_total=4)
    target = Space(("z",), (4,))
    s = space.monomial((1, 2))
    z = LaurentMonomial({"z": 1})
    assert s.substitute({"z0": z, "z1": z}, target) == target.monomial((3,))


def test_substitute_rejects_negative():
    space = Space(("z0", "z1"), (2, 2))
    target = Space(("z",), (4,))
    z_inv = LaurentMonomial({"z": -1})
    z = LaurentMonomial({"z": 1})
    with pytest.raises(ValueError):
        space.monomial((1, 0)).substitute({"z0": z_inv, "z1": z}, target)
    # unmapped variables must exist in the target
    with pytest.raises(ValueError):
        space.monomial((1, 1)).substitute({"z0": z}, target)


def test_eval_at():
    # the exact rational value of a ratio is realized through factor
    # products, not by evaluating a truncation; here both routes agree
    # because (1-t) * geometric(q) evaluated termwise telescopes exactly
    space = Space(("q", "t", "z"), (3, 3, 3))
    f = space.var_monomial("z")
    assert f.eval_at({"q": Fraction(1, 2), "t": Fraction(1, 3)}) == Space(("z",), (3,)).monomial((1,))
    one = space.one()
    assert one.eval_at({"q": Fraction(2, 5), "t": Fraction(2, 5), "z": Fraction(1, 7)}) == 1


def test_partition_generating_function_fixture():
    space = Space(("w",), (10,))
    lhs = space.zero()
    for mu in partitions_upto(10):
        lhs = lhs + space.monomial((size(mu),))
    rhs = space.one()
    for n in range(1, 11):
        rhs = rhs * (space.one() - space.monomial((n,))).inverse()
    assert lhs == rhs


def _random_series(space, rng, nterms=12):
    coeffs = {}
    for _ in range(nterms):
        e = tuple(rng.randint(0, b) for b in space.bounds)
        if space.admissible(e):
            coeffs[e] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    return TruncatedSeries(space, {k: v for k, v in coeffs.items() if v})


def test_kernels_agree_and_truncation_is_exact():
    rng = random.Random(7)
    for cap in (-1, 5):
        space = Space(("q", "t", "z"), (5, 4, 6), cap_start=2, cap_total=cap)
        for _ in range(10):
            a = _random_series(space, rng)
            b = _random_series(space, rng)
            got = space.mul_dicts(a.coeffs, b.coeffs)
            ref = _mul_py.mul_packed(
                [(space.pack(e), c) for e, c in a.coeffs.items()],
                [(space.pack(e), c) for e, c in b.coeffs.items()],
                space.strides, space.radices, space.bounds,
                space.cap_start, space.cap_total)
            assert got == {space.unpack(k): v for k, v in ref.items()}
            # truncated product equals truncation of the full product
            full = {}
            for e1, c1 in a.coeffs.items():
                for e2, c2 in b.coeffs.items():
                    e = tuple(x + y for x, y in zip(e1, e2))
                    full[e] = full.get(e, 0) + c1 * c2
            expect = {e: c for e, c in full.items() if c and space.admissible(e)}
            assert got == expect


def test_multiplication_order_independent():
    rng = random.Random(21)
    space = Space(("q", "z"), (6, 6))
    fs = [_random_series(space, rng, nterms=6) for _ in range(5)]
    ref = space.one()
    for f in fs:
        ref = ref * f
    for seed in range(4):
        shuffled = fs[:]
        random.Random(seed).shuffle(shuffled)
        acc = space.one()
        for f in shuffled:
            acc = acc * f
        assert acc == ref


def test_str_and_serialize_are_graded_lex():
    s = QT.monomial((1, 1), Fraction(-1, 2)) + QT.one() + QT.monomial((0, 1), 3)
    assert str(s) == "1 + 3*t - 1/2*q*t"
    assert s.serialize() == [[[0, 0], 1, 1], [[0, 1], 3, 1], [[1, 1], -1, 2]]
