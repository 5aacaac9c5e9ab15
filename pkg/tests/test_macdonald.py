from fractions import Fraction

import pytest

from cylqt.cylindric import pieri_phi, pieri_psi
from cylqt.macdonald import MacdonaldOracle, b_lambda, zee
from cylqt.partitions import is_horizontal_strip, partitions_upto, size

Q, T = Fraction(2, 7), Fraction(3, 5)


def oracle(max_degree=5, q=Q, t=T):
    return MacdonaldOracle(q, t, max_degree)


def test_zee():
    assert zee(()) == 1
    assert zee((3, 1, 1)) == 3 * 1 * 2
    assert zee((2, 2)) == 8


def test_basis_low_degree():
    o = oracle(3)
    P = o.basis_in_monomials()
    assert P[()] == {(): 1}
    assert P[(1,)] == {(1,): 1}
    # degree-2 coefficient recomputed through Gram-Schmidt
    assert P[(2,)][(1, 1)] == (1 + Q) * (1 - T) / (1 - Q * T)
    assert P[(1, 1)] == {(1, 1): 1}


def test_gram_matrix_diagonal():
    o = oracle(5)
    for n in range(1, 6):
        g = o.gram_matrix(n)
        for i, row in enumerate(g):
            for j, val in enumerate(row):
                assert (val == 0) == (i != j)


def test_b_lambda_orientation():
    o = oracle(5)
    assert b_lambda(()).is_one()
    single = b_lambda((1,))
    assert single.eval_at(Q, T) == (1 - T) / (1 - Q)
    for lam in partitions_upto(5):
        assert o.norm(lam) * b_lambda(lam).eval_at(Q, T) == 1


def test_degree_one_pieri_orientation():
    o = oracle(3)
    phi, psi = o.extract_pieri_coeffs(2)
    assert phi[((1,), ())] == (1 - T) / (1 - Q)
    assert psi[((1,), ())] == 1
    assert phi[((1,), (1,))] == 1
    assert psi[((1,), (1,))] == 1


def test_pieri_concordance_degree_four():
    o = oracle(4)
    phi, psi = o.extract_pieri_coeffs(4)
    pairs = [(lam, mu) for lam in partitions_upto(4) for mu in partitions_upto(size(lam))
             if is_horizontal_strip(lam, mu)]
    assert pairs
    for lam, mu in pairs:
        assert phi[(lam, mu)] == pieri_phi(lam, mu).eval_at(Q, T), (lam, mu)
        assert psi[(lam, mu)] == pieri_psi(lam, mu).eval_at(Q, T), (lam, mu)


def test_adjointness():
    o = oracle(6)
    f = {(2, 1): Fraction(3, 4), (1, 1): Fraction(-2, 5), (): Fraction(1, 7)}
    g = {(3, 1): Fraction(1, 3), (2, 1, 1): Fraction(5), (1,): Fraction(-1)}
    adds = o.add_strip_components(f, max_r=3)
    rems = o.remove_strip_components(g, max_r=3)
    for r in range(4):
        assert o.inner(adds[r], g) == o.inner(f, rems[r])


def test_zero_component_of_kernel_is_identity():
    o = oracle(4)
    f = o.basis()[(2, 1)]
    assert o.add_strip_components(f, max_r=0)[0] == f
    assert o.remove_strip_components(f, max_r=0)[0] == f


def test_remove_from_single_box():
    o = oracle(2)
    comp = o.remove_strip_components(o.basis()[(1,)], max_r=1)
    assert comp[1] == {(): Fraction(1)}  # psi_{(1)/()} = 1


def test_commutation_scalars_and_identity():
    o = oracle(6)
    rep = o.verify_commutation(3, 3)
    assert rep["pass"]
    assert rep["scalars"][0] == 1
    assert rep["scalars"][1] == (1 - T) / (1 - Q)


def test_commutation_needs_headroom():
    with pytest.raises(ValueError):
        oracle(3).verify_commutation(3, 3)


def test_q_equals_t_gives_schur_and_geometric_scalar():
    o = MacdonaldOracle(Fraction(1, 3), Fraction(1, 3), 4)
    assert o.commutation_scalars(3) == [1, 1, 1, 1]
    for lam in partitions_upto(4):
        assert o.basis()[lam] == o.schur_jacobi_trudi(lam), lam


def test_translation_lemma_via_point_evaluation():
    o = oracle(4)
    xs = [Fraction(1, 2), Fraction(2, 3), Fraction(-1, 5), Fraction(3, 7)]
    for lam in partitions_upto(4):
        assert o.translation_check(lam, xs, Fraction(2, 9))
        assert o.translation_check(lam, xs, Fraction(-3, 4))


def test_degenerate_point_rejected():
    with pytest.raises(ValueError):
        MacdonaldOracle(Fraction(1), Fraction(1), 2).basis()
    with pytest.raises(ValueError):
        MacdonaldOracle(Fraction(2), Fraction(1), 2).basis()
