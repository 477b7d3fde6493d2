import random
from fractions import Fraction

import pytest

from steinwhit.affine_weyl import ExtAffineElement, realize
from steinwhit.padic import PAdicMatrix
from steinwhit.sampling import random_group_element, random_iwahori
from steinwhit.values import PhaseSum
from steinwhit.weyl import Permutation, all_permutations, dominance_shift
from steinwhit.whittaker import (
    WhittakerValue,
    eval_cell,
    eval_matrix,
    eval_recursive,
    eval_sl,
    parahoric_check,
    phase_sum,
    serialize,
    support,
    verify_functional_equations,
)

ID2 = Permutation.identity(2)
S1_2 = Permutation.simple(2, 1)


def test_normalization_at_identity():
    assert eval_cell((0, 0), ID2, 0) == WhittakerValue.monomial(1, 0, 0)
    g = PAdicMatrix.identity(3, 2)
    assert eval_matrix(g, 1) == WhittakerValue.monomial(1, 0, 0)


def test_diagonal_values_frozen():
    assert eval_cell((1, 0), ID2, 0) == WhittakerValue.monomial(-1, 0, -1)
    assert eval_cell((2, 0), ID2, 0) == WhittakerValue.monomial(1, 0, -2)
    assert eval_cell((1, 0), ID2, 1) == WhittakerValue.monomial(-1, 1, -1)
    w0_3 = Permutation.longest(3)
    assert eval_cell((-2, -1, 0), w0_3, 0) == WhittakerValue.monomial(-1, 0, 1)


def test_support_vanishing():
    assert eval_cell((-1, 0), ID2, 0).zero
    assert not support((-1, 0), ID2)
    assert support((-1, 0), S1_2)
    assert not eval_cell((-1, 0), S1_2, 0).zero


def test_zero_value_is_canonical():
    z = WhittakerValue.zero_value()
    assert z == eval_cell((-1, 0), ID2, 1)
    with pytest.raises(ValueError):
        WhittakerValue(True, -1, 0, 0, Fraction(0))
    with pytest.raises(ValueError):
        WhittakerValue(False, 2, 0, 0, Fraction(0))
    with pytest.raises(ValueError):
        WhittakerValue(False, 1, 0, 0, Fraction(3, 2))


def test_serialize_fields():
    v = WhittakerValue.monomial(-1, 1, -2, Fraction(1, 4))
    assert serialize(v) == {
        "zero": False,
        "sign": -1,
        "eps_exp": 1,
        "q_exp": -2,
        "psi_num": 1,
        "psi_den": 4,
    }
    assert serialize(WhittakerValue.zero_value())["zero"] is True


def test_phase_sum_embedding():
    v = WhittakerValue.monomial(-1, 1, -1, Fraction(1, 2))
    assert phase_sum(v, 2, 2) == PhaseSum.monomial(
        2, 2, Fraction(-1, 2), 1, Fraction(1, 2)
    )
    assert phase_sum(WhittakerValue.zero_value(), 2, 2).is_zero()


def test_central_shift_invariance():
    for n in (2, 3):
        for w in all_permutations(n):
            for e in range(n):
                kbar = tuple(range(n, 0, -1))
                shifted = tuple(k + 1 for k in kbar)
                assert eval_cell(shifted, w, e) == eval_cell(kbar, w, e)


def test_eval_matrix_attaches_unipotent_phase():
    p = 2
    g = PAdicMatrix.from_rows(p, [[1, Fraction(1, p)], [0, 1]])
    assert eval_matrix(g, 0) == WhittakerValue.monomial(1, 0, 0, Fraction(1, p))
    # integral offsets contribute no phase
    h = PAdicMatrix.from_rows(p, [[1, 3], [0, 1]])
    assert eval_matrix(h, 0) == WhittakerValue.monomial(1, 0, 0)


def test_eval_matrix_is_right_iwahori_invariant():
    rng = random.Random(6)
    for n, p in [(2, 2), (3, 3)]:
        for _ in range(5):
            g = random_group_element(rng, n, p)
            base = eval_matrix(g, 1)
            for _ in range(5):
                assert eval_matrix(g * random_iwahori(rng, n, p), 1) == base


def test_rotation_matrix_value():
    p = 2
    u = realize(ExtAffineElement.rotation(2), p)
    for e in range(2):
        assert eval_matrix(u, e) == WhittakerValue.monomial(1, e, 0)


def test_recursion_agrees_on_diagonal():
    for kbar in [(0, 0), (2, 0), (1, 1), (-1, 0), (3, 1)]:
        for e in range(2):
            assert eval_recursive(kbar, ID2, e) == eval_cell(kbar, ID2, e)


def test_recursion_agrees_off_diagonal():
    for n in (2, 3):
        for w in all_permutations(n):
            for e in range(n):
                for k1 in range(-2, 3):
                    kbar = (k1,) + (0,) * (n - 1)
                    assert eval_recursive(kbar, w, e) == eval_cell(kbar, w, e)


def test_zero_seed_kills_everything():
    for w in all_permutations(3):
        for k1 in range(-2, 3):
            assert eval_recursive((k1, 0, 0), w, 1, base=0).zero


def test_recursion_validates_base():
    with pytest.raises(ValueError):
        eval_recursive((0, 0), ID2, 0, base=2)


def test_parahoric_values():
    for n in (2, 3, 4):
        for i in range(1, n):
            results = parahoric_check(i, n, 0)
            assert all(r.passed for r in results)


def test_pinned_wall_value():
    shift = dominance_shift(S1_2)
    assert shift == (-1, 0)
    closed = eval_cell(shift, S1_2, 0)
    recursive = eval_recursive(shift, S1_2, 0)
    assert closed == recursive == WhittakerValue.monomial(1, 0, 0)


def test_eval_sl_requires_unit_determinant():
    g = PAdicMatrix.diagonal(3, [3, 1])
    with pytest.raises(ValueError):
        eval_sl(g)


def test_eval_sl_ignores_eps():
    rng = random.Random(12)
    p = 3
    for _ in range(6):
        g = random_group_element(rng, 2, p)
        d = g.det()
        g1 = g * PAdicMatrix.diagonal(p, [1 / d, 1])
        assert g1.det() == 1
        vals = {eval_sl(g1, e) for e in range(2)}
        assert len(vals) == 1


@pytest.mark.parametrize("n,p", [(2, 2), (2, 3), (3, 2)])
def test_functional_equations_pass(n, p):
    results = verify_functional_equations(n, p, 1, samples=8, seed=23)
    failures = [r.name for r in results if not r.passed]
    assert failures == []
