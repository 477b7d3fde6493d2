import random
from fractions import Fraction

import pytest

from steinwhit.affine_weyl import ExtAffineElement, realize
from steinwhit.padic import PAdicMatrix, cell_label
from steinwhit.principal_series import (
    InducedFunction,
    apply_generator,
    f_eval,
    generator_cosets,
    phi_eval,
    run_eigen_checks,
)
from steinwhit.sampling import random_group_element, random_iwahori
from steinwhit.values import PhaseSum
from steinwhit.weyl import Permutation


def test_casselman_value_at_identity():
    one = PAdicMatrix.identity(2, 3)
    w_id = Permutation.identity(2)
    assert f_eval(w_id, one, 0) == PhaseSum.monomial(2, 3, 1)
    assert f_eval(Permutation.simple(2, 1), one, 0).is_zero()


def test_casselman_value_on_rotation_matrix():
    p = 3
    u = realize(ExtAffineElement.rotation(2), p)
    # cell of u is ((0,1), s1): value q * eps^e on the s1 function
    for e in range(2):
        assert f_eval(Permutation.simple(2, 1), u, e) == PhaseSum.monomial(2, p, p, e)
        assert f_eval(Permutation.identity(2), u, e).is_zero()


def test_eval_is_right_iwahori_invariant():
    rng = random.Random(3)
    p = 3
    func = InducedFunction.eigenvector(2, p, 1, "minus")
    g = random_group_element(rng, 2, p)
    val = func.eval(g)
    for _ in range(8):
        assert func.eval(g * random_iwahori(rng, 2, p)) == val


def test_phi_values_at_identity():
    one = PAdicMatrix.identity(3, 2)
    assert phi_eval("minus", one, 0) == PhaseSum.monomial(3, 2, 1)
    assert phi_eval("plus", one, 0) == PhaseSum.monomial(3, 2, 1)


def test_eigenvector_kind_is_validated():
    with pytest.raises(ValueError):
        InducedFunction.eigenvector(2, 3, 0, "spherical")


def test_generator_cosets_counts_and_labels():
    n, p = 3, 5
    for i in range(1, n):
        reps = generator_cosets(n, p, i)
        assert len(reps) == p
        for rep in reps:
            assert cell_label(rep) == ((0,) * n, Permutation.simple(n, i))
    reps0 = generator_cosets(n, p, 0)
    assert len(reps0) == p
    assert len(generator_cosets(n, p, "rotation")) == 1


def test_generator_cosets_are_disjoint():
    n, p = 2, 3
    for gen in (0, 1):
        reps = generator_cosets(n, p, gen)
        for a in range(p):
            for b in range(a + 1, p):
                quotient = reps[a].inverse() * reps[b]
                assert not quotient.is_in_iwahori()


def test_affine_minus_eigenvalue_at_identity():
    # sum over the affine cosets: (p-1) identity-cell terms and one -q term
    n, p = 2, 3
    one = PAdicMatrix.identity(n, p)
    total = apply_generator(InducedFunction.eigenvector(n, p, 0, "minus"), 0, one)
    assert total == PhaseSum.monomial(n, p, -1)


def test_plus_is_not_rotation_eigenvector():
    n, p = 2, 3
    one = PAdicMatrix.identity(n, p)
    plus = InducedFunction.eigenvector(n, p, 1, "plus")
    got = apply_generator(plus, "rotation", one)
    assert got == PhaseSum.monomial(n, p, p, 1)
    claimed = plus.eval(one).times_monomial((-1) ** (n - 1), 1)
    assert got != claimed


@pytest.mark.parametrize("n,p", [(2, 2), (2, 3), (3, 2)])
def test_eigen_suite_passes(n, p):
    for e in range(n):
        results = run_eigen_checks(n, p, e, samples=5, seed=17)
        failures = [r.name for r in results if not r.passed]
        assert failures == []
