from math import comb

import pytest

from src.lemmas import (LemmaVerifier, checks_passed, verify_all, verify_alpha_congruence,
                        verify_barred_diagonal, verify_beta_congruence, verify_gamma_symbols,
                        verify_logarithmic, verify_theta)
from src.sympoly import algebra

SMALL_N = range(2, 7)


@pytest.mark.parametrize('n', SMALL_N)
def test_logarithmic(n):
    assert verify_logarithmic(n)


@pytest.mark.parametrize('n', SMALL_N)
def test_theta(n):
    assert verify_theta(n)


@pytest.mark.parametrize('n', SMALL_N)
def test_theta_diagonal(n):
    verifier = LemmaVerifier(n)
    A = verifier.algebra
    diagonal = verifier.theta_product().diagonal()
    for i, entry in enumerate(diagonal, start=1):
        expected = A.one
        for k in range(1, i):
            expected *= A.x[i - 1] - A.x[k - 1]
        assert entry == expected


def test_theta_small_entries():
    A = algebra(2)
    product = LemmaVerifier(2).theta_product()
    assert product[1, 1] == A.x[1] - A.x[0]
    assert product[1, 0] == 0
    B = algebra(3)
    assert LemmaVerifier(3).theta_product()[2, 2] == (B.x[2] - B.x[0]) * (B.x[2] - B.x[1])


def test_theta_literal_off_diagonal_formula():
    assert LemmaVerifier(2).theta_literal_diagnostic() is None
    diagnostic = LemmaVerifier(3).theta_literal_diagnostic()
    assert diagnostic['entry'] == (2, 3)
    assert diagnostic['literal'] == '-x1 + x2'
    assert diagnostic['actual'] == '-x1 + x3'


@pytest.mark.parametrize('n', SMALL_N)
def test_beta_congruence(n):
    assert verify_beta_congruence(n)


@pytest.mark.parametrize('n, k', [(n, k) for n in SMALL_N for k in range(3, n + 1)])
def test_alpha_congruence(n, k):
    assert verify_alpha_congruence(k, n)


def test_alpha_residues():
    A = algebra(3)
    residue, formula = LemmaVerifier(3).alpha_residue(3)
    assert residue == formula == 4 * A.x[1]
    B = algebra(4)
    residue, _ = LemmaVerifier(4).alpha_residue(4)
    assert residue == 7 * B.x[1] ** 2


@pytest.mark.parametrize('n', range(4, 7))
def test_alpha_two_literal_formula_fails(n):
    verifier = LemmaVerifier(n)
    residue, formula = verifier.alpha_residue(2)
    assert residue == comb(n, 2)
    assert formula == 2 * n - 3
    assert not verifier.verify_alpha_congruence(2)


def test_alpha_two_holds_at_three():
    assert verify_alpha_congruence(2, 3)


@pytest.mark.parametrize('n', SMALL_N)
def test_gamma_and_barred(n):
    assert verify_gamma_symbols(n)
    assert verify_barred_diagonal(n)


def test_bad_arguments():
    with pytest.raises(ValueError):
        LemmaVerifier(1)
    with pytest.raises(ValueError):
        verify_alpha_congruence(5, 4)


def test_verify_all_table():
    table = verify_all(4)
    assert set(table.columns) == {'identity', 'n', 'k', 'kind', 'passed', 'detail'}
    assert checks_passed(table)
    diagnostics = table[table['kind'] == 'diagnostic']
    assert sorted(diagnostics['identity']) == ['alpha_congruence', 'theta_literal']
    assert not diagnostics['passed'].any()
    alpha_two = diagnostics[diagnostics['identity'] == 'alpha_congruence']['detail'].iloc[0]
    assert alpha_two == 'residue 6 vs formula 5'
