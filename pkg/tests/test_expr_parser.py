import pytest
from sympy import Rational, Symbol, expand

from src.expr_parser import parse_polynomial

y1, y2, x1 = Symbol('y1'), Symbol('y2'), Symbol('x1')


def test_parses_essential_form():
    assert expand(parse_polynomial('y1*y2*(y1+y2)') - y1 * y2 * (y1 + y2)) == 0


def test_caret_is_power_and_rationals_are_exact():
    assert parse_polynomial('1/2*x1^2 - 3') == Rational(1, 2) * x1 ** 2 - 3


def test_constant():
    assert parse_polynomial('7/3') == Rational(7, 3)


@pytest.mark.parametrize('text', [
    '', '   ', 'x1 + z1', 'x0', 'x10', 'x1.5', 'exp(x1)', 'x1/x2', 'x1^(1/2)',
    'x1^-1', '(x1 + 1', 'x1 ** ** 2', 's*x1', '1/0',
])
def test_rejects(text):
    with pytest.raises(ValueError):
        parse_polynomial(text)
