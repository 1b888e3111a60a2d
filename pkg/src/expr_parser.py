"""Parsing of polynomial expressions typed on the command line."""

import re
from tokenize import TokenError

from sympy import Expr, Poly, QQ
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

_ALLOWED = re.compile(r'^[0-9xy+\-*/^() \t]*$')
_IDENTIFIER = re.compile(r'[a-z_][a-z0-9_]*', re.IGNORECASE)
_VARIABLE = re.compile(r'^[xy][1-9]$')

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def parse_polynomial(text: str) -> Expr:
    """
    Parse a polynomial over the rationals.

    The grammar is integers and p/q rationals, the variables x1..x9 and
    y1..y9, the operators + - * ^ and parentheses.

    Args:
        text: Expression such as "y1*y2*(y1+y2)" or "1/2*x1^2"

    Returns:
        The expanded sympy expression

    Raises:
        ValueError: If the text is empty, uses anything outside the grammar,
            or is not a polynomial (division by a variable, say)
    """
    if not text or not text.strip():
        raise ValueError("Empty polynomial expression")
    if not _ALLOWED.match(text):
        raise ValueError(f"Unexpected characters in polynomial expression: {text!r}")
    for name in _IDENTIFIER.findall(text):
        if not _VARIABLE.match(name):
            raise ValueError(f"Unknown variable {name!r}; use x1..x9 or y1..y9")

    try:
        expr = parse_expr(text, transformations=_TRANSFORMATIONS, evaluate=True)
    except (SyntaxError, TokenError, TypeError, ZeroDivisionError) as exc:
        raise ValueError(f"Cannot parse polynomial expression {text!r}") from exc

    symbols = sorted(expr.free_symbols, key=lambda symbol: symbol.name)
    if symbols:
        try:
            Poly(expr, *symbols, domain=QQ)
        except Exception as exc:
            raise ValueError(f"Not a polynomial over the rationals: {text!r}") from exc
    elif not expr.is_Rational:
        raise ValueError(f"Not a rational constant: {text!r}")
    return expr.expand()
