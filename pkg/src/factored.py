"""Monic polynomials in s stored as multisets of exact rational roots."""

import re
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from sympy import Mul, Poly, QQ, Rational, Symbol
from sympy import roots as sympy_roots

RationalLike = Union[int, str, Rational]

S = Symbol('s')

_RATIONAL_LITERAL = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$')


def to_rational(value: RationalLike) -> Rational:
    """
    Coerce an integer, a "p/q" literal or an exact rational into a sympy Rational.

    Args:
        value: Value to convert; floats are refused

    Returns:
        The reduced rational

    Raises:
        ValueError: If the value is malformed or not an exact rational
    """
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"Expected an exact rational, got {value!r}")
    if isinstance(value, str):
        match = _RATIONAL_LITERAL.match(value)
        if not match:
            raise ValueError(f"Malformed rational literal: {value!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) else 1
        if denominator == 0:
            raise ValueError(f"Zero denominator in rational literal: {value!r}")
        return Rational(numerator, denominator)
    if isinstance(value, int):
        return Rational(value)
    # fractions.Fraction and the QQ domain elements of sympy
    if hasattr(value, 'numerator') and hasattr(value, 'denominator'):
        return Rational(int(value.numerator), int(value.denominator))
    raise ValueError(f"Expected an exact rational, got {value!r}")


def _format_factor(root: Rational, multiplicity: int) -> str:
    if root == 0:
        body = 's'
    elif root < 0:
        body = f's + {-root}'
    else:
        body = f's - {root}'
    power = f'^{multiplicity}' if multiplicity > 1 else ''
    return f'({body}){power}'


class FactoredBPoly:
    """
    A monic polynomial prod (s - r)^m with exact rational roots r.

    Values are immutable. Roots are kept sorted in decreasing order, which is
    also the order of the canonical string form.
    """

    __slots__ = ('_factors',)

    def __init__(self, roots: Optional[Union[Mapping[RationalLike, int],
                                             Iterable[RationalLike]]] = None):
        """
        Build a polynomial from its roots.

        Args:
            roots: Either a mapping root -> multiplicity or an iterable of roots
                (repeated roots add up). None gives the constant 1.
        """
        counts: Dict[Rational, int] = {}
        if roots is not None:
            items = roots.items() if isinstance(roots, Mapping) else ((r, 1) for r in roots)
            for root, multiplicity in items:
                multiplicity = int(multiplicity)
                if multiplicity < 0:
                    raise ValueError(f"Negative multiplicity {multiplicity} for root {root}")
                if multiplicity == 0:
                    continue
                key = to_rational(root)
                counts[key] = counts.get(key, 0) + multiplicity
        factors = tuple(sorted(counts.items(), key=lambda item: item[0], reverse=True))
        object.__setattr__(self, '_factors', factors)

    def __setattr__(self, name, value):
        raise AttributeError("FactoredBPoly is immutable")

    @classmethod
    def one(cls) -> 'FactoredBPoly':
        return cls()

    @classmethod
    def linear_block(cls, start: int, stop: int, denominator: int) -> 'FactoredBPoly':
        """
        The product of (s + i/denominator) for start <= i <= stop.

        An empty range gives the constant 1.
        """
        if denominator <= 0:
            raise ValueError(f"Denominator must be positive, got {denominator}")
        return cls(-Rational(i, denominator) for i in range(start, stop + 1))

    @property
    def factors(self) -> Tuple[Tuple[Rational, int], ...]:
        """(root, multiplicity) pairs, roots decreasing."""
        return self._factors

    @property
    def roots(self) -> Dict[Rational, int]:
        return dict(self._factors)

    @property
    def degree(self) -> int:
        return sum(m for _, m in self._factors)

    def is_one(self) -> bool:
        return not self._factors

    def multiplicity(self, root: RationalLike) -> int:
        key = to_rational(root)
        for r, m in self._factors:
            if r == key:
                return m
        return 0

    def __iter__(self) -> Iterator[Tuple[Rational, int]]:
        return iter(self._factors)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FactoredBPoly):
            return NotImplemented
        return self._factors == other._factors

    def __hash__(self) -> int:
        return hash(self._factors)

    def __mul__(self, other: 'FactoredBPoly') -> 'FactoredBPoly':
        return product(self, other)

    def __str__(self) -> str:
        if not self._factors:
            return '1'
        return ' '.join(_format_factor(r, m) for r, m in self._factors)

    def __repr__(self) -> str:
        return f"FactoredBPoly('{self}')"

    def shift(self, k: RationalLike) -> 'FactoredBPoly':
        """The polynomial b(s + k)."""
        return affine_substitute(self, 1, k)

    def to_sympy(self):
        """Coefficient-form expression prod (s - r)^m in the symbol s."""
        return Mul(*[(S - r) ** m for r, m in self._factors])

    def to_json(self) -> Dict[str, List[Dict[str, int]]]:
        return {'roots': [{'num': int(r.p), 'den': int(r.q), 'mult': m}
                          for r, m in self._factors]}

    @classmethod
    def from_json(cls, data: Mapping) -> 'FactoredBPoly':
        """
        Rebuild a polynomial from its JSON form.

        Raises:
            ValueError: If entries are missing, unreduced or not sorted
        """
        try:
            entries = data['roots']
            pairs = [(Rational(int(e['num']), int(e['den'])), int(e['mult'])) for e in entries]
            raw = [(int(e['num']), int(e['den'])) for e in entries]
        except (KeyError, TypeError, ZeroDivisionError) as exc:
            raise ValueError(f"Malformed b-function JSON: {data!r}") from exc
        for (num, den), (root, mult) in zip(raw, pairs):
            if den <= 0 or (root.p, root.q) != (num, den):
                raise ValueError(f"Root {num}/{den} is not a reduced fraction with positive denominator")
            if mult <= 0:
                raise ValueError(f"Multiplicity must be positive, got {mult}")
        result = cls(dict(pairs))
        if len(result.factors) != len(pairs) or list(result.factors) != pairs:
            raise ValueError("Roots must be distinct and sorted in decreasing order")
        return result

    @classmethod
    def from_polynomial(cls, expr) -> Tuple[Optional['FactoredBPoly'], Poly]:
        """
        Factor a nonzero polynomial in s over the rationals.

        Args:
            expr: sympy expression or Poly in the symbol s

        Returns:
            (factored monic form, monic Poly). The factored form is None when
            the polynomial has irrational or complex roots.
        """
        poly = Poly(expr, S, domain=QQ)
        if poly.is_zero:
            raise ValueError("The zero polynomial has no factored form")
        poly = poly.monic()
        rational_roots = sympy_roots(poly, filter='Q')
        if sum(rational_roots.values()) != poly.degree():
            return None, poly
        return cls({to_rational(r): m for r, m in rational_roots.items()}), poly


def product(a: FactoredBPoly, b: FactoredBPoly) -> FactoredBPoly:
    """Multiply two factored polynomials; multiplicities add."""
    counts = a.roots
    for root, mult in b:
        counts[root] = counts.get(root, 0) + mult
    return FactoredBPoly(counts)


def product_of(items: Iterable[FactoredBPoly]) -> FactoredBPoly:
    counts: Dict[Rational, int] = {}
    for item in items:
        for root, mult in item:
            counts[root] = counts.get(root, 0) + mult
    return FactoredBPoly(counts)


def lcm(items: Iterable[FactoredBPoly]) -> FactoredBPoly:
    """Least common multiple: per-root maximum of multiplicities. lcm of nothing is 1."""
    counts: Dict[Rational, int] = {}
    for item in items:
        for root, mult in item:
            if mult > counts.get(root, 0):
                counts[root] = mult
    return FactoredBPoly(counts)


def divides(a: FactoredBPoly, b: FactoredBPoly) -> bool:
    """True iff a | b."""
    available = b.roots
    return all(available.get(root, 0) >= mult for root, mult in a)


def affine_substitute(a: FactoredBPoly, u: RationalLike, v: RationalLike) -> FactoredBPoly:
    """
    The monic form of a(u*s + v).

    A root r of a becomes (r - v)/u; the leading factor u^deg is dropped.

    Raises:
        ValueError: If u is zero
    """
    u = to_rational(u)
    v = to_rational(v)
    if u == 0:
        raise ValueError("Affine substitution needs a nonzero scale factor")
    return FactoredBPoly({(r - v) / u: m for r, m in a})


def is_symmetric_about(a: FactoredBPoly, c: RationalLike) -> bool:
    """True iff the root multiset is invariant under r -> 2c - r."""
    c = to_rational(c)
    return FactoredBPoly({2 * c - r: m for r, m in a}) == a


def root_extrema(a: FactoredBPoly) -> Optional[Tuple[Rational, Rational]]:
    """(largest root, smallest root), or None for the constant 1."""
    if a.is_one():
        return None
    return a.factors[0][0], a.factors[-1][0]


def square_bound(b: FactoredBPoly) -> FactoredBPoly:
    """b(2s+1) * b(2s): a multiple of the b-function of f^2 when b = b_f."""
    return product(affine_substitute(b, 2, 1), affine_substitute(b, 2, 0))
