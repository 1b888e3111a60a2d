"""
Bounded search for Bernstein operators.

Given f, look for L(s) in the Weyl algebra with L(s) f^{s+1} = b(s) f^s by
making every coefficient of L and b an unknown and solving the resulting
homogeneous linear system exactly over the rationals.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy import Expr, Poly, QQ, Rational, Symbol, sympify
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, ring

from .config import Config
from .engine import BFunctionEngine
from .factored import S, FactoredBPoly

logger = logging.getLogger(__name__)

MAX_UNKNOWNS = 10_000

Exponent = Tuple[int, ...]
TermKey = Tuple[Exponent, Exponent, int]


@dataclass
class WeylOperator:
    """
    A normal-ordered operator sum c * s^k * x^a * d^b (all x's left of all d's).

    Attributes:
        variables: Names of the x variables, in exponent order
        terms: (a, b, k) -> nonzero rational coefficient
    """

    variables: Tuple[str, ...]
    terms: Dict[TermKey, Rational] = field(default_factory=dict)

    def __post_init__(self):
        self.variables = tuple(self.variables)
        width = len(self.variables)
        cleaned = {}
        for (a, b, k), coeff in self.terms.items():
            a, b = tuple(a), tuple(b)
            if len(a) != width or len(b) != width or k < 0:
                raise ValueError(f"Term {(a, b, k)} does not fit variables {self.variables}")
            coeff = Rational(coeff)
            if coeff != 0:
                cleaned[(a, b, int(k))] = cleaned.get((a, b, int(k)), 0) + coeff
        self.terms = {key: c for key, c in cleaned.items() if c != 0}

    @classmethod
    def identity(cls, variables: Sequence[str]) -> 'WeylOperator':
        zero = (0,) * len(variables)
        return cls(tuple(variables), {(zero, zero, 0): Rational(1)})

    @classmethod
    def partial(cls, variables: Sequence[str], name: str) -> 'WeylOperator':
        """The operator d/d(name)."""
        variables = tuple(variables)
        b = tuple(int(v == name) for v in variables)
        if sum(b) != 1:
            raise ValueError(f"Unknown variable {name!r}")
        return cls(variables, {((0,) * len(variables), b, 0): Rational(1)})

    @property
    def order(self) -> int:
        return max((sum(b) for _, b, _ in self.terms), default=0)

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        pieces = []
        for (a, b, k), coeff in sorted(self.terms.items(), key=lambda item: (-sum(item[0][1]), item[0])):
            factors = []
            if k:
                factors.append('s' if k == 1 else f's^{k}')
            for name, e in zip(self.variables, a):
                if e:
                    factors.append(name if e == 1 else f'{name}^{e}')
            for name, e in zip(self.variables, b):
                if e:
                    factors.append(f'd{name}' if e == 1 else f'd{name}^{e}')
            body = '*'.join(factors) if factors else '1'
            pieces.append(body if coeff == 1 else f'({coeff})*{body}')
        return ' + '.join(pieces)

    def to_dict(self) -> dict:
        return {
            'variables': list(self.variables),
            'terms': [{'x': list(a), 'd': list(b), 's': k, 'num': int(c.p), 'den': int(c.q)}
                      for (a, b, k), c in sorted(self.terms.items())],
        }


@dataclass
class OracleResult:
    """
    A Bernstein identity found within the search bounds.

    Attributes:
        b: Factored monic b(s), or None when it has non-rational roots
        polynomial: The monic b(s) in coefficient form
        certificate: Operator L with L f^{s+1} = b f^s
        bounds: (operator order, s-degree, coefficient degree)
    """

    b: Optional[FactoredBPoly]
    polynomial: Poly
    certificate: WeylOperator
    bounds: Tuple[int, int, int]

    def describe(self) -> str:
        return str(self.b) if self.b is not None else str(self.polynomial.as_expr())

    def to_dict(self) -> dict:
        return {
            'b': self.b.to_json() if self.b is not None else None,
            'polynomial': str(self.polynomial.as_expr()),
            'certificate': self.certificate.to_dict(),
            'bounds': {'order': self.bounds[0], 's_degree': self.bounds[1],
                       'coeff_degree': self.bounds[2]},
        }


def _monomials(width: int, max_degree: int, exact: Optional[int] = None) -> List[Exponent]:
    """Exponent vectors of total degree <= max_degree (or exactly `exact`)."""
    degrees = [exact] if exact is not None else range(max_degree + 1)
    result = []
    for degree in degrees:
        if degree < 0 or degree > max_degree:
            continue
        for combo in combinations_with_replacement(range(width), degree):
            exponent = [0] * width
            for i in combo:
                exponent[i] += 1
            result.append(tuple(exponent))
    return result


class _PowerContext:
    """The ring QQ[vars, s] for one f with cached derivatives of f^{s+1}."""

    def __init__(self, f: Union[Expr, PolyElement, str], variables: Optional[Sequence[str]] = None):
        expr = f.as_expr() if isinstance(f, PolyElement) else sympify(f)
        names = sorted(str(sym) for sym in expr.free_symbols)
        if 's' in names:
            raise ValueError("The symbol s is reserved for the b-function variable")
        if variables is not None:
            missing = set(names) - set(variables)
            if missing:
                raise ValueError(f"f uses variables {sorted(missing)} outside {list(variables)}")
            names = list(variables)
        self.variables: Tuple[str, ...] = tuple(names)
        self.ring, *gens = ring(list(self.variables) + ['s'], QQ, grlex)
        self.x = gens[:-1]
        self.s = gens[-1]
        try:
            self.f = self.ring.from_expr(expr)
        except ValueError as exc:
            raise ValueError(f"Not a polynomial over the rationals: {expr}") from exc
        if not self.f:
            raise ValueError("f must be nonzero")
        self.gradient = [self.f.diff(x) for x in self.x]
        self._derived: Dict[Exponent, PolyElement] = {(0,) * len(self.x): self.ring.one}
        self._powers: Dict[int, PolyElement] = {0: self.ring.one}

    @property
    def degree(self) -> int:
        return max(sum(m[:-1]) for m in self.f.monoms())

    def is_constant(self) -> bool:
        return self.degree == 0

    def is_homogeneous(self) -> bool:
        return len({sum(m[:-1]) for m in self.f.monoms()}) == 1

    def f_power(self, e: int) -> PolyElement:
        if e not in self._powers:
            self._powers[e] = self.f ** e
        return self._powers[e]

    def derived(self, b: Exponent) -> PolyElement:
        """P_b with d^b f^{s+1} = P_b f^{s+1-|b|}."""
        cached = self._derived.get(b)
        if cached is not None:
            return cached
        i = next(index for index, e in enumerate(b) if e > 0)
        previous = b[:i] + (b[i] - 1,) + b[i + 1:]
        p = self.derived(previous)
        m = self.s + 1 - sum(previous)
        result = p.diff(self.x[i]) * self.f + m * p * self.gradient[i]
        self._derived[b] = result
        return result

    def term(self, a: Exponent, b: Exponent, k: int, drop: int) -> PolyElement:
        """s^k x^a P_b f^{drop-|b|}."""
        monomial = self.s ** k
        for x, e in zip(self.x, a):
            monomial *= x ** e
        return monomial * self.derived(b) * self.f_power(drop - sum(b))

    def b_element(self, coefficients: Sequence[Rational]) -> PolyElement:
        return sum((self.s ** j * QQ(int(c.p), int(c.q)) for j, c in enumerate(coefficients)),
                   self.ring.zero)


def apply_to_power(op: WeylOperator, f) -> Tuple[PolyElement, int]:
    """
    Apply op to f^{s+1}.

    Returns:
        (Q, drop) with op f^{s+1} = Q f^{s+1-drop}, drop the order of op
    """
    context = _PowerContext(f, op.variables)
    drop = op.order
    q = context.ring.zero
    for (a, b, k), coeff in op.terms.items():
        q += context.term(a, b, k, drop) * QQ(int(coeff.p), int(coeff.q))
    return q, drop


class BernsteinOracle:
    """Exact ansatz search for Bernstein identities of small polynomials."""

    def __init__(self, config: Optional[Config] = None):
        self.config = config or Config()

    def find_bernstein(self, f, order_bound: Optional[int] = None,
                       s_degree_bound: Optional[int] = None,
                       coeff_degree_bound: Optional[int] = None,
                       homogeneous: Optional[bool] = None) -> Optional[OracleResult]:
        """
        Search for L and b with L f^{s+1} = b f^s.

        L ranges over operators of order <= order_bound whose coefficients
        have x-degree <= coeff_degree_bound and s-degree <= s_degree_bound;
        deg b <= order_bound * deg f. Both sides are multiplied by
        f^{order_bound - 1 - s} and compared coefficientwise. Among all
        solutions the one with the smallest deg b is returned.

        Args:
            f: sympy expression, ring element or expression string
            homogeneous: Restrict L to weight -deg f when f is homogeneous;
                Config.homogeneous_ansatz by default

        Returns:
            The identity with monic b, or None when the bounds admit none

        Raises:
            ValueError: If f is zero or constant, or the bounds are invalid
        """
        bounds = self.config.oracle_bounds
        order = bounds['order_bound'] if order_bound is None else order_bound
        s_degree = bounds['s_degree_bound'] if s_degree_bound is None else s_degree_bound
        coeff_degree = bounds['coeff_degree_bound'] if coeff_degree_bound is None else coeff_degree_bound
        if order < 1 or s_degree < 0 or coeff_degree < 0:
            raise ValueError(f"Invalid bounds: order {order}, s-degree {s_degree}, coefficient degree {coeff_degree}")
        homogeneous = self.config.homogeneous_ansatz if homogeneous is None else homogeneous

        context = _PowerContext(f)
        if context.is_constant():
            raise ValueError("f must be nonconstant")
        width = len(context.variables)
        weight = -context.degree if homogeneous and context.is_homogeneous() else None

        operator_terms: List[TermKey] = []
        for b in _monomials(width, order):
            exact = None if weight is None else sum(b) + weight
            for a in _monomials(width, coeff_degree, exact):
                for k in range(s_degree + 1):
                    operator_terms.append((a, b, k))
        columns = [context.term(a, b, k, order) for a, b, k in operator_terms]

        b_cap = order * context.degree
        unknowns = len(columns) + b_cap + 1
        if unknowns > MAX_UNKNOWNS:
            raise ValueError(f"Ansatz has {unknowns} unknowns, above the limit of {MAX_UNKNOWNS}")
        logger.info("Bernstein ansatz for %s: %d operator terms, deg b <= %d",
                    context.f.as_expr(), len(operator_terms), b_cap)

        base = context.f_power(order - 1)
        b_columns = [-(context.s ** j) * base for j in range(b_cap + 1)]

        best = None
        cap = b_cap
        while cap >= 0:
            solution = self._solve(columns, b_columns[:cap + 1])
            if solution is None:
                break
            best = solution
            cap = len(solution[1]) - 2
        if best is None:
            logger.info("No Bernstein identity within order %d, s-degree %d, coefficient degree %d",
                        order, s_degree, coeff_degree)
            return None

        operator_values, b_values = best
        lead = b_values[-1]
        b_values = [c / lead for c in b_values]
        certificate = WeylOperator(context.variables, {
            key: value / lead for key, value in zip(operator_terms, operator_values) if value != 0
        })
        polynomial = Poly(sum(c * S ** j for j, c in enumerate(b_values)), S, domain=QQ)
        factored, polynomial = FactoredBPoly.from_polynomial(polynomial)

        if not self._round_trip(context, certificate, b_values):
            raise RuntimeError("Certificate does not reproduce the Bernstein identity")
        logger.debug("Certificate of order %d verified", certificate.order)
        return OracleResult(b=factored, polynomial=polynomial, certificate=certificate,
                            bounds=(order, s_degree, coeff_degree))

    def _solve(self, columns: List[PolyElement],
               b_columns: List[PolyElement]) -> Optional[Tuple[List[Rational], List[Rational]]]:
        """
        Minimal-degree b in the solution space.

        Columns are ordered with the b coefficients first, highest degree
        leading, so in reduced row echelon form the last row with a pivot
        among them has the smallest leading degree.
        """
        ordered = list(reversed(b_columns)) + columns
        monomial_rows: Dict[tuple, int] = {}
        entries: Dict[int, Dict[int, object]] = {}
        for j, column in enumerate(ordered):
            for monom, coeff in column.items():
                i = monomial_rows.setdefault(monom, len(monomial_rows))
                entries.setdefault(i, {})[j] = coeff
        width = len(ordered)
        matrix = DomainMatrix(entries, (max(len(monomial_rows), 1), width), QQ)
        basis = matrix.nullspace()
        logger.debug("Linear system %dx%d, nullspace dimension %d",
                     len(monomial_rows), width, basis.shape[0])
        if basis.shape[0] == 0:
            return None

        echelon, pivots = basis.rref()
        rows = echelon.to_Matrix().tolist()
        b_count = len(b_columns)
        candidates = [r for r, pivot in enumerate(pivots) if pivot < b_count]
        if not candidates:
            return None
        vector = [Rational(v) for v in rows[candidates[-1]]]
        b_values = list(reversed(vector[:b_count]))
        while b_values and b_values[-1] == 0:
            b_values.pop()
        return vector[b_count:], b_values

    @staticmethod
    def _round_trip(context: _PowerContext, certificate: WeylOperator,
                    b_values: Sequence[Rational]) -> bool:
        q, drop = apply_to_power(certificate, context.f.as_expr())
        if drop == 0:
            return False
        return q == context.b_element(b_values) * context.f_power(drop - 1)


def essential_vandermonde(n: int) -> Expr:
    """
    xi_n in the coordinates y_i = x_i - x_{i+1}, 1 <= i < n.

    x_i - x_j becomes y_i + ... + y_{j-1}; e.g. xi_3 = y1*y2*(y1 + y2).
    """
    if n < 2:
        raise ValueError(f"The essential form needs n >= 2, got {n}")
    y = [Symbol(f'y{i}') for i in range(1, n)]
    result = sympify(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            result *= sum(y[i - 1:j - 1])
    return result


@dataclass
class ConjectureCheck:
    """Outcome of comparing the oracle with the conjectured b-function."""

    n: int
    expected: FactoredBPoly
    found: Optional[OracleResult]

    @property
    def status(self) -> str:
        if self.found is None:
            return 'inconclusive'
        return 'confirmed' if self.found.b == self.expected else 'refuted'

    def __bool__(self) -> bool:
        return self.status == 'confirmed'


def verify_conjecture_small(n: int, allow_n4: bool = False, oracle: Optional[BernsteinOracle] = None,
                            engine: Optional[BFunctionEngine] = None, **bounds) -> ConjectureCheck:
    """
    Run the oracle on the essential form of xi_n and compare with b_xi(n).

    Args:
        n: 2 or 3; 4 only with allow_n4
        bounds: Overrides for order_bound, s_degree_bound, coeff_degree_bound

    Returns:
        A check that is truthy iff the oracle reproduced b_xi(n); an empty
        search is inconclusive, not a refutation
    """
    if n not in (2, 3) and not (n == 4 and allow_n4):
        raise ValueError(f"The oracle comparison supports n in {{2, 3}} (4 with allow_n4), got {n}")
    oracle = oracle or BernsteinOracle()
    engine = engine or BFunctionEngine(oracle.config)
    found = oracle.find_bernstein(essential_vandermonde(n), **bounds)
    check = ConjectureCheck(n=n, expected=engine.b_xi(n), found=found)
    logger.info("Oracle comparison for n=%d: %s", n, check.status)
    return check


def smooth_divisor_b(m: int) -> FactoredBPoly:
    """b-function of x^m: prod_{i=1}^{m} (s + i/m)."""
    if m < 1:
        raise ValueError(f"Multiplicity must be positive, got {m}")
    return FactoredBPoly.linear_block(1, m, m)

