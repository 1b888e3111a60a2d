"""Commutative symbol algebra QQ[x_1..x_n, d_1..d_n, s] and the matrices built in it."""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, ring

MultiPoly = PolyElement


class SymbolAlgebra:
    """
    Polynomials in x_1..x_n, the principal symbols d_1..d_n of the partial
    derivatives, and s.

    All polynomials handed to one algebra must come from its ring; mixing
    contexts raises ValueError.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"The symbol algebra needs n >= 1, got {n}")
        self.n = n
        names = [f'x{i}' for i in range(1, n + 1)] + [f'd{i}' for i in range(1, n + 1)] + ['s']
        self.ring, *gens = ring(names, QQ, grlex)
        self.x: Tuple[MultiPoly, ...] = tuple(gens[:n])
        self.d: Tuple[MultiPoly, ...] = tuple(gens[n:2 * n])
        self.s: MultiPoly = gens[2 * n]

    @property
    def zero(self) -> MultiPoly:
        return self.ring.zero

    @property
    def one(self) -> MultiPoly:
        return self.ring.one

    def _check(self, *polys: MultiPoly) -> None:
        for p in polys:
            if not isinstance(p, PolyElement) or p.ring != self.ring:
                raise ValueError(f"Polynomial {p!r} does not belong to the algebra with n={self.n}")

    def _variable(self, var: Union[int, str, MultiPoly]) -> MultiPoly:
        """Resolve a 1-based x index, a generator name or a generator."""
        if isinstance(var, int):
            return self.x[self._index(var) - 1]
        if isinstance(var, str):
            names = [str(symbol) for symbol in self.ring.symbols]
            if var not in names:
                raise ValueError(f"Unknown variable {var!r}")
            return self.ring.gens[names.index(var)]
        self._check(var)
        if var not in self.ring.gens:
            raise ValueError(f"{var} is not a generator")
        return var

    def _index(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"Index {i} outside 1..{self.n}")
        return i

    # Arithmetic

    def add(self, a: MultiPoly, b: MultiPoly) -> MultiPoly:
        self._check(a, b)
        return a + b

    def mul(self, a: MultiPoly, b: MultiPoly) -> MultiPoly:
        self._check(a, b)
        return a * b

    def partial_derivative(self, p: MultiPoly, var: Union[int, str, MultiPoly]) -> MultiPoly:
        """Formal partial derivative; var is a 1-based x index, a name or a generator."""
        self._check(p)
        return p.diff(self._variable(var))

    def substitute(self, p: MultiPoly, replacements) -> MultiPoly:
        """
        Replace generators simultaneously.

        Args:
            p: Polynomial of this algebra
            replacements: Mapping or pairs var -> value; values are polynomials
                of this algebra or rationals
        """
        self._check(p)
        pairs = replacements.items() if hasattr(replacements, 'items') else replacements
        resolved = []
        for var, value in pairs:
            if isinstance(value, PolyElement):
                self._check(value)
            else:
                value = self.ring(value)
            resolved.append((self._variable(var), value))
        if not resolved:
            return p
        return p.compose(resolved)

    # Polynomials of the Vandermonde setting

    def xi(self, indices: Iterable[int]) -> MultiPoly:
        """xi_S = prod_{i<j in S} (x_i - x_j); 1 for |S| <= 1."""
        ordered = sorted({self._index(i) for i in indices})
        result = self.one
        for i, j in combinations(ordered, 2):
            result *= self.x[i - 1] - self.x[j - 1]
        return result

    def power_sum(self, i: int) -> MultiPoly:
        """Scaled power sum (x_1^i + ... + x_n^i) / i."""
        if i < 1:
            raise ValueError(f"Power sum index must be positive, got {i}")
        return sum((x ** i for x in self.x), self.zero) * QQ(1, i)

    def elementary_symmetric(self, k: int, indices: Iterable[int]) -> MultiPoly:
        """e_k of the x variables with the given 1-based indices; 1 for k = 0, 0 for k > |S|."""
        ordered = sorted({self._index(i) for i in indices})
        if k < 0:
            raise ValueError(f"Degree must be non-negative, got {k}")
        result = self.zero
        for subset in combinations(ordered, k):
            term = self.one
            for i in subset:
                term *= self.x[i - 1]
            result += term
        return result

    def delta_apply(self, i: int, target: MultiPoly) -> MultiPoly:
        """delta_i(target) for the logarithmic field delta_i = sum_j x_j^{i-1} d/dx_j."""
        self._index(i)
        self._check(target)
        return sum((x ** (i - 1) * target.diff(x) for x in self.x), self.zero)

    def alpha(self, k: int) -> MultiPoly:
        """
        alpha_k = sum_{i<j} (x_i^{k-1} - x_j^{k-1}) / (x_i - x_j).

        Expanded as sum_{i<j} sum_{a+b=k-2} x_i^a x_j^b, so no division happens.
        """
        self._index(k)
        result = self.zero
        for xi_, xj in combinations(self.x, 2):
            for a in range(k - 1):
                result += xi_ ** a * xj ** (k - 2 - a)
        return result

    def gamma(self, i: int) -> MultiPoly:
        """Principal symbol of delta_i - s*alpha_i."""
        self._index(i)
        return sum((x ** (i - 1) * d for x, d in zip(self.x, self.d)), self.zero) - self.alpha(i) * self.s

    # Matrices

    def gamma_matrix(self) -> 'PolyMatrix':
        """n x (n+1): row i is (x_1^{i-1}, ..., x_n^{i-1}, -alpha_i)."""
        rows = [[x ** (i - 1) for x in self.x] + [-self.alpha(i)] for i in range(1, self.n + 1)]
        return PolyMatrix(rows)

    def theta_matrix(self) -> 'PolyMatrix':
        """The first n columns of the gamma matrix."""
        return self.gamma_matrix().columns(range(self.n))

    def barred_gamma_matrix(self) -> 'PolyMatrix':
        """The gamma matrix with its x_1 column removed (n x n)."""
        return self.gamma_matrix().columns(range(1, self.n + 1))

    def elimination_matrix(self, barred: bool = False) -> 'PolyMatrix':
        """
        Unit lower-triangular M with m_ij = (-1)^{i+j} e_{i-j}(S_i).

        S_i = {x_1, ..., x_{i-1}}, or {x_2, ..., x_i} for the barred variant.
        """
        rows = []
        for i in range(1, self.n + 1):
            support = range(2, i + 1) if barred else range(1, i)
            row = []
            for j in range(1, self.n + 1):
                if j > i:
                    row.append(self.zero)
                else:
                    sign = 1 if (i + j) % 2 == 0 else -1
                    row.append(self.elementary_symmetric(i - j, support) * sign)
            rows.append(row)
        return PolyMatrix(rows)

    def beta(self) -> MultiPoly:
        """beta = -alpha_n - sum_{i<n} mbar_{ni} alpha_i, the last diagonal entry of Mbar Gammabar."""
        barred = self.elimination_matrix(barred=True)
        n = self.n
        result = -self.alpha(n)
        for i in range(1, n):
            result -= barred[n - 1, i - 1] * self.alpha(i)
        return result

    def reduce_modulo_x2_line(self, p: MultiPoly) -> MultiPoly:
        """Image of p modulo (x_1 - x_2, x_3, ..., x_n): x_1 -> x_2, x_k -> 0 for k >= 3."""
        self._check(p)
        if self.n < 2:
            raise ValueError("The reduction needs n >= 2")
        replacements = [(self.x[0], self.x[1])] + [(x, self.zero) for x in self.x[2:]]
        return p.compose(replacements)


@lru_cache(maxsize=None)
def algebra(n: int) -> SymbolAlgebra:
    """Shared algebra per n, so polynomials built by different helpers are compatible."""
    return SymbolAlgebra(n)


@dataclass
class PolyMatrix:
    """A rectangular grid of polynomials from one ring."""

    rows: List[List[MultiPoly]]

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise ValueError("A PolyMatrix needs at least one entry")
        width = len(self.rows[0])
        if any(len(row) != width for row in self.rows):
            raise ValueError("PolyMatrix rows must have equal length")
        rings = {entry.ring for row in self.rows for entry in row}
        if len(rings) != 1:
            raise ValueError("PolyMatrix entries must share one ring")

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def ring(self):
        return self.rows[0][0].ring

    def __getitem__(self, index: Tuple[int, int]) -> MultiPoly:
        i, j = index
        return self.rows[i][j]

    def columns(self, indices: Iterable[int]) -> 'PolyMatrix':
        picked = list(indices)
        return PolyMatrix([[row[j] for j in picked] for row in self.rows])

    def __matmul__(self, other: 'PolyMatrix') -> 'PolyMatrix':
        (r, k), (k2, c) = self.shape, other.shape
        if k != k2:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        if self.ring != other.ring:
            raise ValueError("Matrices come from different rings")
        zero = self.ring.zero
        return PolyMatrix([[sum((self.rows[i][t] * other.rows[t][j] for t in range(k)), zero)
                            for j in range(c)] for i in range(r)])

    def diagonal(self) -> List[MultiPoly]:
        return [self.rows[i][i] for i in range(min(self.shape))]

    def is_upper_triangular(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.shape[0])
                   for j in range(min(i, self.shape[1])))

    def is_unit_lower_triangular(self) -> bool:
        rows, cols = self.shape
        if rows != cols:
            return False
        upper_zero = all(not self.rows[i][j] for i in range(rows) for j in range(i + 1, cols))
        return upper_zero and all(entry == 1 for entry in self.diagonal())


def format_poly(p: MultiPoly) -> str:
    """Graded-lex string with ^ for powers."""
    return str(p).replace('**', '^')


def xi(indices: Sequence[int], n: int = None) -> MultiPoly:
    indices = list(indices)
    return algebra(n or max(indices, default=1)).xi(indices)


def power_sum(i: int, n: int) -> MultiPoly:
    return algebra(n).power_sum(i)


def elementary_symmetric(k: int, indices: Sequence[int], n: int = None) -> MultiPoly:
    indices = list(indices)
    return algebra(n or max(indices, default=1)).elementary_symmetric(k, indices)


def delta_apply(i: int, n: int, target: MultiPoly) -> MultiPoly:
    return algebra(n).delta_apply(i, target)


def alpha(k: int, n: int) -> MultiPoly:
    return algebra(n).alpha(k)


def elimination_matrix(n: int, barred: bool = False) -> PolyMatrix:
    return algebra(n).elimination_matrix(barred)


def gamma_matrix(n: int) -> PolyMatrix:
    return algebra(n).gamma_matrix()


def beta(n: int) -> MultiPoly:
    if n < 2:
        raise ValueError(f"beta needs n >= 2, got {n}")
    return algebra(n).beta()
