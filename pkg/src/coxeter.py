"""Coxeter type data and the b-function of the discriminant on the quotient."""

import re
from dataclasses import dataclass
from typing import Dict, List, Tuple

from sympy import Rational

from .factored import FactoredBPoly, affine_substitute, divides


_LABEL = re.compile(r'^\s*([A-Ia-i])_?(\d+)(?:\((\d+)\))?\s*$')

# Degrees of the fundamental invariants of the exceptional and non-crystallographic types.
_EXCEPTIONAL_DEGREES: Dict[str, Tuple[int, ...]] = {
    'E6': (2, 5, 6, 8, 9, 12),
    'E7': (2, 6, 8, 10, 12, 14, 18),
    'E8': (2, 8, 12, 14, 18, 20, 24, 30),
    'F4': (2, 6, 8, 12),
    'G2': (2, 6),
    'H3': (2, 6, 10),
    'H4': (2, 12, 20, 30),
}

_CRYSTALLOGRAPHIC_DIHEDRAL = {3, 4, 6}


class UnknownCoxeterTypeError(ValueError):
    """Raised for labels outside the supported irreducible finite Coxeter types."""


@dataclass(frozen=True)
class CoxeterDatum:
    """
    An irreducible finite Coxeter type.

    Attributes:
        label: Normalised type symbol, e.g. "A3", "G2", "I2(7)"
        rank: Dimension of the reflection representation
        degrees: Fundamental invariant degrees d_1 <= ... <= d_rank
        positive_root_count: Number of reflecting hyperplanes
    """

    label: str
    rank: int
    degrees: Tuple[int, ...]
    positive_root_count: int

    def __post_init__(self):
        if len(self.degrees) != self.rank:
            raise ValueError(f"{self.label}: expected {self.rank} degrees, got {self.degrees}")
        if list(self.degrees) != sorted(self.degrees):
            raise ValueError(f"{self.label}: degrees must be sorted, got {self.degrees}")
        if self.positive_root_count != sum(d - 1 for d in self.degrees):
            raise ValueError(f"{self.label}: positive root count does not match sum(d_i - 1)")
        if self.degrees[-1] * self.rank != 2 * self.positive_root_count:
            raise ValueError(f"{self.label}: d_max * rank != 2 * positive roots")

    @property
    def family(self) -> str:
        return self.label[0]

    @property
    def coxeter_number(self) -> int:
        return self.degrees[-1]

    @property
    def is_crystallographic(self) -> bool:
        """True for Weyl groups, where the divisibility b_g(s) | b_xi(2s+1) is proved."""
        if self.family in 'ABCDEFG':
            return True
        if self.label.startswith('I2('):
            return int(self.label[3:-1]) in _CRYSTALLOGRAPHIC_DIHEDRAL
        return False

    @property
    def coverage(self) -> str:
        return 'proved' if self.is_crystallographic else 'conjectural coverage'

    @property
    def nd_root(self) -> Rational:
        """-rank / (number of hyperplanes)."""
        return -Rational(self.rank, self.positive_root_count)

    @property
    def witness_root(self) -> Rational:
        """-(1/2 + 1/d_max), the root of b_g matching the n/d root under s -> 2s+1."""
        return -(Rational(1, 2) + Rational(1, self.coxeter_number))


def _make(label: str, degrees: Tuple[int, ...]) -> CoxeterDatum:
    return CoxeterDatum(label=label, rank=len(degrees), degrees=tuple(sorted(degrees)),
                        positive_root_count=sum(d - 1 for d in degrees))


def degrees(label: str) -> CoxeterDatum:
    """
    Look up the fundamental degrees of a Coxeter type.

    Args:
        label: Type symbol such as "A3", "A_3", "B2", "D4", "E8", "H3", "I2(7)"

    Returns:
        The validated datum

    Raises:
        UnknownCoxeterTypeError: If the label is not a supported irreducible type
    """
    match = _LABEL.match(label)
    if not match:
        raise UnknownCoxeterTypeError(f"Unknown Coxeter type: {label!r}")
    family = match.group(1).upper()
    rank = int(match.group(2))
    parameter = match.group(3)

    if parameter is not None:
        if family != 'I' or rank != 2 or int(parameter) < 3:
            raise UnknownCoxeterTypeError(f"Unknown Coxeter type: {label!r}")
        m = int(parameter)
        return _make(f'I2({m})', (2, m))
    if family == 'A' and rank >= 1:
        return _make(f'A{rank}', tuple(range(2, rank + 2)))
    if family in 'BC' and rank >= 2:
        return _make(f'{family}{rank}', tuple(2 * k for k in range(1, rank + 1)))
    if family == 'D' and rank >= 4:
        return _make(f'D{rank}', tuple(range(2, 2 * rank - 1, 2)) + (rank,))
    key = f'{family}{rank}'
    if key in _EXCEPTIONAL_DEGREES:
        return _make(key, _EXCEPTIONAL_DEGREES[key])
    raise UnknownCoxeterTypeError(f"Unknown Coxeter type: {label!r}")


def braid_type(n: int) -> CoxeterDatum:
    """A_{n-1}, whose discriminant square root is the Vandermonde determinant xi_n."""
    if n < 2:
        raise ValueError(f"The braid arrangement needs n >= 2, got {n}")
    return degrees(f'A{n - 1}')


def supported_labels(max_rank: int = 8) -> List[str]:
    """Every supported label up to the given rank, dihedral types up to I2(12)."""
    labels = [f'A{r}' for r in range(1, max_rank + 1)]
    labels += [f'B{r}' for r in range(2, max_rank + 1)]
    labels += [f'C{r}' for r in range(2, max_rank + 1)]
    labels += [f'D{r}' for r in range(4, max_rank + 1)]
    labels += [key for key, degs in _EXCEPTIONAL_DEGREES.items() if len(degs) <= max_rank]
    labels += [f'I2({m})' for m in range(3, 13)]
    return labels


def opdam_bg(datum: CoxeterDatum) -> FactoredBPoly:
    """
    b-function of the discriminant viewed on the quotient h/W.

    b_g(s) = prod_i prod_{j=1}^{d_i - 1} (s + 1/2 + j/d_i)
    """
    return FactoredBPoly(-(Rational(1, 2) + Rational(j, d))
                         for d in datum.degrees for j in range(1, d))


def nd_root_check(b: FactoredBPoly, datum: CoxeterDatum) -> bool:
    """True iff -rank/(number of hyperplanes) is a root of b."""
    return b.multiplicity(datum.nd_root) > 0


def has_witness_root(datum: CoxeterDatum) -> bool:
    """True iff opdam_bg(datum) contains the factor (s + 1/2 + 1/d_max)."""
    return opdam_bg(datum).multiplicity(datum.witness_root) > 0


def budur_check(bg: FactoredBPoly, bxi: FactoredBPoly) -> bool:
    """True iff bg(s) divides bxi(2s + 1)."""
    return divides(bg, affine_substitute(bxi, 2, 1))


# Transcription guard for the static tables.
for _key in _EXCEPTIONAL_DEGREES:
    degrees(_key)
