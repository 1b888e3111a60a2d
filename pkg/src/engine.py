"""b-function formulas for the Vandermonde determinant and its strata."""

import logging
import threading
from dataclasses import dataclass, field
from math import comb
from typing import Dict, Optional, Sequence, Tuple

from sympy import Rational

from .config import Config
from .factored import (FactoredBPoly, RationalLike, divides, lcm, product,
                       product_of)
from .jumping import min_jumping_coefficient
from .partitions import IntegerPartition, integer_partitions, set_partition_of_point, shape

logger = logging.getLogger(__name__)


@dataclass
class BFunctionReport:
    """Everything the invariant suite computes for one n."""

    n: int
    conjectured: FactoredBPoly
    blowup: FactoredBPoly
    upper_bound: FactoredBPoly
    min_jump: Rational
    checks: Dict[str, bool] = field(default_factory=dict)
    kashiwara: Optional[Tuple[int, int]] = None
    blowup_cover: Optional[int] = None

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failed_checks(self):
        return [name for name, ok in self.checks.items() if not ok]

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'conjectured': self.conjectured.to_json(),
            'blowup': self.blowup.to_json(),
            'upper_bound': self.upper_bound.to_json(),
            'min_jump': {'num': int(self.min_jump.p), 'den': int(self.min_jump.q)},
            'kashiwara': list(self.kashiwara) if self.kashiwara else None,
            'blowup_cover': self.blowup_cover,
            'checks': dict(self.checks),
            'passed': self.passed,
        }


class BFunctionEngine:
    """
    Evaluates the recursive formulas for b_{xi_n} and the bounds around it.

    Results for b_{xi_n} are memoised per n; the memo can be seeded from and
    exported to a BFunctionCache.
    """

    def __init__(self, config: Optional[Config] = None,
                 cache: Optional[Dict[int, FactoredBPoly]] = None):
        """
        Initialize the engine.

        Args:
            config: Search bounds and limits
            cache: Previously computed b_{xi_n} keyed by n
        """
        self.config = config or Config()
        self._memo: Dict[int, FactoredBPoly] = dict(cache or {})
        self._proper_lcm: Dict[int, FactoredBPoly] = {}
        self._lock = threading.Lock()
        self.cache_hits = 0

    @property
    def memo(self) -> Dict[int, FactoredBPoly]:
        """A snapshot of the memoised b_{xi_n}."""
        return dict(self._memo)

    def b_xi(self, n: int) -> FactoredBPoly:
        """
        Conjectured b-function of xi_n.

        b_{xi_n}(s) = lcm_{lambda |- n, lambda != (n)} b_{xi_lambda}(s)
                      * prod_{i=n-1}^{(n-1)^2} (s + i/binom(n,2))

        The two blocks are multiplied as written, so shared roots add up.
        b_{xi_0} = b_{xi_1} = 1.
        """
        if n < 0:
            raise ValueError(f"n must be non-negative, got {n}")
        cached = self._memo.get(n)
        if cached is not None:
            self.cache_hits += 1
            logger.debug("b_xi(%d) served from memo", n)
            return cached
        if n <= 1:
            result = FactoredBPoly.one()
        else:
            result = product(self.proper_lcm(n),
                             FactoredBPoly.linear_block(n - 1, (n - 1) ** 2, comb(n, 2)))
        with self._lock:
            self._memo.setdefault(n, result)
        return result

    def proper_lcm(self, n: int) -> FactoredBPoly:
        """lcm of b_{xi_lambda} over partitions lambda of n other than (n)."""
        cached = self._proper_lcm.get(n)
        if cached is not None:
            return cached
        result = lcm(self.b_partition(lam) for lam in integer_partitions(n)
                     if not lam.is_single_block())
        with self._lock:
            self._proper_lcm.setdefault(n, result)
        return result

    def b_partition(self, lam: IntegerPartition) -> FactoredBPoly:
        """b_{xi_lambda} = prod_i b_{xi_{lambda_i}} (blocks in disjoint variables)."""
        return product_of(self.b_xi(part) for part in lam.parts)

    def local_b(self, q: Sequence[RationalLike]) -> FactoredBPoly:
        """Local b-function of xi_n at the point q; depends only on its coincidence shape."""
        return self.b_partition(shape(set_partition_of_point(q)))

    def blowup_b(self, n: int) -> FactoredBPoly:
        """
        b-function of the pullback of xi_n to the blow-up along the diagonal.

        lcm_{lambda != (n)} b_{xi_lambda}(s) * prod_{i=1}^{binom(n,2)} (s + i/binom(n,2))
        """
        self._require_braid(n)
        c = comb(n, 2)
        return product(self.proper_lcm(n), FactoredBPoly.linear_block(1, c, c))

    def upper_bound_b(self, n: int) -> FactoredBPoly:
        """
        Polynomial known to be divisible by b_{xi_n}.

        lcm b_{xi_lambda}(s) * lcm b_{xi_lambda}(s+1) * prod_{i=n-1}^{(n-1)^2} (s + i/binom(n,2))
        """
        self._require_braid(n)
        proper = self.proper_lcm(n)
        block = FactoredBPoly.linear_block(n - 1, (n - 1) ** 2, comb(n, 2))
        return product_of([proper, proper.shift(1), block])

    def kashiwara_cover(self, n: int, max_n: Optional[int] = None,
                        max_m: Optional[int] = None) -> Optional[Tuple[int, int]]:
        """
        Lexicographically smallest (N, M) with

            b_{xi_n} | prod_{k=0}^{N} lcm b_{xi_lambda}(s+k) * prod_{i=1}^{M} (s + i/binom(n,2))

        Args:
            n: n >= 2
            max_n: Largest N tried (Config.kashiwara_max_n by default)
            max_m: Largest M tried (Config.kashiwara_max_m by default)

        Returns:
            (N, M), or None when no pair within the bounds works
        """
        self._require_braid(n)
        max_n = self.config.kashiwara_max_n if max_n is None else max_n
        max_m = self.config.kashiwara_max_m if max_m is None else max_m
        target = self.b_xi(n)
        proper = self.proper_lcm(n)
        c = comb(n, 2)

        shifted = FactoredBPoly.one()
        for big_n in range(max_n + 1):
            shifted = product(shifted, proper.shift(big_n))
            cover = shifted
            for m in range(max_m + 1):
                if m:
                    cover = product(cover, FactoredBPoly([-Rational(m, c)]))
                if divides(target, cover):
                    logger.debug("Kashiwara cover for n=%d: N=%d, M=%d", n, big_n, m)
                    return big_n, m
        return None

    def blowup_cover(self, n: int, max_m: Optional[int] = None) -> Optional[int]:
        """
        Smallest M with b_{xi_n} | lcm b_{xi_lambda}(s) * prod_{i=1}^{M} (s + i/binom(n,2)).

        This is the sharpened blow-up bound without shifted lcm factors.
        """
        max_m = self.config.kashiwara_max_m if max_m is None else max_m
        cover = self.kashiwara_cover(n, max_n=0, max_m=max_m)
        return None if cover is None else cover[1]

    def blowup_shift_cover(self, n: int, max_n: Optional[int] = None) -> Optional[int]:
        """Smallest N with b_{xi_n}(s) | prod_{k=0}^{N} b_blowup(s + k)."""
        self._require_braid(n)
        max_n = self.config.kashiwara_max_n if max_n is None else max_n
        target = self.b_xi(n)
        blowup = self.blowup_b(n)
        cover = FactoredBPoly.one()
        for big_n in range(max_n + 1):
            cover = product(cover, blowup.shift(big_n))
            if divides(target, cover):
                return big_n
        return None

    def min_jumping_coefficient(self, n: int, method: str = 'set_partitions') -> Rational:
        return min_jumping_coefficient(n, method=method, engine=self,
                                       max_set_partition_n=self.config.max_set_partition_n)

    @staticmethod
    def _require_braid(n: int) -> None:
        if n < 2:
            raise ValueError(f"n must be at least 2, got {n}")
