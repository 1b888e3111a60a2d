"""Proved properties of b_{xi_n} evaluated as executable checks."""

import logging
from math import comb
from typing import Dict, List, Optional

import pandas as pd
from sympy import Rational

from .config import Config
from .coxeter import braid_type, budur_check, nd_root_check, opdam_bg
from .engine import BFunctionEngine, BFunctionReport
from .factored import divides, is_symmetric_about, root_extrema
from .partitions import integer_partitions, point_with_shape

logger = logging.getLogger(__name__)

REQUIRED_CHECKS = (
    'symmetry', 'nd_root', 'partition_divisibility', 'budur', 'interval',
    'upper_bound_divisibility',
)


class InvariantSuite:
    """Runs every invariant check on b_{xi_n} for a range of n."""

    def __init__(self, engine: Optional[BFunctionEngine] = None,
                 config: Optional[Config] = None):
        self.config = config or (engine.config if engine else Config())
        self.engine = engine or BFunctionEngine(self.config)

    def run(self, n_max: int) -> List[BFunctionReport]:
        """
        Build one report per n in 2..n_max.

        Args:
            n_max: Largest n, at least 2

        Returns:
            Reports in increasing n
        """
        if n_max < 2:
            raise ValueError(f"n_max must be at least 2, got {n_max}")
        reports = []
        for n in range(2, n_max + 1):
            logger.info("Checking invariants for n=%d", n)
            reports.append(self.analyze(n))
        return reports

    def analyze(self, n: int) -> BFunctionReport:
        """Evaluate every check for a single n."""
        engine = self.engine
        b = engine.b_xi(n)
        method = 'set_partitions' if n <= self.config.max_set_partition_n else 'shapes'
        min_jump = engine.min_jumping_coefficient(n, method=method)
        kashiwara = engine.kashiwara_cover(n)
        blowup_cover = engine.blowup_cover(n)

        checks: Dict[str, bool] = {
            'symmetry': is_symmetric_about(b, -1),
            'nd_root': self._check_nd_root(n),
            'partition_divisibility': self._check_partition_divisibility(n),
            'budur': budur_check(opdam_bg(braid_type(n)), b),
            'interval': self._check_interval(n),
            'upper_bound_divisibility': divides(b, engine.upper_bound_b(n)),
            'jumping_coefficient': min_jump == -root_extrema(b)[0],
            'local_consistency': self._check_local_consistency(n),
            'kashiwara_cover': kashiwara is not None,
            'blowup_conjecture': blowup_cover is not None,
        }
        report = BFunctionReport(
            n=n,
            conjectured=b,
            blowup=engine.blowup_b(n),
            upper_bound=engine.upper_bound_b(n),
            min_jump=min_jump,
            checks=checks,
            kashiwara=kashiwara,
            blowup_cover=blowup_cover,
        )
        if not report.passed:
            logger.warning("n=%d failed checks: %s", n, ', '.join(report.failed_checks()))
        return report

    def _check_nd_root(self, n: int) -> bool:
        """-(n-1)/binom(n,2) is the largest root and the A_{n-1} n/d root."""
        b = self.engine.b_xi(n)
        expected = -Rational(n - 1, comb(n, 2))
        return root_extrema(b)[0] == expected and nd_root_check(b, braid_type(n))

    def _check_partition_divisibility(self, n: int) -> bool:
        b = self.engine.b_xi(n)
        return all(divides(self.engine.b_partition(lam), b) for lam in integer_partitions(n))

    def _check_interval(self, n: int) -> bool:
        """Roots in [-(n-1)^2/binom(n,2), -(n-1)/binom(n,2)], inside (-2, 0)."""
        c = comb(n, 2)
        low, high = -Rational((n - 1) ** 2, c), -Rational(n - 1, c)
        if not (-2 < low and high < 0):
            return False
        return all(low <= root <= high for root, _ in self.engine.b_xi(n))

    def _check_local_consistency(self, n: int) -> bool:
        """local_b at a point of each shape, and at its reversal, is b_{xi_lambda}."""
        for lam in integer_partitions(n):
            point = point_with_shape(lam)
            expected = self.engine.b_partition(lam)
            if self.engine.local_b(point) != expected:
                return False
            if self.engine.local_b(list(reversed(point))) != expected:
                return False
        return True


def run_invariant_suite(n_max: int, engine: Optional[BFunctionEngine] = None) -> List[BFunctionReport]:
    """Reports for n = 2..n_max; every report carries at least REQUIRED_CHECKS."""
    return InvariantSuite(engine=engine).run(n_max)


def reports_to_frame(reports: List[BFunctionReport]) -> pd.DataFrame:
    """One row per n with the headline values and one column per check."""
    rows = []
    for report in reports:
        row = {
            'n': report.n,
            'conjectured': str(report.conjectured),
            'min_jump': str(report.min_jump),
            'kashiwara': '-' if report.kashiwara is None else f'{report.kashiwara}',
            'blowup_cover': '-' if report.blowup_cover is None else report.blowup_cover,
        }
        row.update(report.checks)
        row['passed'] = report.passed
        rows.append(row)
    return pd.DataFrame(rows)
