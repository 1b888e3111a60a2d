"""Configuration settings for the b-function toolkit."""

from dataclasses import dataclass
from typing import Tuple


@dataclass
class Config:
    """Configuration for the engine, the oracle and the command line."""

    # Bernstein operator ansatz (defaults reach the essential form of xi_3)
    oracle_order: int = 4
    oracle_s_degree: int = 1
    oracle_coeff_degree: int = 1
    homogeneous_ansatz: bool = True

    # Cover searches
    kashiwara_max_n: int = 5
    kashiwara_max_m: int = 200

    # Flat enumeration grows like the Bell numbers
    max_set_partition_n: int = 12

    # Invariant suite
    suite_n_max: int = 10
    lemma_n_max: int = 6

    # Result cache
    cache_path: str = '.bfunction_cache.json'
    cache_version: int = 1
    use_cache: bool = True

    # Output options
    json_indent: int = 2
    table_columns: Tuple[str, ...] = (
        'n', 'conjectured', 'min_jump', 'kashiwara', 'blowup_cover', 'passed'
    )

    @property
    def oracle_bounds(self) -> dict:
        """Keyword arguments for BernsteinOracle.find_bernstein."""
        return {
            'order_bound': self.oracle_order,
            's_degree_bound': self.oracle_s_degree,
            'coeff_degree_bound': self.oracle_coeff_degree,
        }

    @property
    def kashiwara_bounds(self) -> dict:
        return {
            'max_n': self.kashiwara_max_n,
            'max_m': self.kashiwara_max_m,
        }
