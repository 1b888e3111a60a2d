"""Flats of the braid arrangement and its minimal jumping coefficient."""

import logging
from math import comb
from typing import TYPE_CHECKING, Iterable, List, Tuple

import pandas as pd
from sympy import Rational

from .partitions import integer_partitions, iter_set_partitions, shape

if TYPE_CHECKING:
    from .engine import BFunctionEngine

logger = logging.getLogger(__name__)

METHODS = ('set_partitions', 'shapes', 'local')


def flat_data(block_sizes: Iterable[int]) -> Tuple[int, int]:
    """
    (codimension, number of hyperplanes containing it) for the flat of a set partition.

    The flat {x_i = x_j for i, j in a common block} has codimension
    n - #blocks and lies on sum_B binom(|B|, 2) hyperplanes.
    """
    sizes = list(block_sizes)
    return sum(sizes) - len(sizes), sum(comb(size, 2) for size in sizes)


def _minimum_ratio(ratios: Iterable[Tuple[int, int]]) -> Tuple[int, int]:
    best_num, best_den = None, None
    for num, den in ratios:
        if den == 0:
            continue
        if best_num is None or num * best_den < best_num * den:
            best_num, best_den = num, den
    if best_num is None:
        raise ValueError("No nontrivial flat to minimise over")
    return best_num, best_den


def min_jumping_coefficient(n: int, method: str = 'set_partitions',
                            engine: 'BFunctionEngine' = None,
                            max_set_partition_n: int = 12) -> Rational:
    """
    Minimal jumping coefficient of the braid arrangement V(xi_n).

    Args:
        n: Number of coordinates, n >= 2
        method: "set_partitions" minimises codim/#hyperplanes over every
            nontrivial set partition; "shapes" does the same over block-size
            patterns; "local" uses (n-1)/binom(n,2) together with the largest
            roots of the local b-functions away from the most singular stratum
        engine: Needed for the "local" method
        max_set_partition_n: Ceiling for the brute-force enumeration

    Returns:
        The exact minimal jumping coefficient
    """
    if n < 2:
        raise ValueError(f"The braid arrangement needs n >= 2, got {n}")
    if method not in METHODS:
        raise ValueError(f"Unknown method {method!r}; expected one of {METHODS}")

    if method == 'set_partitions':
        if n > max_set_partition_n:
            raise ValueError(f"Brute force over set partitions is limited to n <= {max_set_partition_n}")
        logger.info("Enumerating set partitions of {1..%d}", n)
        num, den = _minimum_ratio(flat_data(p.block_sizes()) for p in iter_set_partitions(n))
        return Rational(num, den)

    if method == 'shapes':
        num, den = _minimum_ratio(flat_data(lam.parts) for lam in integer_partitions(n))
        return Rational(num, den)

    if engine is None:
        raise ValueError("The local method needs a BFunctionEngine")
    candidates = [Rational(n - 1, comb(n, 2))]
    for lam in integer_partitions(n):
        if lam.is_single_block() or lam.is_trivial():
            continue
        extrema = engine.b_partition(lam).factors
        candidates.append(-extrema[0][0])
    return min(candidates)


def flat_summary(n: int, max_set_partition_n: int = 12) -> pd.DataFrame:
    """
    Flats of the braid arrangement grouped by shape.

    Returns:
        DataFrame with one row per nontrivial shape: number of flats,
        codimension, hyperplanes through the flat and their ratio
    """
    if n < 2:
        raise ValueError(f"The braid arrangement needs n >= 2, got {n}")
    if n > max_set_partition_n:
        raise ValueError(f"Flat enumeration is limited to n <= {max_set_partition_n}")
    counts = {}
    for partition in iter_set_partitions(n):
        if partition.is_trivial():
            continue
        key = shape(partition)
        counts[key] = counts.get(key, 0) + 1

    rows: List[dict] = []
    for lam, count in sorted(counts.items(), key=lambda item: item[0].parts, reverse=True):
        codim, hyperplanes = flat_data(lam.parts)
        rows.append({
            'shape': str(lam),
            'flats': count,
            'codim': codim,
            'hyperplanes': hyperplanes,
            'ratio': str(Rational(codim, hyperplanes)),
        })
    return pd.DataFrame(rows)
