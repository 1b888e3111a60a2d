"""Integer and set partition combinatorics."""

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from sympy import Rational
from sympy.utilities.iterables import multiset_partitions, partitions

from .factored import RationalLike, to_rational


@dataclass(frozen=True)
class IntegerPartition:
    """A partition lambda = (lambda_1 >= ... >= lambda_r) of n = sum(parts)."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"Partition parts must be positive: {parts}")
        if list(parts) != sorted(parts, reverse=True):
            raise ValueError(f"Partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> 'IntegerPartition':
        """Build a partition from parts in any order."""
        return cls(tuple(sorted((int(p) for p in parts), reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def is_single_block(self) -> bool:
        return len(self.parts) == 1

    def is_trivial(self) -> bool:
        """True for (1, ..., 1): no two coordinates coincide."""
        return all(p == 1 for p in self.parts)

    def __str__(self) -> str:
        return '(' + ','.join(str(p) for p in self.parts) + ')'


@dataclass(frozen=True)
class SetPartition:
    """
    A set partition of {1, ..., n} into nonempty blocks.

    Blocks are stored as sorted tuples and ordered by their smallest element.
    """

    blocks: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        blocks = [tuple(sorted(int(i) for i in block)) for block in self.blocks]
        if any(not block for block in blocks):
            raise ValueError("Set partition blocks must be nonempty")
        blocks.sort(key=lambda block: block[0])
        elements = [i for block in blocks for i in block]
        n = len(elements)
        if sorted(elements) != list(range(1, n + 1)):
            raise ValueError(f"Blocks must be disjoint and cover 1..{n}: {blocks}")
        object.__setattr__(self, 'blocks', tuple(blocks))

    @property
    def n(self) -> int:
        return sum(len(block) for block in self.blocks)

    def block_sizes(self) -> List[int]:
        return [len(block) for block in self.blocks]

    def is_trivial(self) -> bool:
        """True when every block is a singleton."""
        return all(len(block) == 1 for block in self.blocks)

    def __str__(self) -> str:
        return '{' + ','.join('{' + ','.join(map(str, b)) + '}' for b in self.blocks) + '}'


def integer_partitions(n: int) -> List[IntegerPartition]:
    """
    All partitions of n in reverse lexicographic order.

    Args:
        n: Non-negative integer; n = 0 gives the single empty partition

    Returns:
        List of partitions, e.g. n=3 -> [(3), (2,1), (1,1,1)]
    """
    if n < 0:
        raise ValueError(f"Cannot partition a negative integer: {n}")
    if n == 0:
        return [IntegerPartition(())]
    result = []
    for multiplicities in partitions(n):
        parts = [part for part, count in multiplicities.items() for _ in range(count)]
        result.append(IntegerPartition.of(parts))
    result.sort(key=lambda lam: lam.parts, reverse=True)
    return result


def iter_set_partitions(n: int) -> Iterator[SetPartition]:
    """
    Enumerate the Bell(n) set partitions of {1, ..., n}.

    The order is the one of sympy's ``multiset_partitions`` on distinct
    elements, which is deterministic.
    """
    if n < 0:
        raise ValueError(f"Cannot partition a negative number of elements: {n}")
    if n == 0:
        yield SetPartition(())
        return
    for blocks in multiset_partitions(list(range(1, n + 1))):
        yield SetPartition(tuple(tuple(block) for block in blocks))


def set_partitions(n: int) -> List[SetPartition]:
    return list(iter_set_partitions(n))


def set_partition_of_point(q: Sequence[RationalLike]) -> SetPartition:
    """
    The level-set partition of a point: i, j share a block iff q_i == q_j exactly.

    Args:
        q: Nonempty sequence of exact rational coordinates

    Returns:
        The set partition of {1, ..., len(q)}
    """
    if not q:
        raise ValueError("A point needs at least one coordinate")
    levels: Dict[Rational, List[int]] = {}
    for index, coordinate in enumerate(q, start=1):
        levels.setdefault(to_rational(coordinate), []).append(index)
    return SetPartition(tuple(tuple(block) for block in levels.values()))


def shape(partition: SetPartition) -> IntegerPartition:
    """Block sizes in weakly decreasing order."""
    return IntegerPartition.of(partition.block_sizes())


def standard_set_partition(lam: IntegerPartition) -> SetPartition:
    """P_1 = {1..lambda_1}, P_2 = {lambda_1+1 .. lambda_1+lambda_2}, and so on."""
    blocks = []
    start = 1
    for part in lam.parts:
        blocks.append(tuple(range(start, start + part)))
        start += part
    return SetPartition(tuple(blocks))


def point_with_shape(lam: IntegerPartition) -> List[Rational]:
    """A point of C^n whose coincidence pattern is the standard set partition of lam."""
    return [Rational(block_index) for block_index, part in enumerate(lam.parts)
            for _ in range(part)]
