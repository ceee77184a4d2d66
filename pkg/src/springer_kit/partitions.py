"""Partitions, the symplectic class set P_1(2n) and component-group orders.

A unipotent class of Sp_2n is labelled by the sizes of its Jordan blocks,
a partition of 2n in which every odd part occurs an even number of times.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from . import config
from .errors import BoundExceeded, NonPositivePart, NotSorted, PartitionError


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Construction validates and never reorders the input.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int):
                raise PartitionError(f"parts must be integers, got {p!r}")
            if p < 1:
                raise NonPositivePart(f"part {p} is not positive in {parts}")
        for i in range(len(parts) - 1):
            if parts[i] < parts[i + 1]:
                raise NotSorted(f"parts {parts} are not weakly decreasing at position {i}")
        return super().__new__(cls, parts)

    @property
    def rank(self) -> int:
        return sum(self)

    def multiplicity(self, part: int) -> int:
        return self.count(part)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def __repr__(self):
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self):
        return format_partition(self)


def validate_partition(parts: Iterable[int]) -> Partition:
    return Partition(parts)


def format_partition(p: Iterable[int]) -> str:
    return "[" + ",".join(str(x) for x in p) + "]"


class Bipartition(NamedTuple):
    """Ordered pair of partitions, labelling an irreducible character of W(B_n)."""

    alpha: Partition
    beta: Partition

    @classmethod
    def of(cls, alpha: Iterable[int] = (), beta: Iterable[int] = ()) -> "Bipartition":
        return cls(Partition(alpha), Partition(beta))

    @property
    def rank(self) -> int:
        return self.alpha.rank + self.beta.rank

    def __str__(self):
        return f"[{format_partition(self.alpha)},{format_partition(self.beta)}]"


@dataclass(frozen=True)
class SymplecticClassLabel:
    """A partition of 2n labelling a unipotent class of Sp_2n."""

    partition: Partition
    n: int

    def __post_init__(self):
        if not isinstance(self.partition, Partition):
            object.__setattr__(self, "partition", Partition(self.partition))
        if self.partition.rank != 2 * self.n:
            raise PartitionError(f"{self.partition} is not a partition of 2*{self.n}")
        if not is_symplectic_class(self.partition):
            raise PartitionError(f"{self.partition} has an odd part of odd multiplicity")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "SymplecticClassLabel":
        p = Partition(parts)
        if p.rank % 2:
            raise PartitionError(f"{p} has odd total {p.rank}")
        return cls(p, p.rank // 2)

    def __str__(self):
        return str(self.partition)


def is_symplectic_class(p: Iterable[int]) -> bool:
    p = tuple(p)
    if sum(p) % 2:
        return False
    return all(mult % 2 == 0 for part, mult in Counter(p).items() if part % 2)


def partitions(total: int, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of ``total`` in decreasing lexicographic order."""
    if largest is None:
        largest = total

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(total, largest):
        yield Partition(parts)


def enumerate_symplectic_classes(n: int, bound: int | None = None) -> list[SymplecticClassLabel]:
    """All labels in P_1(2n), largest partition first."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if bound is None:
        bound = config.max_rank()
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the enumeration bound {bound}")
    return [SymplecticClassLabel(p, n) for p in partitions(2 * n) if is_symplectic_class(p)]


def n_delta(label: SymplecticClassLabel | Iterable[int]) -> tuple[int, int]:
    """Return (number of distinct even parts, 1 if some even part has odd multiplicity else 0)."""
    parts = label.partition if isinstance(label, SymplecticClassLabel) else tuple(label)
    even = {part: mult for part, mult in Counter(parts).items() if part % 2 == 0}
    n_u = len(even)
    delta_u = int(any(mult % 2 for mult in even.values()))
    return n_u, delta_u


def component_group_order(label: SymplecticClassLabel | Iterable[int]) -> int:
    """|A(u)| = 2^(n(u) - delta(u)) for the unipotent class in the connected-centre group."""
    n_u, delta_u = n_delta(label)
    return 2 ** (n_u - delta_u)


def double(mu: Iterable[int]) -> Partition:
    return Partition(2 * p for p in mu)


def halve(lam: Iterable[int]) -> Partition | None:
    """Inverse of :func:`double`; ``None`` when some part is odd."""
    lam = tuple(lam)
    if any(p % 2 for p in lam):
        return None
    return Partition(p // 2 for p in lam)
