"""Symbols with parameters (r, s): shift equivalence, rank, addition and
the bijection with bipartitions.

Rows are stored in increasing order, the way symbols are usually written::

    [a_1, ..., a_{m+d} ; b_1, ..., b_m]

A pair of rows is a valid symbol when consecutive entries of each row differ
by at least ``r + s``, ``b_1 >= s`` and the rank, solved from the row sums,
is non-negative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    BottomEntryTooSmall,
    DefectMismatch,
    GapViolation,
    NegativeRank,
    NotReducible,
    ParameterMismatch,
    SymbolError,
    WrongParameters,
)
from .partitions import Bipartition, Partition, partitions

EMPTY_ROW = "∅"


def rank_correction(r: int, s: int, m: int, d: int) -> int:
    """Row-sum excess of a symbol over its rank, r(m+e)(m+d-e-1) + s(m+e)(m+d-e)."""
    e = d // 2
    return r * (m + e) * (m + d - e - 1) + s * (m + e) * (m + d - e)


def _check_row(row, gap, name):
    for x in row:
        if isinstance(x, bool) or not isinstance(x, int):
            raise SymbolError(f"{name} entries must be integers, got {x!r}")
        if x < 0:
            raise SymbolError(f"{name} entries must be non-negative, got {x}")
    for i in range(1, len(row)):
        if row[i] - row[i - 1] < gap:
            raise GapViolation(
                f"{name} gap {row[i] - row[i - 1]} between positions {i - 1} and {i} is below r+s={gap}"
            )


@dataclass(frozen=True)
class Symbol:
    r: int
    s: int
    row_a: tuple[int, ...]
    row_b: tuple[int, ...]
    rank: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.r < 0 or self.s < 0:
            raise SymbolError(f"parameters must be non-negative, got r={self.r}, s={self.s}")
        object.__setattr__(self, "row_a", tuple(self.row_a))
        object.__setattr__(self, "row_b", tuple(self.row_b))
        gap = self.r + self.s
        _check_row(self.row_a, gap, "top row")
        _check_row(self.row_b, gap, "bottom row")
        if self.row_b and self.row_b[0] < self.s:
            raise BottomEntryTooSmall(f"b_1={self.row_b[0]} is below s={self.s}")
        rank = sum(self.row_a) + sum(self.row_b) - rank_correction(self.r, self.s, self.m, self.d)
        if rank < 0:
            raise NegativeRank(f"rows {self.row_a}, {self.row_b} give rank {rank}")
        object.__setattr__(self, "rank", rank)

    @property
    def m(self) -> int:
        return len(self.row_b)

    @property
    def d(self) -> int:
        return len(self.row_a) - len(self.row_b)

    @property
    def params(self) -> tuple[int, int]:
        return self.r, self.s

    def entries(self) -> list[int]:
        return sorted(self.row_a + self.row_b)

    def __str__(self):
        return format_symbol(self)


def make_symbol(r: int, s: int, row_a: Iterable[int], row_b: Iterable[int]) -> Symbol:
    return Symbol(r, s, tuple(row_a), tuple(row_b))


def format_symbol(x: Symbol) -> str:
    def row(entries):
        return ",".join(map(str, entries)) if entries else EMPTY_ROW

    return f"[{row(x.row_a)};{row(x.row_b)}]"


def unit(d: int, r: int = 0, s: int = 0) -> Symbol:
    """The only rank-0 class for defect 0 or 1, in its shortest form."""
    if d == 0:
        return Symbol(r, s, (), ())
    if d == 1:
        return Symbol(r, s, (0,), ())
    raise ValueError(f"unit symbols exist for d in {{0, 1}}, got {d}")


def shift(x: Symbol) -> Symbol:
    g = x.r + x.s
    return Symbol(x.r, x.s, (0,) + tuple(a + g for a in x.row_a), (x.s,) + tuple(b + g for b in x.row_b))


def is_reducible(x: Symbol) -> bool:
    return x.m >= 1 and bool(x.row_a) and x.row_a[0] == 0 and x.row_b[0] == x.s


def unshift(x: Symbol) -> Symbol:
    if not is_reducible(x):
        raise NotReducible(f"{x} is not the shift of another symbol")
    g = x.r + x.s
    return Symbol(x.r, x.s, tuple(a - g for a in x.row_a[1:]), tuple(b - g for b in x.row_b[1:]))


def canonical(x: Symbol) -> Symbol:
    """Fully unshifted representative of the class of ``x``."""
    while is_reducible(x):
        x = unshift(x)
    return x


def shift_to(x: Symbol, m: int) -> Symbol:
    if m < x.m:
        raise ValueError(f"cannot shift {x} down to m={m}")
    while x.m < m:
        x = shift(x)
    return x


def equivalent(x: Symbol, y: Symbol) -> bool:
    if x.params != y.params:
        raise ParameterMismatch(f"parameters {x.params} and {y.params} differ")
    return canonical(x) == canonical(y)


def add(x: Symbol, y: Symbol, canonicalize: bool = True) -> Symbol:
    """Sum of two symbols of equal defect.

    The operand with fewer rows is shifted until both have the same length,
    then rows are added entrywise.  With ``canonicalize=False`` the aligned
    sum is returned as is.
    """
    if x.d != y.d:
        raise DefectMismatch(f"defects {x.d} and {y.d} differ")
    m = max(x.m, y.m)
    x, y = shift_to(x, m), shift_to(y, m)
    z = Symbol(
        x.r + y.r,
        x.s + y.s,
        tuple(a + b for a, b in zip(x.row_a, y.row_a)),
        tuple(a + b for a, b in zip(x.row_b, y.row_b)),
    )
    return canonical(z) if canonicalize else z


def _increasing_rows(length: int, lo: int, gap: int, budget: int, exact: bool) -> Iterator[tuple[int, ...]]:
    """Sequences of ``length`` integers >= lo with consecutive gaps >= gap whose
    sum is ``budget`` (exact) or at most ``budget``."""
    if length == 0:
        if not exact or budget == 0:
            yield ()
        return
    # smallest possible sum of the whole row once the first entry is x
    base = gap * length * (length - 1) // 2
    x = lo
    while length * x + base <= budget:
        for rest in _increasing_rows(length - 1, x + gap, gap, budget - x, exact):
            yield (x,) + rest
        x += 1


def enumerate_symbols(rank: int, d: int, r: int = 0, s: int = 0) -> Iterator[Symbol]:
    """Canonical representatives of every class of the given rank, defect and parameters."""
    if rank < 0:
        return
    g = r + s
    # a canonical symbol with m bottom entries has rank >= min(m, m + d)
    for m in range(max(0, -d), rank + max(0, -d) + 1):
        total = rank + rank_correction(r, s, m, d)
        min_b = s * m + g * m * (m - 1) // 2
        for row_a in _increasing_rows(m + d, 0, g, total - min_b, exact=False):
            rest = total - sum(row_a)
            # canonical: not (a_1 = 0 and b_1 = s)
            lo_b = s + 1 if m and row_a and row_a[0] == 0 else s
            for row_b in _increasing_rows(m, lo_b, g, rest, exact=True):
                yield Symbol(r, s, row_a, row_b)


def _require_bipartition_params(x: Symbol):
    if x.r != 0 or x.s != 0 or x.d != 1:
        raise WrongParameters(f"expected r=s=0 and d=1, got r={x.r}, s={x.s}, d={x.d}")


def bipartition_to_symbol(bp: Bipartition | Sequence[Sequence[int]]) -> Symbol:
    alpha, beta = (Partition(bp[0]), Partition(bp[1]))
    m = max(len(alpha) - 1, len(beta), 0)
    row_a = (0,) * (m + 1 - len(alpha)) + tuple(reversed(alpha))
    row_b = (0,) * (m - len(beta)) + tuple(reversed(beta))
    return Symbol(0, 0, row_a, row_b)


def symbol_to_bipartition(x: Symbol) -> Bipartition:
    _require_bipartition_params(x)
    alpha = Partition(sorted((a for a in x.row_a if a), reverse=True))
    beta = Partition(sorted((b for b in x.row_b if b), reverse=True))
    return Bipartition(alpha, beta)


def is_Y_symbol(x: Symbol) -> bool:
    """Membership in the subset whose top row sum strictly exceeds the bottom one."""
    _require_bipartition_params(x)
    x = canonical(x)
    return sum(x.row_a) > sum(x.row_b)


def bipartitions(n: int) -> Iterator[Bipartition]:
    """All bipartitions of n, ordered by the size of the first component."""
    for k in range(n, -1, -1):
        for alpha in partitions(k):
            for beta in partitions(n - k):
                yield Bipartition(alpha, beta)
