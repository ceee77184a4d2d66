"""Combinatorial Springer correspondence for Sp_2n.

A character of W(B_n), written as a bipartition symbol with r = s = 0,
goes to the symbol with r = s = 1 obtained by adding the unit
``[0;∅]``.  The unipotent class of a distinct-entry symbol is read off
from its sorted entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotInImage, RepeatedEntries, SymbolError
from .partitions import Bipartition, Partition, SymplecticClassLabel
from .symbols import Symbol, add, bipartition_to_symbol, canonical, make_symbol, symbol_to_bipartition, unit

SPRINGER_UNIT = unit(1, 1, 1)


@dataclass(frozen=True)
class SpringerImage:
    symbol: Symbol
    source: Bipartition

    @property
    def rank(self) -> int:
        return self.symbol.rank


def springer(bp: Bipartition | Sequence[Sequence[int]]) -> SpringerImage:
    bp = Bipartition(Partition(bp[0]), Partition(bp[1]))
    return SpringerImage(add(bipartition_to_symbol(bp), SPRINGER_UNIT), bp)


def is_springer_image(x) -> bool:
    """True iff ``x`` is a valid symbol with r = s = 1 and defect 1.

    ``x`` is a :class:`Symbol` or an ``(r, s, row_a, row_b)`` tuple; the
    tuple form lets rows that fail the symbol conditions be tested.
    """
    if not isinstance(x, Symbol):
        try:
            x = make_symbol(*x)
        except SymbolError:
            return False
    return x.r == 1 and x.s == 1 and x.d == 1


def springer_inverse(x: Symbol) -> Bipartition:
    if not is_springer_image(x):
        raise NotInImage(f"{x} (r={x.r}, s={x.s}, d={x.d}) is not a Springer symbol")
    x = canonical(x)
    # subtract the unit shifted to the same length: [0,2,..,2m ; 1,3,..,2m-1]
    row_a = [a - 2 * i for i, a in enumerate(x.row_a)]
    row_b = [b - 2 * i - 1 for i, b in enumerate(x.row_b)]
    try:
        return symbol_to_bipartition(make_symbol(0, 0, row_a, row_b))
    except SymbolError as exc:
        raise NotInImage(f"{x}: {exc}") from exc


def wavefront_partition(x: Symbol) -> SymplecticClassLabel:
    """Unipotent class of a Springer symbol whose entries are pairwise distinct.

    With the merged entries sorted as c_0 < c_1 < ... the class has Jordan
    blocks 2c_i - 2i, zeros dropped.
    """
    if not is_springer_image(x):
        raise NotInImage(f"{x} (r={x.r}, s={x.s}, d={x.d}) is not a Springer symbol")
    entries = x.entries()
    if len(set(entries)) != len(entries):
        raise RepeatedEntries(f"{x} has repeated entries")
    parts = [2 * c - 2 * i for i, c in enumerate(entries)]
    return SymplecticClassLabel(Partition(sorted((p for p in parts if p), reverse=True)), x.rank)
