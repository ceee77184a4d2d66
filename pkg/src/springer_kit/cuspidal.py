"""Cuspidal quasi-isolated series and the check n_chi = |A(u)|.

For s with centraliser of type B_a D_b a cuspidal character exists only
when a = e(e+1) and b = f^2.  Its family contains a special character
E = X_B ⊠ X_D; the pipeline

    j-induction (symbol sum) -> Springer map -> wave-front class u

yields u, and the generic denominator 2^(e+f-Δ(f)) must equal |A(u)|.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional

from . import config
from .errors import BoundExceeded, WrongParameters
from .partitions import Partition, SymplecticClassLabel, component_group_order, halve
from .springer import springer, wavefront_partition
from .symbols import Symbol, add, make_symbol, symbol_to_bipartition, unit


def delta(f: int) -> int:
    return 0 if f == 0 else 1


def generic_denominator(e: int, f: int) -> int:
    return 2 ** (e + f - delta(f))


def pronic_root(a: int) -> Optional[int]:
    """e with e(e+1) = a, or None."""
    if a < 0:
        return None
    e = (isqrt(4 * a + 1) - 1) // 2
    return e if e * (e + 1) == a else None


def square_root(b: int) -> Optional[int]:
    if b < 0:
        return None
    f = isqrt(b)
    return f if f * f == b else None


def cuspidal_exists(e: int, f: int) -> bool:
    return e >= 1 or f >= 2


def cuspidal_parameters(a: int, b: int) -> Optional[tuple[int, int, bool]]:
    e, f = pronic_root(a), square_root(b)
    if e is None or f is None:
        return None
    return e, f, cuspidal_exists(e, f)


def special_character(e: int, f: int) -> tuple[Symbol, Symbol]:
    """Symbols of the special character in the cuspidal family.

    B-factor ``[0,1,..,e; 1,..,e]`` and D-factor ``[1,..,f; 1,..,f-1]``;
    f = 0 gives the rank-0 unit ``[0;∅]``.
    """
    if e < 0 or f < 0:
        raise ValueError(f"e and f must be non-negative, got e={e}, f={f}")
    special_b = make_symbol(0, 0, range(0, e + 1), range(1, e + 1))
    special_d = make_symbol(0, 0, range(1, f + 1), range(1, f)) if f else unit(1)
    return special_b, special_d


def j_induce(x: Symbol, y: Symbol) -> Symbol:
    for sym in (x, y):
        if sym.r != 0 or sym.s != 0:
            raise WrongParameters(f"j-induction expects r=s=0, got {sym.params}")
    return add(x, y)


def closed_form_mu(e: int, f: int) -> Partition:
    """Half the wave-front partition, in closed form.

    e < f, k = f - e:   1,1,2,2,..,k-1,k-1 and k, k+1, .., k+2e
    f <= e, k = e - f:  1,1,..,k,k and k+1, .., k+2f
    """
    if e < f:
        k = f - e
        pairs = [i for i in range(1, k) for _ in range(2)]
        run = list(range(k, k + 2 * e + 1))
    else:
        k = e - f
        pairs = [i for i in range(1, k + 1) for _ in range(2)]
        run = list(range(k + 1, k + 2 * f + 1))
    return Partition(sorted(pairs + run, reverse=True))


@dataclass(frozen=True)
class CuspidalDatum:
    e: int
    f: int

    def __post_init__(self):
        if self.e < 0 or self.f < 0:
            raise ValueError(f"e and f must be non-negative, got e={self.e}, f={self.f}")

    @property
    def a(self) -> int:
        return self.e * (self.e + 1)

    @property
    def b(self) -> int:
        return self.f * self.f

    @property
    def n(self) -> int:
        return self.a + self.b

    @property
    def special(self) -> tuple[Symbol, Symbol]:
        return special_character(self.e, self.f)

    @property
    def special_b(self) -> Symbol:
        return self.special[0]

    @property
    def special_d(self) -> Symbol:
        return self.special[1]

    @property
    def n_chi(self) -> int:
        return generic_denominator(self.e, self.f)

    @property
    def cuspidal_exists(self) -> bool:
        return cuspidal_exists(self.e, self.f)


@dataclass(frozen=True)
class VerificationReport:
    datum: CuspidalDatum
    j_symbol: Symbol
    springer_symbol: Symbol
    lam: SymplecticClassLabel
    mu: Optional[Partition]
    a_order: int
    identity_holds: bool
    mu_matches_closed_form: bool


def verify_multiplicity_one(e: int, f: int) -> VerificationReport:
    datum = CuspidalDatum(e, f)
    special_b, special_d = datum.special
    j_symbol = j_induce(special_b, special_d)
    image = springer(symbol_to_bipartition(j_symbol))
    lam = wavefront_partition(image.symbol)
    mu = halve(lam.partition)
    a_order = component_group_order(lam)
    return VerificationReport(
        datum=datum,
        j_symbol=j_symbol,
        springer_symbol=image.symbol,
        lam=lam,
        mu=mu,
        a_order=a_order,
        identity_holds=a_order == datum.n_chi,
        mu_matches_closed_form=mu == closed_form_mu(e, f),
    )


def sweep_parameters(max_n: int) -> list[tuple[int, int]]:
    """All (e, f) with e(e+1) + f^2 <= max_n, ordered by (n, e)."""
    params = []
    e = 0
    while e * (e + 1) <= max_n:
        f = 0
        while e * (e + 1) + f * f <= max_n:
            params.append((e, f))
            f += 1
        e += 1
    return sorted(params, key=lambda ef: (ef[0] * (ef[0] + 1) + ef[1] ** 2, ef[0]))


def sweep(max_n: int, bound: int = config.DEFAULT_SWEEP_MAX_N) -> list[VerificationReport]:
    if max_n < 0:
        raise ValueError(f"max_n must be non-negative, got {max_n}")
    if max_n > bound:
        raise BoundExceeded(f"max_n={max_n} exceeds the sweep bound {bound}")
    return [verify_multiplicity_one(e, f) for e, f in sweep_parameters(max_n)]
