"""Signed-permutation Weyl groups and quasi-isolated series labels.

W(B_n) acts on {±1, .., ±n}; an element is stored in one-line notation as
the tuple (w(1), .., w(n)).  An involution s of the dual torus is a sign
vector; roots take the values

    e_i -> s_i,    ±e_i ± e_j -> s_i s_j,

so W°(s) is generated by the reflections in roots with value 1 and
W(s) is the stabiliser of the sign vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Callable, Iterable, Sequence

from . import config
from .errors import BoundExceeded, RankExceeded

SignedPermutation = tuple  # one-line notation, entries in ±{1..n}


def identity(n: int) -> SignedPermutation:
    return tuple(range(1, n + 1))


def compose(u: SignedPermutation, v: SignedPermutation) -> SignedPermutation:
    """(u v)(i) = u(v(i))."""
    return tuple(u[x - 1] if x > 0 else -u[-x - 1] for x in v)


def inverse(w: SignedPermutation) -> SignedPermutation:
    inv = [0] * len(w)
    for i, x in enumerate(w, start=1):
        if x > 0:
            inv[x - 1] = i
        else:
            inv[-x - 1] = -i
    return tuple(inv)


def is_signed_permutation(w: Sequence[int]) -> bool:
    return sorted(abs(x) for x in w) == list(range(1, len(w) + 1))


# roots as (i, j, sign): (i, 0, ±1) is ±e_i, (i, j, ±1) with i < j is e_i ± e_j
Root = tuple


def positive_roots(n: int) -> list[Root]:
    roots = [(i, 0, 1) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            roots.append((i, j, -1))
            roots.append((i, j, 1))
    return roots


def reflection(n: int, root: Root) -> SignedPermutation:
    i, j, sign = root
    w = list(range(1, n + 1))
    if j == 0:
        w[i - 1] = -i
    elif sign < 0:
        w[i - 1], w[j - 1] = j, i
    else:
        w[i - 1], w[j - 1] = -j, -i
    return tuple(w)


def generate(gens: Iterable[SignedPermutation], n: int) -> frozenset:
    """Closure of ``gens`` under composition."""
    gens = list(gens)
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                h = compose(g, w)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(seen)


class WeylGroupB:
    """The hyperoctahedral group W(B_n) with its root system."""

    def __init__(self, n: int, bound: int = config.DEFAULT_WEYL_MAX_RANK):
        if n < 0:
            raise ValueError(f"n must be non-negative, got {n}")
        if n > bound:
            raise BoundExceeded(f"n={n} exceeds the Weyl group bound {bound}")
        self.n = n

    @cached_property
    def elements(self) -> list[SignedPermutation]:
        out = []
        for perm in permutations(range(1, self.n + 1)):
            for signs in product((1, -1), repeat=self.n):
                out.append(tuple(s * x for s, x in zip(signs, perm)))
        return out

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> SignedPermutation:
        return identity(self.n)

    def multiply(self, u, v):
        return compose(u, v)

    def inverse(self, w):
        return inverse(w)

    def roots(self) -> list[Root]:
        """All 2n^2 roots; negatives carry a leading -1 factor: (-1, root)."""
        pos = positive_roots(self.n)
        return [(1, r) for r in pos] + [(-1, r) for r in pos]

    def reflections(self) -> list[SignedPermutation]:
        return [reflection(self.n, r) for r in positive_roots(self.n)]

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"WeylGroupB({self.n})"


def weyl_group(n: int, bound: int = config.DEFAULT_WEYL_MAX_RANK) -> WeylGroupB:
    return WeylGroupB(n, bound)


@dataclass(frozen=True)
class InvolutionDatum:
    """s with s^2 = 1: ``a`` eigenvalues +1 followed by ``b`` eigenvalues -1."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError(f"a and b must be non-negative, got a={self.a}, b={self.b}")

    @property
    def n(self) -> int:
        return self.a + self.b

    @property
    def sign_vector(self) -> tuple[int, ...]:
        return (1,) * self.a + (-1,) * self.b

    def root_value(self, root: Root) -> int:
        i, j, _ = root
        s = self.sign_vector
        return s[i - 1] if j == 0 else s[i - 1] * s[j - 1]


def enumerate_quasi_isolated(n: int) -> list[InvolutionDatum]:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return [InvolutionDatum(n - b, b) for b in range(n + 1)]


def _check_weyl_bound(n):
    if n > config.DEFAULT_WEYL_MAX_RANK:
        raise BoundExceeded(f"n={n} exceeds the Weyl group bound {config.DEFAULT_WEYL_MAX_RANK}")


def stabilizer(datum: InvolutionDatum, group: WeylGroupB | None = None) -> frozenset:
    """W(s): elements preserving the sign vector, by filtering the whole group."""
    _check_weyl_bound(datum.n)
    group = group or WeylGroupB(datum.n)
    s = datum.sign_vector
    return frozenset(w for w in group.elements if all(s[abs(x) - 1] == s[i] for i, x in enumerate(w)))


def root_vector(n: int, root: Root) -> tuple[int, ...]:
    i, j, sign = root
    v = [0] * n
    v[i - 1] = 1
    if j:
        v[j - 1] = sign
    return tuple(v)


def _reflect(v, alpha):
    num = 2 * sum(x * y for x, y in zip(v, alpha))
    den = sum(x * x for x in alpha)
    return tuple(x - num * y // den for x, y in zip(v, alpha))


def _is_positive(v):
    return next((x for x in v if x), 0) > 0


def simple_roots(n: int, roots: Sequence[Root]) -> list[Root]:
    """Canonical simple system of the reflection subgroup generated by ``roots``.

    ``roots`` must be the positive roots of a closed subsystem; a root is
    simple when its reflection keeps every other one positive.
    """
    vecs = {r: root_vector(n, r) for r in roots}
    simple = []
    for r, alpha in vecs.items():
        if all(_is_positive(_reflect(beta, alpha)) for q, beta in vecs.items() if q != r):
            simple.append(r)
    return simple


def connected_roots(datum: InvolutionDatum) -> list[Root]:
    return [r for r in positive_roots(datum.n) if datum.root_value(r) == 1]


def connected_reflections(datum: InvolutionDatum) -> list[SignedPermutation]:
    return [reflection(datum.n, r) for r in connected_roots(datum)]


def connected_simple_reflections(datum: InvolutionDatum) -> list[SignedPermutation]:
    return [reflection(datum.n, r) for r in simple_roots(datum.n, connected_roots(datum))]


def centralizer_weyl(datum: InvolutionDatum, group: WeylGroupB | None = None) -> tuple[frozenset, frozenset]:
    """(W(s), W°(s)); W°(s) is generated by reflections in roots with value 1."""
    w_s = stabilizer(datum, group)
    w_conn = generate(connected_simple_reflections(datum), datum.n)
    return w_s, w_conn


def is_normal(subgroup: frozenset, group: Iterable[SignedPermutation], gens: Iterable[SignedPermutation]) -> bool:
    """True iff g h g^-1 lies in ``subgroup`` for every g in ``group`` and generator h."""
    gens = list(gens)
    for g in group:
        g_inv = inverse(g)
        for h in gens:
            if compose(compose(g, h), g_inv) not in subgroup:
                return False
    return True


@dataclass(frozen=True)
class FiniteGroup:
    """Group on 0..k-1 given by a multiplication table; 0 is the identity."""

    table: tuple[tuple[int, ...], ...]
    labels: tuple = ()

    @property
    def order(self) -> int:
        return len(self.table)

    def multiply(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inverse(self, x: int) -> int:
        return next(y for y in range(self.order) if self.table[x][y] == 0)

    def is_abelian(self) -> bool:
        k = self.order
        return all(self.table[x][y] == self.table[y][x] for x in range(k) for y in range(k))

    @classmethod
    def cyclic(cls, k: int) -> "FiniteGroup":
        return cls(tuple(tuple((x + y) % k for y in range(k)) for x in range(k)), tuple(range(k)))

    def direct_product(self, other: "FiniteGroup") -> "FiniteGroup":
        k = other.order
        size = self.order * k
        table = tuple(
            tuple(self.table[x // k][y // k] * k + other.table[x % k][y % k] for y in range(size))
            for x in range(size)
        )
        return FiniteGroup(table, tuple(range(size)))


def quotient(group: Iterable[SignedPermutation], normal: frozenset) -> FiniteGroup:
    """G/N with cosets labelled by a representative; the coset N itself is 0."""
    group = sorted(group)
    coset_of = {}
    reps = []
    n = len(group[0]) if group else 0
    if identity(n) not in normal:
        raise ValueError("normal subgroup does not contain the identity")
    # identity first so that the trivial coset is labelled 0
    group.remove(identity(n))
    group.insert(0, identity(n))
    for g in group:
        if g in coset_of:
            continue
        idx = len(reps)
        reps.append(g)
        for h in normal:
            coset_of[compose(g, h)] = idx
    table = tuple(tuple(coset_of[compose(x, y)] for y in reps) for x in reps)
    return FiniteGroup(table, tuple(reps))


def component_group_A(datum: InvolutionDatum, group: WeylGroupB | None = None) -> FiniteGroup:
    """W(s)/W°(s)."""
    w_s, w_conn = centralizer_weyl(datum, group)
    if not w_conn <= w_s:
        raise ValueError(f"W°(s) is not contained in W(s) for {datum}")
    return quotient(w_s, w_conn)


def h1_orbits(group: FiniteGroup, action: Callable[[int], int] | Sequence[int] | None = None) -> list[int]:
    """Orbit representatives for the twisted action a.z = a^-1 z F(a).

    ``action`` is the automorphism F as a callable or lookup table; None is
    the trivial action.  Representatives are the smallest element of each orbit.
    """
    if action is None:
        frob = lambda x: x
    elif callable(action):
        frob = action
    else:
        table = tuple(action)
        frob = lambda x: table[x]
    k = group.order
    seen = set()
    reps = []
    for z in range(k):
        if z in seen:
            continue
        reps.append(z)
        for a in range(k):
            seen.add(group.multiply(group.multiply(group.inverse(a), z), frob(a)))
    return reps


@dataclass(frozen=True)
class SeriesLabel:
    involution: InvolutionDatum
    h1_class: int
    representative: SignedPermutation


def series_labels(n: int) -> list[SeriesLabel]:
    """One label per quasi-isolated involution and H^1 class of A(s), split Frobenius."""
    _check_weyl_bound(n)
    group = WeylGroupB(n)
    labels = []
    for datum in enumerate_quasi_isolated(n):
        a_s = component_group_A(datum, group)
        for z in h1_orbits(a_s):
            labels.append(SeriesLabel(datum, z, a_s.labels[z]))
    return labels


@dataclass(frozen=True)
class HarishChandraDatum:
    n: int
    e: int

    @property
    def k(self) -> int:
        return self.e * (self.e + 1)

    @property
    def gl1_factors(self) -> int:
        return self.n - self.k

    @property
    def symplectic_rank(self) -> int:
        return self.k

    @property
    def relative_weyl_rank(self) -> int:
        return self.n - self.k

    @property
    def relative_weyl_type(self) -> str:
        return f"B{self.relative_weyl_rank}"


def harish_chandra_levi(n: int, e: int) -> HarishChandraDatum:
    if n < 0 or e < 0:
        raise ValueError(f"n and e must be non-negative, got n={n}, e={e}")
    if e * (e + 1) > n:
        raise RankExceeded(f"k=e(e+1)={e * (e + 1)} exceeds n={n}")
    return HarishChandraDatum(n, e)
