"""Independent brute-force oracles.  Nothing here calls the code under test."""

import random
from collections import Counter
from itertools import combinations, product


def compositions(n):
    """All compositions of n, via subsets of the n-1 cut points."""
    if n == 0:
        yield ()
        return
    for k in range(n):
        for cuts in combinations(range(1, n), k):
            bounds = (0,) + cuts + (n,)
            yield tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))


def brute_partitions(n):
    return sorted({tuple(sorted(c, reverse=True)) for c in compositions(n)}, reverse=True)


def brute_symplectic(n):
    out = []
    for p in brute_partitions(2 * n):
        counts = Counter(p)
        if all(counts[k] % 2 == 0 for k in counts if k % 2 == 1):
            out.append(p)
    return out


def brute_bipartitions(n):
    return [(a, b) for k in range(n + 1) for a in brute_partitions(k) for b in brute_partitions(n - k)]


def symbol_rank(r, s, row_a, row_b):
    m, d = len(row_b), len(row_a) - len(row_b)
    e = d // 2
    return sum(row_a) + sum(row_b) - r * (m + e) * (m + d - e - 1) - s * (m + e) * (m + d - e)


def symbol_ok(r, s, row_a, row_b):
    g = r + s
    if any(x < 0 for x in row_a + row_b):
        return False
    if any(row_a[i] - row_a[i - 1] < g for i in range(1, len(row_a))):
        return False
    if any(row_b[i] - row_b[i - 1] < g for i in range(1, len(row_b))):
        return False
    if row_b and row_b[0] < s:
        return False
    return symbol_rank(r, s, row_a, row_b) >= 0


def sorted_tuples(length, total):
    """Weakly increasing tuples of non-negative integers with the given sum."""
    def rec(length, total, lo):
        if length == 0:
            if total == 0:
                yield ()
            return
        for x in range(lo, total // length + 1):
            for rest in rec(length - 1, total - x, x):
                yield (x,) + rest

    return rec(length, total, 0)


def brute_canonical_symbols(rank, d, r, s, max_m):
    """All canonical rows with at most max_m bottom entries, filtered from every
    sorted pair of rows with the right total."""
    found = set()
    for m in range(max(0, -d), max_m + 1):
        e = d // 2
        total = rank + r * (m + e) * (m + d - e - 1) + s * (m + e) * (m + d - e)
        for sum_a in range(total + 1):
            for row_a in sorted_tuples(m + d, sum_a):
                for row_b in sorted_tuples(m, total - sum_a):
                    if not symbol_ok(r, s, row_a, row_b):
                        continue
                    if m >= 1 and row_a and row_a[0] == 0 and row_b[0] == s:
                        continue
                    found.add((row_a, row_b))
    return found


def random_rows(rng, r, s, d, m):
    g = r + s
    row_a, row_b = [], []
    x = rng.randint(0, 3)
    for _ in range(m + d):
        row_a.append(x)
        x += g + rng.choice((0, 0, 1, 1, 2, 3))
    x = s + rng.choice((0, 0, 1, 2))
    for _ in range(m):
        row_b.append(x)
        x += g + rng.choice((0, 0, 1, 1, 2, 3))
    return tuple(row_a), tuple(row_b)


def random_symbol_data(rng, max_rank=30, d=None, params=None):
    """Random valid (r, s, row_a, row_b) with rank <= max_rank, by rejection."""
    while True:
        r, s = params if params is not None else (rng.randint(0, 2), rng.randint(0, 2))
        dd = rng.randint(-2, 3) if d is None else d
        m = rng.randint(max(0, -dd), 5)
        row_a, row_b = random_rows(rng, r, s, dd, m)
        if symbol_ok(r, s, row_a, row_b) and symbol_rank(r, s, row_a, row_b) <= max_rank:
            return r, s, row_a, row_b


def signed_perms(n):
    from itertools import permutations

    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield tuple(x * y for x, y in zip(signs, perm))


def make_rng(seed=20261017):
    return random.Random(seed)
