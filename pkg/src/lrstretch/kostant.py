"""Kostant partition function of type A_{k-1}.

``K(v)`` counts the ways of writing ``v`` as a non-negative integer
combination of the positive roots ``e_i - e_j`` (``i < j``).
"""
from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Sequence

from .core import prefix_sums
from .errors import NonzeroSum, ResourceLimit

TU_EXHAUSTIVE_MAX_K = 4
TU_K_CAP = 10


def positive_roots(k: int) -> list[tuple[int, ...]]:
    """``e_i - e_j`` for ``i < j`` in lexicographic ``(i, j)`` order."""
    if k < 1:
        raise ValueError("k must be positive")
    roots = []
    for i in range(k):
        for j in range(i + 1, k):
            r = [0] * k
            r[i], r[j] = 1, -1
            roots.append(tuple(r))
    return roots


def _as_int_vector(v: Sequence) -> tuple[int, ...]:
    out = []
    for a in v:
        if int(a) != a:
            raise ValueError(f"Kostant argument must be integral, got {tuple(v)}")
        out.append(int(a))
    return tuple(out)


def kostant(v: Sequence[int]) -> int:
    """Number of ``b >= 0`` with ``M b = v``; 0 when the coordinates do not sum to 0."""
    v = _as_int_vector(v)
    if sum(v) != 0:
        return 0
    return _kostant(v)


def _three_tail(a: int, b: int) -> int:
    # (a, b, c) with a + b + c = 0 over roots e1-e2 (x), e1-e3 (a-x), e2-e3 (b+x)
    return max(0, a - max(0, -b) + 1)


@lru_cache(maxsize=1 << 16)
def _kostant(v: tuple[int, ...]) -> int:
    """Add the roots one at a time in lexicographic order.

    The table maps the still-unexplained remainder to its number of ways.
    Once every root ``e_i - e_*`` has been used, coordinate ``i`` of the
    remainder must be zero, so the table is re-keyed on the trailing
    coordinates only.  The last three coordinates are counted directly.
    """
    k = len(v)
    if k <= 1:
        return 1
    if k == 2:
        return 1 if v[0] >= 0 else 0
    table = {v: 1}
    while k > 3:
        # roots e_0 - e_j, j = 1..k-1; the last one must absorb what is left of
        # coordinate 0
        for j in range(1, k):
            nxt: dict[tuple[int, ...], int] = {}
            for w, ways in table.items():
                head = w[0]
                if head < 0:
                    continue
                for m in ((head,) if j == k - 1 else range(head + 1)):
                    u = list(w)
                    u[0] -= m
                    u[j] += m
                    key = tuple(u)
                    nxt[key] = nxt.get(key, 0) + ways
            table = nxt
        table = _trim(table)
        k -= 1
    return sum(ways * _three_tail(w[0], w[1]) for w, ways in table.items())


def _trim(table):
    out: dict[tuple[int, ...], int] = {}
    for w, ways in table.items():
        assert w[0] == 0
        key = w[1:]
        out[key] = out.get(key, 0) + ways
    return out


def kostant_brute_force(v: Sequence[int]) -> int:
    """Enumerate every multiplicity vector in the box ``[0, B]^{C(k,2)}``,
    ``B = sum(max(v_i, 0))``.  Meant for tiny arguments only."""
    v = _as_int_vector(v)
    k = len(v)
    if sum(v) != 0:
        return 0
    bound = sum(max(a, 0) for a in v)
    roots = positive_roots(k)
    count = 0
    for b in itertools.product(range(bound + 1), repeat=len(roots)):
        w = [0] * k
        for m, (i, j) in zip(b, itertools.combinations(range(k), 2)):
            w[i] += m
            w[j] -= m
        if tuple(w) == v:
            count += 1
    return count


def kostant_brute_force_table(k: int, bound: int) -> dict[tuple[int, ...], int]:
    """Tally ``M b`` over the whole box ``[0, bound]^{C(k,2)}``.

    The tally at ``v`` equals ``K(v)`` whenever ``sum(max(v_i, 0)) <= bound``:
    every multiplicity is at most some prefix sum of ``v``.
    """
    pairs = list(itertools.combinations(range(k), 2))
    table: dict[tuple[int, ...], int] = {}
    for b in itertools.product(range(bound + 1), repeat=len(pairs)):
        w = [0] * k
        for m, (i, j) in zip(b, pairs):
            w[i] += m
            w[j] -= m
        key = tuple(w)
        table[key] = table.get(key, 0) + 1
    return table


def kostant_nonzero(v: Sequence[int]) -> bool:
    """Every prefix sum is non-negative."""
    if sum(v) != 0:
        raise NonzeroSum(f"coordinates of {tuple(v)} sum to {sum(v)}")
    return all(s >= 0 for s in prefix_sums(v))


def simple_root_matrix(k: int) -> list[list[int]]:
    """Positive roots in the basis of simple roots: a ``(k-1) x C(k,2)`` 0/1 matrix."""
    if k < 2:
        raise ValueError("k must be at least 2")
    cols = [[1 if i <= r < j else 0 for r in range(k - 1)] for i, j in itertools.combinations(range(k), 2)]
    return [list(row) for row in zip(*cols)]


def has_consecutive_ones(matrix: list[list[int]]) -> bool:
    """Each column is 0/1 and its 1s form one contiguous block."""
    for col in zip(*matrix):
        if any(x not in (0, 1) for x in col):
            return False
        ones = [r for r, x in enumerate(col) if x]
        if ones and ones[-1] - ones[0] + 1 != len(ones):
            return False
    return True


def det(matrix: list[list[int]]) -> int:
    """Integer determinant by fraction-free Bareiss elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for p in range(n - 1):
        if a[p][p] == 0:
            swap = next((r for r in range(p + 1, n) if a[r][p] != 0), None)
            if swap is None:
                return 0
            a[p], a[swap] = a[swap], a[p]
            sign = -sign
        for r in range(p + 1, n):
            for c in range(p + 1, n):
                a[r][c] = (a[r][c] * a[p][p] - a[r][p] * a[p][c]) // prev
        prev = a[p][p]
    return sign * a[n - 1][n - 1]


def check_total_unimodularity(k: int, sample_budget: int = 10_000, seed: int = 0) -> bool:
    """Square-submatrix determinants of the simple-root matrix lie in {-1, 0, 1}.

    Exhaustive for ``k <= 4``; otherwise ``sample_budget`` submatrices drawn
    uniformly by size and then by row/column subsets.
    """
    if k > TU_K_CAP:
        raise ResourceLimit(f"k={k} exceeds total-unimodularity cap {TU_K_CAP}")
    m = simple_root_matrix(k)
    n_rows, n_cols = len(m), len(m[0])
    if k <= TU_EXHAUSTIVE_MAX_K:
        for size in range(1, n_rows + 1):
            for rows in itertools.combinations(range(n_rows), size):
                for cols in itertools.combinations(range(n_cols), size):
                    if det([[m[r][c] for c in cols] for r in rows]) not in (-1, 0, 1):
                        return False
        return True
    rng = random.Random(seed)
    for _ in range(sample_budget):
        size = rng.randint(1, n_rows)
        rows = sorted(rng.sample(range(n_rows), size))
        cols = sorted(rng.sample(range(n_cols), size))
        if det([[m[r][c] for c in cols] for r in rows]) not in (-1, 0, 1):
            return False
    return True
