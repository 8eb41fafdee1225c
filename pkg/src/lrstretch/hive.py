"""Hive polytopes and their integer points.

Vertices of the size-``k`` hive are ``h[i, j]`` with ``0 <= i <= j <= k``;
row ``j`` (counted from the apex ``h[0, 0]``) holds ``h[0, j], ..., h[j, j]``.
The left edge ``h[0, j]`` carries prefix sums of lambda, the right edge
``h[j, j]`` prefix sums of nu and the bottom row ``h[i, k]`` continues the left
corner with prefix sums of mu.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .core import Partition
from .errors import LengthMismatch, ResourceLimit, WeightMismatch

DEFAULT_NODE_CAP = 10**7

Vertex = tuple[int, int]


@dataclass(frozen=True)
class Rhombus:
    """``sum(obtuse) >= sum(acute)`` over four hive vertices."""

    family: int
    obtuse: tuple[Vertex, Vertex]
    acute: tuple[Vertex, Vertex]

    def coefficients(self) -> dict[Vertex, int]:
        coeffs: dict[Vertex, int] = {}
        for v in self.obtuse:
            coeffs[v] = coeffs.get(v, 0) + 1
        for v in self.acute:
            coeffs[v] = coeffs.get(v, 0) - 1
        return coeffs

    def slack(self, h) -> int:
        return h[self.obtuse[0]] + h[self.obtuse[1]] - h[self.acute[0]] - h[self.acute[1]]


def _valid(v: Vertex, k: int) -> bool:
    i, j = v
    return 0 <= i <= j <= k


def rhombus_constraints(k: int) -> list[Rhombus]:
    """All rhombus inequalities of the size-``k`` hive, three families of C(k, 2) each.

    Family 1: h[i,j] - h[i,j-1] >= h[i-1,j] - h[i-1,j-1]
    Family 2: h[i,j] - h[i-1,j] >= h[i+1,j+1] - h[i,j+1]
    Family 3: h[i-1,j] - h[i-1,j-1] >= h[i,j+1] - h[i,j]

    Indices run over 1 <= i <= j <= k; members touching a vertex outside the
    hive are dropped.
    """
    out = []
    templates = (
        (1, lambda i, j: (((i, j), (i - 1, j - 1)), ((i, j - 1), (i - 1, j)))),
        (2, lambda i, j: (((i, j), (i, j + 1)), ((i - 1, j), (i + 1, j + 1)))),
        (3, lambda i, j: (((i - 1, j), (i, j)), ((i - 1, j - 1), (i, j + 1)))),
    )
    for family, make in templates:
        for j in range(1, k + 1):
            for i in range(1, j + 1):
                obtuse, acute = make(i, j)
                if all(_valid(v, k) for v in obtuse + acute):
                    out.append(Rhombus(family, obtuse, acute))
    return out


def interior_vertices(k: int) -> list[Vertex]:
    """Free labels in row-major order (increasing j, then i)."""
    return [(i, j) for j in range(2, k) for i in range(1, j)]


@dataclass(frozen=True)
class HiveBoundary:
    k: int
    left: tuple[int, ...]  # h[0, j], j = 0..k
    diagonal: tuple[int, ...]  # h[j, j], j = 0..k
    bottom: tuple[int, ...]  # h[i, k], i = 0..k

    def labels(self) -> dict[Vertex, int]:
        h = {}
        for j, v in enumerate(self.left):
            h[0, j] = v
        for j, v in enumerate(self.diagonal):
            h[j, j] = v
        for i, v in enumerate(self.bottom):
            h[i, self.k] = v
        return h


def _check_type(nu: Partition, lam: Partition, mu: Partition) -> int:
    k = nu.k
    if lam.k != k or mu.k != k:
        raise LengthMismatch(f"partitions of lengths {nu.k}, {lam.k}, {mu.k}")
    if nu.weight != lam.weight + mu.weight:
        raise WeightMismatch(f"|nu|={nu.weight} but |lambda|+|mu|={lam.weight + mu.weight}")
    return k


def _prefix(parts, start=0):
    out = [start]
    for p in parts:
        out.append(out[-1] + p)
    return tuple(out)


def build_boundary(nu: Partition, lam: Partition, mu: Partition) -> HiveBoundary:
    k = _check_type(nu, lam, mu)
    left = _prefix(lam.parts)
    boundary = HiveBoundary(k, left, _prefix(nu.parts), _prefix(mu.parts, left[-1]))
    assert boundary.diagonal[-1] == boundary.bottom[-1]
    return boundary


@dataclass(frozen=True)
class HiveLabelling:
    """Integer labels; ``rows[j][i] = h[i, j]``."""

    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_labels(cls, k: int, h: dict[Vertex, int]) -> "HiveLabelling":
        return cls(tuple(tuple(h[i, j] for i in range(j + 1)) for j in range(k + 1)))

    @property
    def k(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, v: Vertex) -> int:
        i, j = v
        return self.rows[j][i]

    def labels(self) -> dict[Vertex, int]:
        return {(i, j): self.rows[j][i] for j in range(self.k + 1) for i in range(j + 1)}

    def to_records(self) -> list[dict]:
        return [{"i": i, "j": j, "value": v} for (i, j), v in sorted(self.labels().items(), key=lambda kv: (kv[0][1], kv[0][0]))]

    def to_json(self) -> str:
        return json.dumps(self.to_records())

    def pretty(self) -> str:
        """Triangular layout with the apex on top."""
        cells = [[str(v) for v in row] for row in self.rows]
        width = max(len(c) for row in cells for c in row)
        lines = []
        for j, row in enumerate(cells):
            pad = " " * ((self.k - j) * (width + 1) // 2)
            lines.append(pad + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines)


def hives_to_json(hives: list[HiveLabelling]) -> str:
    return json.dumps([h.to_records() for h in hives])


def is_valid_hive(h: HiveLabelling, nu: Partition, lam: Partition, mu: Partition) -> bool:
    boundary = build_boundary(nu, lam, mu)
    if h.k != boundary.k:
        return False
    if any(h[v] != val for v, val in boundary.labels().items()):
        return False
    return all(r.slack(h) >= 0 for r in rhombus_constraints(h.k))


@dataclass(frozen=True)
class HivePolytope:
    """The inequality system over the interior unknowns.

    Each row ``(coeffs, const)`` reads ``sum(c * x) + const >= 0`` with ``x``
    ordered as :func:`interior_vertices`.
    """

    nu: Partition
    lam: Partition
    mu: Partition
    unknowns: tuple[Vertex, ...]
    rows: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def k(self) -> int:
        return self.nu.k

    def contains(self, x) -> bool:
        return all(sum(c * a for c, a in zip(coeffs, x)) + const >= 0 for coeffs, const in self.rows)


def hive_polytope(nu: Partition, lam: Partition, mu: Partition) -> HivePolytope:
    fixed = build_boundary(nu, lam, mu).labels()
    unknowns = tuple(interior_vertices(nu.k))
    index = {v: n for n, v in enumerate(unknowns)}
    rows = []
    for r in rhombus_constraints(nu.k):
        coeffs = [0] * len(unknowns)
        const = 0
        for v, c in r.coefficients().items():
            if v in index:
                coeffs[index[v]] += c
            else:
                const += c * fixed[v]
        rows.append((tuple(coeffs), const))
    return HivePolytope(nu, lam, mu, unknowns, tuple(rows))


class _Search:
    """Pruned backtracking over the interior unknowns."""

    def __init__(self, nu, lam, mu, node_cap):
        self.k = _check_type(nu, lam, mu)
        self.fixed = build_boundary(nu, lam, mu).labels()
        self.order = interior_vertices(self.k)
        self.top = nu.weight
        self.node_cap = node_cap
        self.nodes = 0
        pos = {v: n for n, v in enumerate(self.order)}
        # constraints whose last unknown (in search order) is order[n]
        self.closing: list[list[tuple[int, list[tuple[Vertex, int]]]]] = [[] for _ in self.order]
        self.feasible = True
        for r in rhombus_constraints(self.k):
            coeffs = r.coefficients()
            free = [v for v in coeffs if v in pos]
            if not free:
                if r.slack(self.fixed) < 0:
                    self.feasible = False
                continue
            last = max(free, key=pos.__getitem__)
            others = [(v, c) for v, c in coeffs.items() if v != last]
            self.closing[pos[last]].append((coeffs[last], others))

    def bounds(self, n: int, h: dict) -> tuple[int, int]:
        lo, hi = None, None
        for c, others in self.closing[n]:
            rest = sum(h[v] * a for v, a in others)
            # c * x + rest >= 0 with c in {+1, -1, +2, -2}
            if c > 0:
                b = -((rest) // c)
                lo = b if lo is None else max(lo, b)
            else:
                b = rest // (-c)
                hi = b if hi is None else min(hi, b)
        return (0 if lo is None else lo), (self.top if hi is None else hi)

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.node_cap:
            raise ResourceLimit(f"hive search exceeded {self.node_cap} visited nodes")

    def walk(self) -> Iterator[dict]:
        if not self.feasible:
            return
        h = dict(self.fixed)
        n_free = len(self.order)

        def rec(n):
            if n == n_free:
                yield h
                return
            lo, hi = self.bounds(n, h)
            v = self.order[n]
            for x in range(lo, hi + 1):
                self._tick()
                h[v] = x
                yield from rec(n + 1)
            h.pop(v, None)

        yield from rec(0)

    def count(self) -> int:
        if not self.feasible:
            return 0
        n_free = len(self.order)
        if n_free == 0:
            return 1
        h = dict(self.fixed)

        def rec(n):
            lo, hi = self.bounds(n, h)
            if n == n_free - 1:
                self._tick()
                return max(0, hi - lo + 1)
            v = self.order[n]
            total = 0
            for x in range(lo, hi + 1):
                self._tick()
                h[v] = x
                total += rec(n + 1)
            h.pop(v, None)
            return total

        return rec(0)


def count_integer_hives(nu: Partition, lam: Partition, mu: Partition, node_cap: int = DEFAULT_NODE_CAP) -> int:
    """C^nu_{lam,mu} as the number of integer hives of type (nu, lam, mu)."""
    return _Search(nu, lam, mu, node_cap).count()


def enumerate_integer_hives(nu: Partition, lam: Partition, mu: Partition, node_cap: int = DEFAULT_NODE_CAP) -> list[HiveLabelling]:
    search = _Search(nu, lam, mu, node_cap)
    return [HiveLabelling.from_labels(search.k, h) for h in search.walk()]
