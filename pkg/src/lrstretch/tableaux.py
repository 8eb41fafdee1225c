"""Brute-force Littlewood-Richardson rule, used as the ground-truth oracle.

Counts semistandard fillings of the skew shape nu/lam with content mu whose
reverse reading word (rows top to bottom, each read right to left) is a
lattice word.  Cells are filled in exactly that reading order, so the
lattice condition can be checked on every prefix.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import Partition
from .errors import LengthMismatch, WeightMismatch


@dataclass(frozen=True)
class SkewTableau:
    outer: Partition
    inner: Partition
    rows: tuple[tuple[int, ...], ...]  # entries of row r, left to right, skew cells only

    @property
    def content(self) -> tuple[int, ...]:
        counts = [0] * self.outer.k
        for row in self.rows:
            for e in row:
                counts[e - 1] += 1
        return tuple(counts)

    def reading_word(self) -> list[int]:
        return [e for row in self.rows for e in reversed(row)]

    def is_semistandard(self) -> bool:
        grid = {}
        for r, row in enumerate(self.rows):
            for c, e in enumerate(row):
                grid[r, self.inner[r] + c] = e
        for (r, c), e in grid.items():
            if (r, c + 1) in grid and grid[r, c + 1] < e:
                return False
            if (r + 1, c) in grid and grid[r + 1, c] <= e:
                return False
        return True


def is_lattice_word(word) -> bool:
    counts: dict[int, int] = {}
    for e in word:
        counts[e] = counts.get(e, 0) + 1
        if e > 1 and counts[e] > counts.get(e - 1, 0):
            return False
    return True


def lr_tableaux(nu: Partition, lam: Partition, mu: Partition) -> list[SkewTableau]:
    """All LR tableaux of shape nu/lam and content mu (empty if lam is not inside nu)."""
    k = nu.k
    if lam.k != k or mu.k != k:
        raise LengthMismatch(f"partitions of lengths {nu.k}, {lam.k}, {mu.k}")
    if nu.weight != lam.weight + mu.weight:
        raise WeightMismatch(f"|nu|={nu.weight} but |lambda|+|mu|={lam.weight + mu.weight}")
    if not nu.contains(lam):
        return []

    cells = [(r, c) for r in range(k) for c in range(nu[r] - 1, lam[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (k + 1)
    found = []

    def rec(n):
        if n == len(cells):
            rows = tuple(tuple(filling[r, c] for c in range(lam[r], nu[r])) for r in range(k))
            found.append(SkewTableau(nu, lam, rows))
            return
        r, c = cells[n]
        hi = filling.get((r, c + 1), k)  # weakly increasing rows
        lo = filling.get((r - 1, c), 0) + 1  # strictly increasing columns
        for e in range(lo, hi + 1):
            if counts[e] >= mu[e - 1]:
                continue
            if e > 1 and counts[e] + 1 > counts[e - 1]:
                continue
            counts[e] += 1
            filling[r, c] = e
            rec(n + 1)
            del filling[r, c]
            counts[e] -= 1

    rec(0)
    return found


def lr_coefficient_tableaux(nu: Partition, lam: Partition, mu: Partition) -> int:
    return len(lr_tableaux(nu, lam, mu))
