"""Partitions, permutations of S_k, the staircase vector and small vector helpers.

Permutation action convention, used everywhere in the package: a permutation
``sigma`` acts on a vector ``x`` by placing ``x[i]`` at position ``sigma(i)``,
i.e. ``(sigma . x)[sigma(i)] = x[i]``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import LengthMismatch, MonotonicityViolation, NegativePart, ResourceLimit

DEFAULT_K_CAP = 6


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing non-negative integer vector padded to length ``k``."""

    parts: tuple[int, ...]

    def __post_init__(self):
        for p in self.parts:
            if p < 0:
                raise NegativePart(f"negative part {p} in {self.parts}")
        for a, b in zip(self.parts, self.parts[1:]):
            if a < b:
                raise MonotonicityViolation(f"parts not weakly decreasing: {self.parts}")

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def contains(self, other: "Partition") -> bool:
        """Young diagram containment ``other ⊆ self``."""
        return all(a >= b for a, b in zip(self.parts, other.parts))

    def to_text(self) -> str:
        return ",".join(str(p) for p in self.parts)


def make_partition(parts: Sequence[int], k: int) -> Partition:
    parts = [int(p) for p in parts]
    if k < 1:
        raise ValueError("k must be positive")
    if len(parts) > k:
        raise LengthMismatch(f"{len(parts)} parts do not fit in length {k}")
    return Partition(tuple(parts) + (0,) * (k - len(parts)))


def zero_partition(k: int) -> Partition:
    return Partition((0,) * k)


def scale_partition(lam: Partition, t: int) -> Partition:
    if t < 0:
        raise ValueError("stretch factor must be non-negative")
    return Partition(tuple(t * p for p in lam.parts))


def parse_partition(text: str, k: int | None = None) -> Partition:
    """Parse ``"4,3,1"``; the empty string is the zero partition."""
    text = text.strip()
    parts = [int(s) for s in text.split(",")] if text else []
    return make_partition(parts, k if k is not None else max(len(parts), 1))


def parse_vector(text: str) -> tuple[int, ...]:
    text = text.strip()
    return tuple(int(s) for s in text.split(",")) if text else ()


def partitions_of(n: int, k: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` with at most ``k`` parts, padded to length ``k``,
    in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(n, k, m):
        if n == 0:
            yield ()
            return
        if k == 0:
            return
        for first in range(min(n, m), 0, -1):
            for rest in rec(n - first, k - 1, first):
                yield (first,) + rest

    for parts in rec(n, k, max_part):
        yield Partition(parts + (0,) * (k - len(parts)))


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{0, ..., k-1}`` stored as its image sequence (0-based)."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError(f"not a permutation: {self.image}")

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(tuple(range(k)))

    @classmethod
    def from_one_line(cls, seq: Sequence[int]) -> "Permutation":
        return cls(tuple(s - 1 for s in seq))

    @property
    def k(self) -> int:
        return len(self.image)

    def one_line(self) -> list[int]:
        return [s + 1 for s in self.image]

    def __call__(self, i: int) -> int:
        return self.image[i]

    def compose(self, other: "Permutation") -> "Permutation":
        """``self ∘ other``: apply ``other`` first."""
        return Permutation(tuple(self.image[j] for j in other.image))

    def inverse(self) -> "Permutation":
        inv = [0] * self.k
        for i, s in enumerate(self.image):
            inv[s] = i
        return Permutation(tuple(inv))

    @property
    def inversions(self) -> int:
        return _inversions(self.image)

    @property
    def sign(self) -> int:
        return -1 if self.inversions % 2 else 1


@lru_cache(maxsize=None)
def _inversions(image: tuple[int, ...]) -> int:
    # merge-sort count; the O(k^2) recount lives in the tests
    def sort_count(seq):
        if len(seq) <= 1:
            return list(seq), 0
        mid = len(seq) // 2
        left, a = sort_count(seq[:mid])
        right, b = sort_count(seq[mid:])
        merged, c, i, j = [], 0, 0, 0
        while i < len(left) and j < len(right):
            if left[i] <= right[j]:
                merged.append(left[i])
                i += 1
            else:
                merged.append(right[j])
                c += len(left) - i
                j += 1
        merged.extend(left[i:])
        merged.extend(right[j:])
        return merged, a + b + c

    return sort_count(list(image))[1]


def all_permutations(k: int, k_cap: int = DEFAULT_K_CAP) -> list[Permutation]:
    """The k! permutations of S_k in lexicographic order of their images."""
    if k < 1:
        raise ValueError("k must be positive")
    if k > k_cap:
        raise ResourceLimit(f"k={k} exceeds configured cap {k_cap}")
    return _all_permutations(k)


@lru_cache(maxsize=None)
def _all_permutations(k: int) -> list[Permutation]:
    return [Permutation(p) for p in itertools.permutations(range(k))]


def permute(sigma: Permutation, x: Sequence) -> tuple:
    """Place ``x[i]`` at position ``sigma(i)``."""
    if len(x) != sigma.k:
        raise LengthMismatch(f"permutation of length {sigma.k} applied to vector of length {len(x)}")
    out = [None] * sigma.k
    for i, s in enumerate(sigma.image):
        out[s] = x[i]
    return tuple(out)


@lru_cache(maxsize=None)
def staircase(k: int) -> tuple[Fraction, ...]:
    """Half the sum of the positive roots of A_{k-1}: (k-1, k-3, ..., 1-k) / 2."""
    if k < 1:
        raise ValueError("k must be positive")
    return tuple(Fraction(k - 1 - 2 * i, 2) for i in range(k))


def vadd(*vectors: Sequence) -> tuple:
    if len({len(v) for v in vectors}) > 1:
        raise LengthMismatch("vectors of different lengths")
    return tuple(sum(c) for c in zip(*vectors))


def vsub(x: Sequence, y: Sequence) -> tuple:
    if len(x) != len(y):
        raise LengthMismatch("vectors of different lengths")
    return tuple(a - b for a, b in zip(x, y))


def vscale(c, x: Sequence) -> tuple:
    return tuple(c * a for a in x)


def as_integer_vector(x: Sequence) -> tuple[int, ...]:
    """Convert exact rationals to ints, refusing anything non-integral."""
    out = []
    for a in x:
        a = Fraction(a)
        if a.denominator != 1:
            raise ValueError(f"non-integral entry {a} in {tuple(x)}")
        out.append(a.numerator)
    return tuple(out)


def prefix_sums(x: Sequence) -> list:
    return list(itertools.accumulate(x))
