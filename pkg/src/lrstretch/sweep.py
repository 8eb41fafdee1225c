"""Exhaustive and seeded-random families of triples, and the cross-method sweep."""
from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .core import Partition, partitions_of
from .hive import count_integer_hives
from .kostant import kostant, kostant_nonzero
from .steinberg import steinberg_lr
from .tableaux import lr_coefficient_tableaux

Triple = tuple[Partition, Partition, Partition]  # (nu, lam, mu)


def iter_triples(k: int, max_lam: int, max_mu: int) -> Iterator[Triple]:
    """Every (nu, lam, mu) with at most k parts, |lam| <= max_lam, |mu| <= max_mu
    and |nu| = |lam| + |mu|."""
    lams = [p for w in range(max_lam + 1) for p in partitions_of(w, k)]
    mus = [p for w in range(max_mu + 1) for p in partitions_of(w, k)]
    for lam in lams:
        for mu in mus:
            for nu in partitions_of(lam.weight + mu.weight, k):
                yield nu, lam, mu


def random_triples(n: int, ks=(3, 4), max_weight: int = 6, seed: int = 0, weighted: bool = False) -> list[Triple]:
    """``n`` seeded triples with non-zero coefficient.

    k, lam and mu are drawn uniformly; nu uniformly among those with
    C^nu_{lam,mu} >= 1, or with probability proportional to C^nu_{lam,mu}
    when ``weighted``.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        k = rng.choice(ks)
        pool = [p for w in range(1, max_weight + 1) for p in partitions_of(w, k)]
        lam, mu = rng.choice(pool), rng.choice(pool)
        nus = list(partitions_of(lam.weight + mu.weight, k))
        coeffs = [count_integer_hives(nu, lam, mu) for nu in nus]
        weights = coeffs if weighted else [min(c, 1) for c in coeffs]
        out.append((rng.choices(nus, weights)[0], lam, mu))
    return out


def three_way(triple: Triple) -> tuple[int, int, int]:
    nu, lam, mu = triple
    return count_integer_hives(nu, lam, mu), steinberg_lr(nu, lam, mu), lr_coefficient_tableaux(nu, lam, mu)


@dataclass
class SweepSummary:
    triples: int = 0
    nonzero: int = 0
    disagreements: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements


def cross_method_sweep(k_max: int, max_lam: int, max_mu: int, threads: int = 1) -> SweepSummary:
    triples = [t for k in range(1, k_max + 1) for t in iter_triples(k, max_lam, max_mu)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(three_way, triples, chunksize=64))
    else:
        results = [three_way(t) for t in triples]
    summary = SweepSummary(triples=len(triples))
    for (nu, lam, mu), (h, s, t) in zip(triples, results):
        if h:
            summary.nonzero += 1
        if not h == s == t:
            summary.disagreements.append({
                "nu": list(nu), "lambda": list(lam), "mu": list(mu),
                "hive": h, "steinberg": s, "tableaux": t,
            })
    return summary


def zero_sum_vectors(k: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    for head in itertools.product(range(lo, hi + 1), repeat=k - 1):
        last = -sum(head)
        if lo <= last <= hi:
            yield head + (last,)


def prefix_criterion_violations(k_max: int, lo: int = -5, hi: int = 5) -> list[tuple[int, ...]]:
    """Zero-sum vectors on which the prefix-sum test and K > 0 disagree."""
    bad = []
    for k in range(1, k_max + 1):
        for v in zero_sum_vectors(k, lo, hi):
            if kostant_nonzero(v) != (kostant(v) > 0):
                bad.append(v)
    return bad
