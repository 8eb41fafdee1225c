"""Stretched coefficients t -> C^{t nu}_{t lam, t mu} and their exact polynomial fit."""
from __future__ import annotations

import csv
import enum
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from .core import DEFAULT_K_CAP, Partition, scale_partition
from .hive import DEFAULT_NODE_CAP, count_integer_hives
from .poly import ExactPolynomial, interpolate
from .steinberg import steinberg_lr
from .tableaux import lr_coefficient_tableaux

SCHEMA = "lr-stretch/1"

METHODS = ("hive", "steinberg", "tableaux")


def lr_coefficient(nu: Partition, lam: Partition, mu: Partition, method: str = "hive",
                   node_cap: int = DEFAULT_NODE_CAP, k_cap: int = DEFAULT_K_CAP) -> int:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(METHODS)}")
    if method == "hive":
        return count_integer_hives(nu, lam, mu, node_cap=node_cap)
    if method == "steinberg":
        return steinberg_lr(nu, lam, mu, k_cap=k_cap)
    return lr_coefficient_tableaux(nu, lam, mu)


def _stretched_value(args) -> int:
    nu, lam, mu, t, method, caps = args
    return lr_coefficient(scale_partition(nu, t), scale_partition(lam, t), scale_partition(mu, t), method, **caps)


def sample_stretched(nu: Partition, lam: Partition, mu: Partition, ts: Iterable[int], method: str = "hive",
                     threads: int = 1, **caps) -> list[tuple[int, int]]:
    """``(t, C^{t nu}_{t lam, t mu})`` for each ``t``, in increasing ``t``.

    ``caps`` (``node_cap``, ``k_cap``) are forwarded to :func:`lr_coefficient`.
    """
    ts = sorted(set(ts))
    if any(t < 0 for t in ts):
        raise ValueError("stretch factors must be non-negative")
    jobs = [(nu, lam, mu, t, method, caps) for t in ts]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(_stretched_value, jobs))
    else:
        values = [_stretched_value(j) for j in jobs]
    return list(zip(ts, values))


class StretchVerdict(str, enum.Enum):
    POLYNOMIAL = "Polynomial"
    QUASI_POLYNOMIAL_SUSPECTED = "QuasiPolynomialSuspected"


@dataclass
class StretchReport:
    nu: Partition
    lam: Partition
    mu: Partition
    method: str
    samples: list[tuple[int, int]]
    fitted: ExactPolynomial
    fit_range: tuple[int, int]
    verified_range: tuple[int, int]
    degree_bound: int
    verdict: StretchVerdict
    empty_polytope: bool = False
    mismatches: list[int] = field(default_factory=list)

    @property
    def note(self) -> str:
        if self.verdict is StretchVerdict.POLYNOMIAL:
            return "exact agreement on all held-out points"
        return "held-out disagreement: stretched coefficients are always polynomial, so this is a bug"

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "nu": list(self.nu),
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "method": self.method,
            "samples": [{"t": t, "value": v} for t, v in self.samples],
            "polynomial": {
                "coefficients": self.fitted.coefficient_strings(),
                "degree": self.fitted.degree,
                "text": str(self.fitted),
            },
            "fit_range": list(self.fit_range),
            "verified_range": list(self.verified_range),
            "degree_bound": self.degree_bound,
            "empty_polytope": self.empty_polytope,
            "verdict": self.verdict.value,
            "mismatches": self.mismatches,
            "note": self.note,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["t", "value", "fitted", "role"])
        lo, hi = self.fit_range
        for t, v in self.samples:
            role = "fit" if lo <= t <= hi else "holdout"
            writer.writerow([t, v, str(self.fitted(t)), role])
        return buf.getvalue()


def certify_polynomiality(nu: Partition, lam: Partition, mu: Partition, holdout: int = 5, method: str = "hive",
                          threads: int = 1, **caps) -> StretchReport:
    """Fit on t = 0..D (D = C(k-1, 2)) and verify exactly on D+1..D+holdout.

    When C^nu_{lam,mu} = 0 the hive polytope is empty and every dilation,
    t = 0 included, has no lattice point; the t = 0 value used for the fit is
    then 0 rather than the coefficient of three zero partitions.
    """
    if holdout < 1:
        raise ValueError("holdout must be positive")
    d = comb(nu.k - 1, 2)
    samples = sample_stretched(nu, lam, mu, range(d + holdout + 1), method, threads, **caps)
    values = dict(samples)
    empty = values[1] == 0
    if empty:
        values[0] = 0
    fitted = interpolate([(t, values[t]) for t in range(d + 1)])
    mismatches = [t for t in range(d + 1, d + holdout + 1) if fitted(t) != values[t]]
    ok = not mismatches and fitted.degree <= d
    return StretchReport(
        nu, lam, mu, method, samples, fitted,
        (0, d), (d + 1, d + holdout), d,
        StretchVerdict.POLYNOMIAL if ok else StretchVerdict.QUASI_POLYNOMIAL_SUSPECTED,
        empty, mismatches,
    )
