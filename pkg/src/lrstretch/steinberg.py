"""Steinberg's signed double sum over S_k x S_k and the rays along stretch lines.

For each pair ``(sigma, tau)`` the Kostant argument at stretch ``t`` is

    sigma(t*lam + delta) + tau(t*mu + delta) - (t*nu + 2*delta) = t*beta + gamma

with ``beta = sigma(lam) + tau(mu) - nu`` and
``gamma = sigma(delta) + tau(delta) - 2*delta``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import comb
from typing import Optional

from .core import (
    DEFAULT_K_CAP,
    Partition,
    Permutation,
    all_permutations,
    as_integer_vector,
    permute,
    prefix_sums,
    staircase,
    vadd,
    vscale,
    vsub,
)
from .errors import LengthMismatch, UnbalancedRay, WeightMismatch
from .kostant import kostant
from .poly import ExactPolynomial, interpolate


@dataclass(frozen=True)
class SteinbergTerm:
    sigma: Permutation
    tau: Permutation
    sign: int
    argument: tuple[int, ...]

    @property
    def value(self) -> int:
        return self.sign * kostant(self.argument)


def _check(nu: Partition, lam: Partition, mu: Partition) -> int:
    k = nu.k
    if lam.k != k or mu.k != k:
        raise LengthMismatch(f"partitions of lengths {nu.k}, {lam.k}, {mu.k}")
    if nu.weight != lam.weight + mu.weight:
        raise WeightMismatch(f"|nu|={nu.weight} but |lambda|+|mu|={lam.weight + mu.weight}")
    return k


def steinberg_terms(nu: Partition, lam: Partition, mu: Partition, k_cap: int = DEFAULT_K_CAP):
    """Yield every term, sigma in the outer loop and tau in the inner one."""
    k = _check(nu, lam, mu)
    perms = all_permutations(k, k_cap)
    delta = staircase(k)
    shifted_nu = vadd(nu.parts, vscale(2, delta))
    lam_side = [permute(s, vadd(lam.parts, delta)) for s in perms]
    mu_side = [permute(t, vadd(mu.parts, delta)) for t in perms]
    for s, a in zip(perms, lam_side):
        for t, b in zip(perms, mu_side):
            arg = as_integer_vector(vsub(vadd(a, b), shifted_nu))
            yield SteinbergTerm(s, t, s.sign * t.sign, arg)


def steinberg_lr(nu: Partition, lam: Partition, mu: Partition, k_cap: int = DEFAULT_K_CAP) -> int:
    """C^nu_{lam,mu} from Steinberg's formula."""
    k = _check(nu, lam, mu)
    perms = all_permutations(k, k_cap)
    # doubled vectors: 2*delta is integral, so every entry is an int
    two_delta = [k - 1 - 2 * i for i in range(k)]
    shift = [2 * a + 2 * d for a, d in zip(nu.parts, two_delta)]
    lam_side = [permute(s, [2 * a + d for a, d in zip(lam.parts, two_delta)]) for s in perms]
    mu_side = [permute(t, [2 * a + d for a, d in zip(mu.parts, two_delta)]) for t in perms]
    total = 0
    for s, a in zip(perms, lam_side):
        partial = 0
        for t, b in zip(perms, mu_side):
            doubled = [x + y - z for x, y, z in zip(a, b, shift)]
            assert all(d % 2 == 0 for d in doubled), doubled
            if doubled[0] < 0:
                continue  # no positive root has a negative first coordinate
            partial += t.sign * kostant([d // 2 for d in doubled])
        total += s.sign * partial
    return total


@dataclass(frozen=True)
class RaySpec:
    beta: tuple[int, ...]
    gamma: tuple[int, ...]
    sigma: Optional[Permutation] = field(default=None, compare=False)
    tau: Optional[Permutation] = field(default=None, compare=False)

    @property
    def k(self) -> int:
        return len(self.beta)

    def at(self, t: int) -> tuple[int, ...]:
        return tuple(t * b + g for b, g in zip(self.beta, self.gamma))


def build_ray(sigma: Permutation, tau: Permutation, nu: Partition, lam: Partition, mu: Partition) -> RaySpec:
    k = nu.k
    if not (lam.k == mu.k == sigma.k == tau.k == k):
        raise LengthMismatch("ray inputs of different lengths")
    delta = staircase(k)
    beta = vsub(vadd(permute(sigma, lam.parts), permute(tau, mu.parts)), nu.parts)
    gamma = vsub(vadd(permute(sigma, delta), permute(tau, delta)), vscale(2, delta))
    return RaySpec(tuple(beta), as_integer_vector(gamma), sigma, tau)


class Verdict(str, enum.Enum):
    EVENTUALLY_NONZERO = "EventuallyNonzero"
    EVENTUALLY_ZERO = "EventuallyZero"


@dataclass(frozen=True)
class RayClass:
    verdict: Verdict
    witness_index: Optional[int] = None  # 1-based prefix length that fails


def _balanced(r: RaySpec):
    if sum(r.beta) != 0 or sum(r.gamma) != 0:
        raise UnbalancedRay(f"beta={r.beta}, gamma={r.gamma} do not both sum to zero")


def classify_ray(r: RaySpec) -> RayClass:
    """Eventual behaviour of K along ``t*beta + gamma``.

    Eventually non-zero iff at every prefix length ``i`` the beta prefix sum is
    positive, or it is zero and the gamma prefix sum is non-negative.
    """
    _balanced(r)
    for i, (pb, pg) in enumerate(zip(prefix_sums(r.beta), prefix_sums(r.gamma)), start=1):
        if pb < 0 or (pb == 0 and pg < 0):
            return RayClass(Verdict.EVENTUALLY_ZERO, i)
    return RayClass(Verdict.EVENTUALLY_NONZERO)


@dataclass(frozen=True)
class Stabilization:
    threshold: int
    polynomial: ExactPolynomial


def find_stability_threshold(r: RaySpec, t_max: int, min_verify: int = 5) -> Optional[Stabilization]:
    """Least ``N`` such that ``K(t*beta + gamma)`` on ``N..t_max`` is one polynomial
    of degree at most C(k-1, 2).

    The polynomial is fitted on ``N..N+D`` and checked on the rest of the
    window, which must hold at least ``min_verify`` points.  Returns ``None``
    when no such ``N`` exists.
    """
    _balanced(r)
    d = comb(r.k - 1, 2)
    samples = [(t, kostant(r.at(t))) for t in range(t_max + 1)]
    best = None
    # windows are nested, so scan down from the shortest admissible one
    for n in range(t_max - d - min_verify, -1, -1):
        window = samples[n:]
        p = interpolate(window[: d + 1])
        if all(p(t) == v for t, v in window[d + 1:]):
            best = Stabilization(n, p)
        else:
            break
    return best


def ray_report(nu: Partition, lam: Partition, mu: Partition, t_max: int = 60, k_cap: int = DEFAULT_K_CAP) -> list[dict]:
    """One record per ``(sigma, tau)``, permutations in 1-based one-line form."""
    k = _check(nu, lam, mu)
    records = []
    for s in all_permutations(k, k_cap):
        for t in all_permutations(k, k_cap):
            r = build_ray(s, t, nu, lam, mu)
            cls = classify_ray(r)
            stab = find_stability_threshold(r, t_max)
            records.append({
                "sigma": s.one_line(),
                "tau": t.one_line(),
                "sign": s.sign * t.sign,
                "beta": list(r.beta),
                "gamma": list(r.gamma),
                "verdict": cls.verdict.value,
                "witness_index": cls.witness_index,
                "threshold": None if stab is None else stab.threshold,
            })
    return records
