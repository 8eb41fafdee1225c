"""Exit criteria, one test each; a PASS/FAIL line per criterion is printed in the
terminal summary."""
import random
import time
from math import comb

import pytest

from lrstretch import make_partition
from lrstretch.core import all_permutations, permute, staircase, vadd, vscale, vsub
from lrstretch.errors import WeightMismatch
from lrstretch.hive import build_boundary, count_integer_hives, enumerate_integer_hives
from lrstretch.kostant import (
    check_total_unimodularity,
    has_consecutive_ones,
    kostant,
    kostant_brute_force_table,
    kostant_nonzero,
    simple_root_matrix,
)
from lrstretch.steinberg import Verdict, build_ray, classify_ray, find_stability_threshold, steinberg_lr
from lrstretch.stretch import StretchVerdict, certify_polynomiality
from lrstretch.sweep import cross_method_sweep, random_triples, zero_sum_vectors
from lrstretch.tableaux import lr_coefficient_tableaux

from .conftest import ACCEPTANCE_LINES


class Gate:
    def __init__(self, number, title, limit=None):
        self.number, self.title, self.limit = number, title, limit

    def __enter__(self):
        self.start = time.perf_counter()
        self.failures = []
        return self

    def check(self, cond, msg):
        if not cond:
            self.failures.append(msg)

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc is not None:
            self.failures.append(f"{exc_type.__name__}: {exc}")
        if self.limit is not None and elapsed >= self.limit:
            self.failures.append(f"took {elapsed:.2f}s, limit {self.limit}s")
        status = "FAIL" if self.failures else "PASS"
        detail = "; ".join(self.failures[:3])
        ACCEPTANCE_LINES.append(f"[{status}] criterion {self.number}: {self.title} ({elapsed:.2f}s){' - ' + detail if detail else ''}")
        print(ACCEPTANCE_LINES[-1])
        assert not self.failures, detail
        return True


def P(parts, k):
    return make_partition(parts, k)


def test_criterion_1_worked_example():
    with Gate(1, "worked example: three methods give 2, both hives match expected labels", limit=1.0) as g:
        nu, lam, mu = P([4, 3, 1], 3), P([2, 1, 0], 3), P([3, 2, 0], 3)
        g.check(count_integer_hives(nu, lam, mu) == 2, "hive count")
        g.check(steinberg_lr(nu, lam, mu) == 2, "steinberg")
        g.check(lr_coefficient_tableaux(nu, lam, mu) == 2, "tableaux")
        b = build_boundary(nu, lam, mu)
        g.check((b.left, b.diagonal, b.bottom) == ((0, 2, 3, 3), (0, 4, 7, 8), (3, 6, 8, 8)), "boundary")
        hives = enumerate_integer_hives(nu, lam, mu)
        g.check([h.rows for h in hives] == [
            ((0,), (2, 4), (3, 5, 7), (3, 6, 8, 8)),
            ((0,), (2, 4), (3, 6, 7), (3, 6, 8, 8)),
        ], "labellings")
        # the literal mu = (3,2,1) does not balance the weights
        with pytest.raises(WeightMismatch):
            build_boundary(nu, lam, P([3, 2, 1], 3))


@pytest.mark.slow
def test_criterion_2_cross_method_sweep():
    with Gate(2, "hive = Steinberg = tableaux for k <= 4, |lam|, |mu| <= 6", limit=600) as g:
        summary = cross_method_sweep(4, 6, 6)
        g.check(summary.triples == 20963, f"{summary.triples} triples")
        g.check(summary.ok, f"disagreements: {summary.disagreements[:3]}")


def test_criterion_3_polynomiality():
    with Gate(3, "stretched coefficients are polynomials of degree <= C(k-1,2), holdout 5", limit=300) as g:
        cases = [(P([4, 3, 1], 3), P([2, 1, 0], 3), P([3, 2, 0], 3))] + random_triples(20, ks=(3, 4), max_weight=16, seed=2024, weighted=True)
        g.check(len(cases) >= 21, "case count")
        for nu, lam, mu in cases:
            report = certify_polynomiality(nu, lam, mu, holdout=5)
            bound = comb(nu.k - 1, 2)
            g.check(report.verdict is StretchVerdict.POLYNOMIAL, f"{report.to_dict()}")
            g.check(report.fitted.degree <= bound, f"degree {report.fitted.degree} > {bound}")
            g.check(all(report.fitted(t) == v for t, v in report.samples), "held-out mismatch")


def test_criterion_4_prefix_criterion():
    with Gate(4, "prefix sums >= 0 iff K(v) > 0, k <= 4, entries in [-5, 5]", limit=120) as g:
        n = 0
        for k in range(1, 5):
            for v in zero_sum_vectors(k, -5, 5):
                n += 1
                g.check(kostant_nonzero(v) == (kostant(v) > 0), f"{v}")
        g.check(n == 1 + 11 + 91 + 891, f"{n} vectors")


def test_criterion_5_kostant_oracle():
    with Gate(5, "production K equals box brute force, k <= 4, entries in [-4, 4]") as g:
        for k in range(1, 5):
            table = kostant_brute_force_table(k, 4 * (k // 2)) if k > 1 else {(0,): 1}
            for v in zero_sum_vectors(k, -4, 4):
                assert sum(max(a, 0) for a in v) <= 4 * (k // 2)
                g.check(kostant(v) == table.get(v, 0), f"{v}: {kostant(v)} vs {table.get(v, 0)}")


def test_criterion_6_ray_classification():
    with Gate(6, "all 36 rays of the worked example: classification matches K at t in [50, 60], stabilise by 60") as g:
        nu, lam, mu = P([4, 3, 1], 3), P([2, 1, 0], 3), P([3, 2, 0], 3)
        perms = all_permutations(3)
        for s in perms:
            for t in perms:
                r = build_ray(s, t, nu, lam, mu)
                verdict = classify_ray(r).verdict
                nonzero = [kostant(r.at(x)) != 0 for x in range(50, 61)]
                expected = all(nonzero) if verdict is Verdict.EVENTUALLY_NONZERO else not any(nonzero)
                g.check(expected, f"{s.one_line()},{t.one_line()}: {verdict} vs {nonzero}")
                stab = find_stability_threshold(r, 60)
                g.check(stab is not None and stab.polynomial.degree <= 1, f"{s.one_line()},{t.one_line()}: {stab}")


def test_criterion_7_unimodularity():
    with Gate(7, "consecutive ones for k <= 8, exhaustive unimodularity for k <= 4") as g:
        for k in range(2, 9):
            g.check(has_consecutive_ones(simple_root_matrix(k)), f"k={k}")
        for k in range(2, 5):
            g.check(check_total_unimodularity(k), f"k={k}")


def test_criterion_8_integrality():
    with Gate(8, "Steinberg arguments integral for k in 2..5 over 100 seeded draws") as g:
        rng = random.Random(8)
        for k in (2, 3, 4, 5):
            perms = all_permutations(k)
            d = staircase(k)
            for _ in range(100):
                lam = P(sorted((rng.randint(0, 7) for _ in range(k)), reverse=True), k)
                mu = P(sorted((rng.randint(0, 7) for _ in range(k)), reverse=True), k)
                nu = P(sorted(vadd(lam.parts, mu.parts), reverse=True), k)
                s, t = rng.choice(perms), rng.choice(perms)
                arg = vsub(vadd(permute(s, vadd(lam.parts, d)), permute(t, vadd(mu.parts, d))), vadd(nu.parts, vscale(2, d)))
                g.check(all(x.denominator == 1 for x in arg), f"k={k}: {arg}")
                g.check(sum(arg) == 0, f"k={k}: sum {sum(arg)}")
