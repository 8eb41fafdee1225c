import csv
import io
import json
from math import comb

import pytest
from hypothesis import given, settings

from lrstretch import make_partition
from lrstretch.core import zero_partition
from lrstretch.stretch import StretchVerdict, certify_polynomiality, lr_coefficient, sample_stretched
from lrstretch.sweep import random_triples

from ._strategies import partitions, triples


def P(*parts, k=4):
    return make_partition(list(parts), k)


def test_samples_worked_example(worked_example):
    assert sample_stretched(*worked_example, {0, 1}) == [(0, 1), (1, 2)]


@pytest.mark.parametrize("method", ["hive", "steinberg", "tableaux"])
def test_samples_agree_across_methods(worked_example, method):
    assert sample_stretched(*worked_example, [2, 3], method=method) == [(2, 3), (3, 4)]


@settings(max_examples=20, deadline=None)
@given(triples(4))
def test_zero_stretch_is_one(t):
    assert sample_stretched(*t, [0]) == [(0, 1)]


def test_unknown_method(worked_example):
    with pytest.raises(ValueError):
        lr_coefficient(*worked_example, method="bogus")


def test_certify_worked_example(worked_example):
    report = certify_polynomiality(*worked_example, holdout=5)
    assert report.verdict is StretchVerdict.POLYNOMIAL
    assert report.fitted.degree <= 1
    assert str(report.fitted) == "t + 1"
    assert report.verified_range == (2, 6)
    assert [v for _, v in report.samples] == [1, 2, 3, 4, 5, 6, 7]


@given(partitions(4, max_part=3))
def test_certify_zero_mu(lam):
    report = certify_polynomiality(lam, lam, zero_partition(4), holdout=3)
    assert report.verdict is StretchVerdict.POLYNOMIAL
    assert report.fitted.coefficients == (1,)


def test_certify_cubic_at_degree_bound():
    report = certify_polynomiality(P(5, 4, 2, 1), P(3, 2, 1), P(3, 2, 1), holdout=5)
    assert report.verdict is StretchVerdict.POLYNOMIAL
    assert report.fitted.degree == 3 == report.degree_bound
    # binom(t + 3, 3)
    assert all(v == comb(t + 3, 3) for t, v in report.samples)


def test_certify_empty_polytope():
    nu, lam, mu = P(4, 0, 0, 0), P(2, 2, 0, 0), P(0, 0, 0, 0)
    report = certify_polynomiality(nu, lam, mu, holdout=3)
    assert report.empty_polytope
    assert report.samples[0] == (0, 1)
    assert report.fitted.is_zero() and report.verdict is StretchVerdict.POLYNOMIAL


@pytest.mark.parametrize("triple", random_triples(6, ks=(3, 4), seed=11))
def test_hive_and_steinberg_reports_identical(triple):
    a = certify_polynomiality(*triple, holdout=3, method="hive").to_dict()
    b = certify_polynomiality(*triple, holdout=3, method="steinberg").to_dict()
    a.pop("method"), b.pop("method")
    assert a == b


@pytest.mark.parametrize("triple", random_triples(8, ks=(3, 4), seed=5))
def test_fitted_values_are_non_negative_integers(triple):
    report = certify_polynomiality(*triple, holdout=4)
    assert report.fitted.degree <= comb(triple[0].k - 1, 2)
    for t, _ in report.samples:
        v = report.fitted(t)
        assert v.denominator == 1 and v >= 0
    assert report.fitted(0) == 1


def test_weighted_draw_reaches_higher_degrees():
    degrees = {certify_polynomiality(*t, holdout=2).fitted.degree
               for t in random_triples(20, ks=(4,), max_weight=16, seed=3, weighted=True)}
    assert max(degrees) >= 2


def test_random_triples_are_reproducible():
    assert random_triples(5, seed=9) == random_triples(5, seed=9)


def test_threads_do_not_change_result(worked_example):
    a = certify_polynomiality(*worked_example, holdout=3, threads=1)
    b = certify_polynomiality(*worked_example, holdout=3, threads=2)
    assert a.to_json() == b.to_json()


def test_corrupted_samples_are_flagged(monkeypatch, worked_example):
    import lrstretch.stretch as stretch

    real = stretch._stretched_value
    monkeypatch.setattr(stretch, "_stretched_value", lambda job: real(job) + (job[3] == 4))
    report = certify_polynomiality(*worked_example, holdout=5)
    assert report.verdict is StretchVerdict.QUASI_POLYNOMIAL_SUSPECTED
    assert report.mismatches == [4]
    assert "bug" in report.note


def test_report_serialisation(worked_example):
    report = certify_polynomiality(*worked_example, holdout=2)
    data = json.loads(report.to_json())
    assert data["schema"] == "lr-stretch/1"
    assert data["polynomial"]["coefficients"] == ["1/1", "1/1"]
    assert data["verdict"] == "Polynomial"
    rows = list(csv.DictReader(io.StringIO(report.to_csv())))
    assert [r["role"] for r in rows] == ["fit", "fit", "holdout", "holdout"]
    assert rows[3] == {"t": "3", "value": "4", "fitted": "4", "role": "holdout"}
