"""Univariate polynomials with exact rational coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DuplicateAbscissa


@dataclass(frozen=True)
class ExactPolynomial:
    """Coefficients constant term first, trailing zeros stripped.

    The zero polynomial has no coefficients and degree -1.
    """

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = [Fraction(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def coefficient_strings(self) -> list[str]:
        return [str(c) if c.denominator != 1 else f"{c.numerator}/1" for c in self.coefficients]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for e in range(self.degree, -1, -1):
            c = self.coefficients[e]
            if c == 0:
                continue
            mag = abs(c)
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if e == 0:
                body = str(mag)
            elif mag == 1:
                body = mono
            elif mag.denominator == 1:
                body = f"{mag}*{mono}"
            else:
                body = f"({mag})*{mono}"
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms)


def _mul_linear(coeffs: list[Fraction], root) -> list[Fraction]:
    # coeffs * (t - root)
    out = [Fraction(0)] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        out[i + 1] += c
        out[i] -= c * root
    return out


def interpolate(samples: Iterable[Sequence]) -> ExactPolynomial:
    """Newton divided differences through ``(t, value)`` pairs."""
    samples = list(samples)
    if not samples:
        raise ValueError("need at least one sample")
    xs = [Fraction(t) for t, _ in samples]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa(f"repeated abscissa in {[t for t, _ in samples]}")
    table = [Fraction(v) for _, v in samples]
    newton = [table[0]]
    for level in range(1, len(xs)):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(len(table) - 1)]
        newton.append(table[0])
    # expand sum newton[m] * prod_{i<m} (t - xs[i]) into the monomial basis
    coeffs = [Fraction(0)] * len(xs)
    basis = [Fraction(1)]
    for m, c in enumerate(newton):
        for i, b in enumerate(basis):
            coeffs[i] += c * b
        basis = _mul_linear(basis, xs[m])
    return ExactPolynomial(tuple(coeffs))
