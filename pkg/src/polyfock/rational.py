"""Univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral
from typing import Iterable, Sequence

import numpy as np

__all__ = ["RationalPoly"]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Integral):
        return Fraction(int(value))
    raise TypeError(f"exact rational coefficient required, got {type(value).__name__}")


class RationalPoly:
    """Polynomial over Q, coefficients stored in ascending degree.

    Arithmetic and evaluation at int/Fraction points are exact.  Evaluation
    at float or complex points (scalars or numpy arrays) goes through a
    float Horner scheme.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [_as_fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "RationalPoly":
        return cls([0])

    @classmethod
    def one(cls) -> "RationalPoly":
        return cls([1])

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls([0, 1])

    @property
    def coeffs(self) -> Sequence[Fraction]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has degree 0."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return len(self._coeffs) == 1 and self._coeffs[0] == 0

    def coefficient(self, k: int) -> Fraction:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> "RationalPoly":
        return RationalPoly([-c for c in self._coeffs])

    def __add__(self, other) -> "RationalPoly":
        if isinstance(other, (Fraction, Integral)):
            other = RationalPoly([other])
        if not isinstance(other, RationalPoly):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return RationalPoly(
            [self.coefficient(k) + other.coefficient(k) for k in range(n)]
        )

    __radd__ = __add__

    def __sub__(self, other) -> "RationalPoly":
        if isinstance(other, (Fraction, Integral)):
            other = RationalPoly([other])
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalPoly":
        return RationalPoly([other]) + (-self)

    def __mul__(self, other) -> "RationalPoly":
        if isinstance(other, (Fraction, Integral)):
            return RationalPoly([c * other for c in self._coeffs])
        if not isinstance(other, RationalPoly):
            return NotImplemented
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def derivative(self) -> "RationalPoly":
        if self.degree == 0:
            return RationalPoly.zero()
        return RationalPoly([k * c for k, c in enumerate(self._coeffs)][1:])

    def __call__(self, x):
        if isinstance(x, (Fraction, Integral)):
            acc = Fraction(0)
            for c in reversed(self._coeffs):
                acc = acc * x + c
            return acc
        xs = np.asarray(x)
        acc = np.zeros_like(xs, dtype=complex if np.iscomplexobj(xs) else float)
        for c in reversed(self._coeffs):
            acc = acc * xs + float(c)
        if np.ndim(x) == 0:
            return acc[()]
        return acc

    def to_strings(self) -> list[str]:
        """Coefficients as ``"numerator/denominator"`` strings, ascending degree."""
        return [str(c) for c in self._coeffs]

    def __repr__(self) -> str:
        return f"RationalPoly([{', '.join(self.to_strings())}])"
