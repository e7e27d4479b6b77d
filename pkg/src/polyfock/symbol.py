"""Exact Fourier multiplier data for the Berezin transform.

The transform acts by convolution with a radial probability density whose
Fourier transform (angular-frequency convention, see `engine`) factors as a
polynomial profile times a Gaussian:

    multiplier(z) = poly(|z|^2 / 4) * exp(-|z|^2 / 4).

This module builds that polynomial exactly over the rationals, evaluates the
radial profile ``u(x) = poly(x) e^{-x}``, and provides the smooth quotient
``(1 - multiplier(z)) / (-|z|^2)`` with a series expansion across the
removable singularity at the origin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .rational import RationalPoly
from .special import laguerre_poly

__all__ = [
    "BerezinSymbol",
    "berezin_symbol",
    "laplacian_gaussian_check",
    "iterated_fd_laplacian",
    "StepTooCoarseError",
    "QUOTIENT_SERIES_RADIUS",
]

# Below this |z| the quotient switches to its truncated Taylor series
# (terms through t^8 in t = |z|^2/4).
QUOTIENT_SERIES_RADIUS = 1e-2
_QUOTIENT_SERIES_TERMS = 9


class StepTooCoarseError(RuntimeError):
    """Richardson ratios are too far from the stencil's theoretical order."""


@dataclass(frozen=True)
class BerezinSymbol:
    """Order n together with the exact multiplier polynomial.

    The polynomial has degree 2(n-1) and constant term exactly 1.
    """

    order: int
    poly: RationalPoly

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be a positive integer")
        if self.poly.coefficient(0) != 1:
            raise ValueError("multiplier polynomial must have constant term 1")
        if self.poly.degree != 2 * (self.order - 1):
            raise ValueError("multiplier polynomial must have degree 2(n-1)")

    def profile(self, x):
        """Radial profile u(x) = poly(x) * exp(-x); u(0) = 1, |u| < 1 for x > 0."""
        xs = np.asarray(x, dtype=float)
        out = self.poly(xs) * np.exp(-xs)
        if np.ndim(x) == 0:
            return float(out)
        return out

    def multiplier(self, z):
        """Multiplier value at frequency z (a complex scalar or array)."""
        zs = np.asarray(z, dtype=complex)
        t = 0.25 * (zs.real**2 + zs.imag**2)
        out = self.poly(t) * np.exp(-t)
        if np.ndim(z) == 0:
            return float(out)
        return out

    def profile_series(self, terms: int) -> list[Fraction]:
        """Exact Taylor coefficients of the profile u at 0, ascending order."""
        q = self.poly.coeffs
        out = []
        for m in range(terms):
            c = Fraction(0)
            for j in range(min(m, len(q) - 1) + 1):
                c += q[j] * Fraction((-1) ** (m - j), math.factorial(m - j))
            out.append(c)
        return out

    def quotient_series(self, terms: int = _QUOTIENT_SERIES_TERMS) -> list[Fraction]:
        """Exact Taylor coefficients in t = |z|^2/4 of (1 - u(t)) / (-4t)."""
        c = self.profile_series(terms + 1)
        return [ck / 4 for ck in c[1:]]

    def _profile_minus_one(self, t: np.ndarray) -> np.ndarray:
        # u(t) - 1 without cancellation: (poly(t) - 1) e^{-t} + expm1(-t).
        tail = RationalPoly([Fraction(0), *self.poly.coeffs[1:]])
        return tail(t) * np.exp(-t) + np.expm1(-t)

    def quotient(self, z):
        """(1 - multiplier(z)) / (-|z|^2), extended smoothly across z = 0."""
        zs = np.asarray(z, dtype=complex)
        r2 = zs.real**2 + zs.imag**2
        t = 0.25 * r2
        scalar = np.ndim(z) == 0
        t = np.atleast_1d(t)
        r2 = np.atleast_1d(r2)
        out = np.empty_like(t)
        small = r2 <= QUOTIENT_SERIES_RADIUS**2
        if np.any(small):
            series = [float(c) for c in self.quotient_series()]
            acc = np.zeros_like(t[small])
            for c in reversed(series):
                acc = acc * t[small] + c
            out[small] = acc
        big = ~small
        if np.any(big):
            out[big] = self._profile_minus_one(t[big]) / r2[big]
        if scalar:
            return float(out[0])
        return out

    def quotient_multi(self, coords) -> float:
        """Quotient of the d-coordinate multiplier at z = (z_1, ..., z_d).

        The multiplier factorizes over coordinates as prod_j u(|z_j|^2/4);
        the quotient is (1 - prod_j u_j) / (-|z|^2).  Stable for small |z|
        via expm1/log1p; smooth in d = 1 but direction-dependent at the
        origin when d >= 2 and n >= 2.
        """
        zs = np.atleast_1d(np.asarray(coords, dtype=complex))
        t = 0.25 * (zs.real**2 + zs.imag**2)
        r2 = float(np.sum(zs.real**2 + zs.imag**2))
        if r2 == 0.0:
            return float(self.quotient_series()[0])
        v = self._profile_minus_one(t)
        if np.all(np.abs(v) < 0.5):
            one_minus_prod = -np.expm1(np.sum(np.log1p(v)))
        else:
            one_minus_prod = 1.0 - float(np.prod(1.0 + v))
        return float(one_minus_prod / (-r2))


@lru_cache(maxsize=None)
def berezin_symbol(n: int) -> BerezinSymbol:
    """Exact multiplier polynomial of order n.

    Double sum of signed Laguerre polynomials with binomial weights,
    evaluated entirely in rational arithmetic:

        (1/n) * sum_{k,l=0}^{n-1} C(n,k+1) C(n,l+1) C(k+l,k) (-1)^{k+l} L^0_{k+l}.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError("order must be a positive integer")
    n = int(n)
    acc = RationalPoly.zero()
    for k in range(n):
        for l in range(n):
            w = Fraction(
                (-1) ** (k + l)
                * math.comb(n, k + 1)
                * math.comb(n, l + 1)
                * math.comb(k + l, k),
                n,
            )
            acc = acc + w * laguerre_poly(k + l, 0)
    return BerezinSymbol(n, acc)


def _stencil_laplacian(values: np.ndarray, h: float) -> np.ndarray:
    # Fourth-order central second differences in both axes; trims a border
    # of width 2 from each side.
    c = values[2:-2, 2:-2]
    d2x = (
        -values[2:-2, 4:] + 16 * values[2:-2, 3:-1] - 30 * c
        + 16 * values[2:-2, 1:-3] - values[2:-2, :-4]
    ) / (12 * h * h)
    d2y = (
        -values[4:, 2:-2] + 16 * values[3:-1, 2:-2] - 30 * c
        + 16 * values[1:-3, 2:-2] - values[:-4, 2:-2]
    ) / (12 * h * h)
    return d2x + d2y

def iterated_fd_laplacian(func, z: complex, k: int, h: float):
    """k-fold composed fourth-order finite-difference Laplacian of ``func`` at z.

    ``func`` must accept a complex ndarray; k = 0 returns func(z).
    """
    if k == 0:
        return complex(func(np.asarray([[z]], dtype=complex))[0, 0])
    half = 2 * k
    offsets = h * np.arange(-half, half + 1)
    zz = z + offsets[None, :] + 1j * offsets[:, None]
    vals = np.asarray(func(zz), dtype=complex)
    for _ in range(k):
        vals = _stencil_laplacian(vals, h)
    return complex(vals[0, 0])


def _richardson_limit(func, z, k, h0, order=4, check_ratio=True):
    d1 = iterated_fd_laplacian(func, z, k, h0)
    d2 = iterated_fd_laplacian(func, z, k, h0 / 2)
    d4 = iterated_fd_laplacian(func, z, k, h0 / 4)
    gain = 2.0**order
    scale = max(abs(d1), abs(d2), abs(d4), 1.0)
    if check_ratio:
        num = d1 - d2
        den = d2 - d4
        # Only meaningful when the differences are above the round-off floor.
        if abs(den) > 1e3 * np.finfo(float).eps * scale:
            ratio = abs(num / den)
            if not (0.8 * gain <= ratio <= 1.2 * gain):
                raise StepTooCoarseError(
                    f"Richardson ratio {ratio:.3g} deviates from {gain:.0f} "
                    f"by more than 20% (k={k}, z={z}, h={h0})"
                )
    e1 = (gain * d2 - d1) / (gain - 1)
    e2 = (gain * d4 - d2) / (gain - 1)
    gain2 = 2.0 ** (order + 2)
    return (gain2 * e2 - e1) / (gain2 - 1)


def laplacian_gaussian_check(
    k: int, sample_points, base_step: float | None = None
) -> float:
    """Max residual of the iterated-Laplacian identity for the quarter Gaussian.

    Compares the k-fold finite-difference Laplacian of g(z) = exp(-|z|^2/4)
    (fourth-order stencils, two Richardson levels) against the closed form
    (-1)^k k! L^0_k(|z|^2/4) exp(-|z|^2/4) at each sample point.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if base_step is None:
        base_step = 0.5 + 0.15 * k
    lag = laguerre_poly(k, 0)
    sign = (-1) ** k * math.factorial(k)

    def gaussian(zz):
        return np.exp(-0.25 * (zz.real**2 + zz.imag**2))

    worst = 0.0
    for z in sample_points:
        z = complex(z)
        t = 0.25 * abs(z) ** 2
        exact = sign * float(lag(t)) * math.exp(-t)
        if k == 0:
            approx = iterated_fd_laplacian(gaussian, z, 0, base_step).real
        else:
            approx = _richardson_limit(gaussian, z, k, base_step).real
        worst = max(worst, abs(approx - exact))
    return worst
