"""Generalized Laguerre polynomials and the Bessel function J0.

Laguerre polynomials are available both as exact rational polynomials and
through a floating three-term recurrence.  J0 is evaluated from its power
series for small arguments and from the cosine integral representation
(composite Gauss-Legendre panels) for large ones; the two branches serve as
mutual oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from numpy.polynomial.legendre import leggauss

from .quadrature import InsufficientQuadratureError, QuadratureRule, gauss_laguerre
from .rational import RationalPoly

__all__ = [
    "LaguerreIndex",
    "laguerre_poly",
    "laguerre_eval",
    "bessel_j0",
    "j0_series",
    "j0_integral",
    "laguerre_bessel_residual",
    "J0_SERIES_CUTOFF",
]

# Series/integral switch point: below this the power series is fast and
# loses at most ~5e-13 to cancellation; above it the integral takes over.
J0_SERIES_CUTOFF = 12.0


@dataclass(frozen=True)
class LaguerreIndex:
    """Degree k and integer superscript beta of a generalized Laguerre polynomial."""

    k: int
    beta: int = 0

    def __post_init__(self):
        if not isinstance(self.k, (int, np.integer)) or self.k < 0:
            raise ValueError("degree k must be a nonnegative integer")
        if not isinstance(self.beta, (int, np.integer)) or self.beta < 0:
            raise ValueError("superscript beta must be a nonnegative integer")


def laguerre_poly(k: int, beta: int = 0) -> RationalPoly:
    """Exact generalized Laguerre polynomial of degree k, superscript beta."""
    idx = LaguerreIndex(int(k), int(beta))
    coeffs = [
        Fraction((-1) ** j * math.comb(idx.k + idx.beta, idx.k - j), math.factorial(j))
        for j in range(idx.k + 1)
    ]
    return RationalPoly(coeffs)


def laguerre_eval(k: int, beta: int, x):
    """Floating evaluation via the three-term recurrence; accepts arrays."""
    idx = LaguerreIndex(int(k), int(beta))
    xs = np.asarray(x, dtype=float)
    prev = np.zeros_like(xs)
    cur = np.ones_like(xs)
    for m in range(idx.k):
        prev, cur = cur, ((2 * m + 1 + idx.beta - xs) * cur - (m + idx.beta) * prev) / (
            m + 1
        )
    if np.ndim(x) == 0:
        return float(cur[()])
    return cur


def j0_series(x) -> np.ndarray | float:
    """Power series sum_m (-1)^m (x/2)^{2m} / (m!)^2; accurate for |x| <~ 12."""
    xs = np.asarray(x, dtype=float)
    u = 0.25 * xs * xs
    term = np.ones_like(xs)
    acc = np.ones_like(xs)
    for m in range(1, 120):
        term = term * (-u) / (m * m)
        acc += term
        if np.max(np.abs(term)) < 1e-18:
            break
    if np.ndim(x) == 0:
        return float(acc[()])
    return acc


def j0_integral(x: float, tol: float = 1e-14, max_doublings: int = 8) -> float:
    """Reference value of (1/pi) * int_0^pi cos(x cos theta) d theta.

    Composite 16-point Gauss-Legendre panels sized to the oscillation of the
    integrand, with panel-count doubling until two estimates agree.
    """
    ax = abs(float(x))
    gl_nodes, gl_weights = leggauss(16)

    def estimate(panels: int) -> float:
        edges = np.linspace(0.0, np.pi, panels + 1)
        mid = 0.5 * (edges[1:] + edges[:-1])
        half = 0.5 * (edges[1:] - edges[:-1])
        theta = mid[:, None] + half[:, None] * gl_nodes[None, :]
        vals = np.cos(ax * np.cos(theta))
        return float(np.sum(half[:, None] * gl_weights[None, :] * vals) / np.pi)

    panels = max(4, int(math.ceil(ax / 3.0)))
    prev = estimate(panels)
    for _ in range(max_doublings):
        panels *= 2
        cur = estimate(panels)
        if abs(cur - prev) <= tol:
            return cur
        prev = cur
    raise InsufficientQuadratureError(
        f"J0 integral did not stabilize to {tol} at x={x}"
    )


def bessel_j0(x):
    """J0 evaluated from the series (small |x|) or the integral form (large |x|).

    Even in x by construction.  Absolute accuracy ~1e-12 (kept well past
    |x| = 50 by growing the panel count with |x|).
    """
    if np.ndim(x) == 0:
        ax = abs(float(x))
        if ax <= J0_SERIES_CUTOFF:
            return j0_series(ax)
        return j0_integral(ax)
    xs = np.abs(np.asarray(x, dtype=float))
    out = np.empty_like(xs)
    small = xs <= J0_SERIES_CUTOFF
    if np.any(small):
        out[small] = j0_series(xs[small])
    for idx in np.nonzero(~small)[0]:
        out[idx] = j0_integral(xs[idx])
    return out


def laguerre_bessel_residual(
    k: int,
    x: float,
    quad: QuadratureRule | None = None,
    tol: float = 1e-10,
    max_doublings: int = 6,
) -> float:
    """Defect of the identity  k! L^0_k(x) e^{-x} = int_0^inf e^{-t} t^k J0(2 sqrt(x t)) dt.

    The integral is evaluated with a generalized Gauss-Laguerre rule of
    parameter k, with node doubling until two successive estimates agree to
    ``tol``; failing that, raises InsufficientQuadratureError.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if x < 0:
        raise ValueError("x must be nonnegative")

    if quad is not None:
        if quad.kind != "gauss_laguerre_radial":
            raise ValueError("quad must be a radial Gauss-Laguerre rule")
        count = len(quad)
    else:
        count = 128

    def integral(m: int) -> float:
        rule = gauss_laguerre(m, alpha=float(k))
        vals = bessel_j0(2.0 * np.sqrt(x * rule.nodes))
        return float(np.dot(rule.weights, vals))

    prev = integral(count)
    value = prev
    converged = False
    for _ in range(max_doublings):
        count *= 2
        value = integral(count)
        if abs(value - prev) <= tol:
            converged = True
            break
        prev = value
    if not converged:
        raise InsufficientQuadratureError(
            f"Laguerre-Bessel integral did not converge to {tol} at (k={k}, x={x})"
        )

    lhs = math.factorial(k) * laguerre_eval(k, 0, x) * math.exp(-x)
    return abs(lhs - value)
