"""Reproducing kernels and the convolution densities of the Berezin transform.

Order n >= 1 selects the polyanalytic Fock space; d >= 1 is the complex
dimension, in which kernels and densities factor coordinate-wise.  Points in
dimension d are complex scalars (d = 1) or length-d sequences of complex
numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .quadrature import InsufficientQuadratureError, QuadratureRule, gauss_laguerre
from .special import laguerre_eval

__all__ = [
    "FockOrder",
    "kernel",
    "normalized_kernel",
    "density",
    "density_radial",
    "normalization_residual",
]


@dataclass(frozen=True)
class FockOrder:
    """Polyanalytic order n and complex dimension d."""

    n: int
    d: int = 1

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise ValueError("polyanalytic order n must be a positive integer")
        if not isinstance(self.d, (int, np.integer)) or self.d < 1:
            raise ValueError("complex dimension d must be a positive integer")


def _coords(order: FockOrder, z) -> np.ndarray:
    zs = np.atleast_1d(np.asarray(z, dtype=complex))
    if zs.shape != (order.d,):
        raise ValueError(f"expected a point with {order.d} complex coordinate(s)")
    if not np.all(np.isfinite(zs.real) & np.isfinite(zs.imag)):
        raise ValueError("coordinates must be finite")
    return zs


def kernel(order: FockOrder, z, w) -> complex:
    """Reproducing kernel: prod_j L^1_{n-1}(|z_j - w_j|^2) exp(z_j conj(w_j)).

    Hermitian: kernel(order, w, z) == conj(kernel(order, z, w)).  Values grow
    like e^{|z||w|} and overflow a double once the combined exponent passes
    ~709; use `normalized_kernel` for large points.
    """
    zs = _coords(order, z)
    ws = _coords(order, w)
    n = order.n
    out = complex(1.0)
    for zj, wj in zip(zs, ws):
        s = abs(zj - wj) ** 2
        out *= laguerre_eval(n - 1, 1, s) * np.exp(zj * np.conj(wj))
    return complex(out)


def normalized_kernel(order: FockOrder, z, w) -> complex:
    """Kernel at (w, z) divided by sqrt(kernel(z, z)); a unit vector in the space.

    Computed by combining exponents before a single exp per coordinate, so no
    intermediate overflows for |z|, |w| <= 30.
    """
    zs = _coords(order, z)
    ws = _coords(order, w)
    n = order.n
    out = complex(1.0)
    for zj, wj in zip(zs, ws):
        s = abs(wj - zj) ** 2
        exponent = wj * np.conj(zj) - 0.5 * abs(zj) ** 2
        out *= laguerre_eval(n - 1, 1, s) / math.sqrt(n) * np.exp(exponent)
    return complex(out)


def density_radial(n: int, t):
    """Radial factor of the transform density at squared radius t:
    e^{-t} L^1_{n-1}(t)^2 / (n pi)."""
    ts = np.asarray(t, dtype=float)
    lag = laguerre_eval(n - 1, 1, ts)
    out = np.exp(-ts) * lag * lag / (n * np.pi)
    if np.ndim(t) == 0:
        return float(out)
    return out


def density(order: FockOrder, z):
    """Probability density of the transform; factorizes over coordinates.

    For d = 1, ``z`` may be a complex scalar or array (vectorized); for
    d >= 2 it is a length-d point or an array whose last axis has length d.
    """
    if order.d == 1:
        zs = np.asarray(z, dtype=complex)
        out = density_radial(order.n, zs.real**2 + zs.imag**2)
        return out
    zs = np.asarray(z, dtype=complex)
    if zs.shape[-1] != order.d:
        raise ValueError(f"expected points with last axis of length {order.d}")
    out = np.ones(zs.shape[:-1], dtype=float)
    for j in range(order.d):
        zj = zs[..., j]
        out = out * density_radial(order.n, zj.real**2 + zj.imag**2)
    if out.ndim == 0:
        return float(out)
    return out


def normalization_residual(
    order: FockOrder,
    quad: QuadratureRule | None = None,
    tol: float = 1e-12,
    max_doublings: int = 5,
) -> float:
    """|integral of the density - 1| by radial Gauss-Laguerre per coordinate.

    The one-dimensional mass is (1/n) int_0^inf e^{-t} L^1_{n-1}(t)^2 dt; the
    d-dimensional mass is its d-th power.  Node doubling must stabilize the
    estimate to ``tol`` or InsufficientQuadratureError is raised.
    """
    if quad is not None:
        if quad.kind != "gauss_laguerre_radial":
            raise ValueError("quad must be a radial Gauss-Laguerre rule")
        count = len(quad)
    else:
        count = 64

    def mass_1d(m: int) -> float:
        rule = gauss_laguerre(m)
        lag = laguerre_eval(order.n - 1, 1, rule.nodes)
        return float(np.dot(rule.weights, lag * lag) / order.n)

    prev = mass_1d(count)
    value = prev
    converged = False
    for _ in range(max_doublings):
        count *= 2
        value = mass_1d(count)
        if abs(value - prev) <= tol:
            converged = True
            break
        prev = value
    if not converged:
        raise InsufficientQuadratureError(
            f"density normalization did not stabilize to {tol} for n={order.n}"
        )
    return abs(value**order.d - 1.0)
