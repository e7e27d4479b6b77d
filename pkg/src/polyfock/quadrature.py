"""Quadrature rules for radial, angular, and Gaussian-weighted planar integrals."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import roots_genlaguerre

__all__ = [
    "QuadratureRule",
    "InsufficientQuadratureError",
    "GAUSS_LAGUERRE_RADIAL",
    "TRAPEZOID_ANGULAR",
    "TENSOR",
    "gauss_laguerre",
    "angular_rule",
    "gaussian_plane_rule",
]

GAUSS_LAGUERRE_RADIAL = "gauss_laguerre_radial"
TRAPEZOID_ANGULAR = "trapezoid_angular"
TENSOR = "tensor"

_KINDS = (GAUSS_LAGUERRE_RADIAL, TRAPEZOID_ANGULAR, TENSOR)


class InsufficientQuadratureError(RuntimeError):
    """Node doubling failed to bring two successive estimates within tolerance."""


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and positive weights for one of the three supported rule kinds.

    * ``gauss_laguerre_radial``: approximates ``int_0^inf t^alpha e^{-t} f(t) dt``
      by ``sum(weights * f(nodes))`` (the weight function is implicit).
    * ``trapezoid_angular``: approximates ``int_0^{2 pi} f`` on uniform nodes.
    * ``tensor``: complex nodes in the plane; approximates the
      Gaussian-weighted area integral ``int f(w) e^{-|w|^2} dA(w)``.
    """

    kind: str
    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown quadrature kind {self.kind!r}")
        nodes = np.asarray(self.nodes)
        weights = np.asarray(self.weights, dtype=float)
        if nodes.shape != weights.shape or nodes.ndim != 1:
            raise ValueError("nodes and weights must be 1-d arrays of equal length")
        if not np.all(weights > 0):
            raise ValueError("quadrature weights must be positive")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    def __len__(self) -> int:
        return len(self.nodes)


def gauss_laguerre(count: int, alpha: float = 0.0) -> QuadratureRule:
    """Generalized Gauss-Laguerre rule with weight ``t^alpha e^{-t}`` on (0, inf)."""
    if count < 1:
        raise ValueError("node count must be positive")
    nodes, weights = roots_genlaguerre(count, alpha)
    return QuadratureRule(GAUSS_LAGUERRE_RADIAL, nodes, weights)


def angular_rule(count: int) -> QuadratureRule:
    """Uniform (periodic trapezoid) rule on [0, 2 pi)."""
    if count < 1:
        raise ValueError("node count must be positive")
    nodes = 2.0 * np.pi * np.arange(count) / count
    weights = np.full(count, 2.0 * np.pi / count)
    return QuadratureRule(TRAPEZOID_ANGULAR, nodes, weights)


def gaussian_plane_rule(radial_count: int, angular_count: int) -> QuadratureRule:
    """Tensor rule for ``int_C f(w) e^{-|w|^2} dA(w)``.

    Radial Gauss-Laguerre in t = r^2 crossed with uniform angles; nodes are
    the complex points ``sqrt(t) e^{i theta}``.
    """
    radial = gauss_laguerre(radial_count)
    t = radial.nodes
    theta = 2.0 * np.pi * np.arange(angular_count) / angular_count
    points = np.sqrt(t)[:, None] * np.exp(1j * theta)[None, :]
    weights = np.broadcast_to(
        (np.pi / angular_count) * radial.weights[:, None], points.shape
    )
    return QuadratureRule(TENSOR, points.ravel(), weights.ravel().copy())
