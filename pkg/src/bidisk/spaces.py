"""Weighted coefficient norms on the disk and bidisk.

The two-variable space with parameter ``alpha`` carries the norm
``||f||^2 = sum (k+1)^alpha (l+1)^alpha |a[k,l]|^2``; its one-variable
counterpart drops one factor.  ``alpha = 0`` is the Hardy space, ``-1`` the
Bergman space, ``1`` the Dirichlet space.  This module also houses the decay
gauge ``phi`` used to state sharp approximation rates, the index map
``beta_of_alpha`` for diagonal restriction, reproducing-kernel norms, and the
closed-form constants comparing a diagonal subspace with its one-variable
image.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np

from .errors import DivergentKernelError, UnsupportedRateError
from .series import DiagonalPattern, OneVarSeries, TwoVarSeries

__all__ = [
    "AlphaWeight",
    "as_alpha",
    "ComparisonConstants",
    "norm1",
    "norm2",
    "inner1",
    "inner2",
    "phi",
    "phi_inv",
    "beta_of_alpha",
    "kernel_norm_sq",
    "comparison_constants",
]


@lru_cache(maxsize=128)
def _weight_table(alpha: float, size: int) -> np.ndarray:
    w = np.power(np.arange(1.0, size + 1.0), alpha)
    w.setflags(write=False)
    return w


@dataclass(frozen=True)
class AlphaWeight:
    """Space parameter ``alpha`` with the coefficient weight ``(k+1)^alpha``.

    Weight tables are memoized per ``(alpha, size)`` in power-of-two blocks so
    repeated Gram assemblies stay out of transcendental hot paths.
    """

    alpha: float

    def __post_init__(self):
        if not math.isfinite(self.alpha):
            raise ValueError("alpha must be finite")
        object.__setattr__(self, "alpha", float(self.alpha))

    def weights(self, deg: int) -> np.ndarray:
        """Read-only array ``[(k+1)^alpha for k in 0..deg]``."""
        size = 1 << max(0, (deg + 1).bit_length())
        return _weight_table(self.alpha, size)[: deg + 1]

    def weight(self, k: int) -> float:
        return (k + 1.0) ** self.alpha


AlphaLike = Union[AlphaWeight, float, int]


def as_alpha(a: AlphaLike) -> AlphaWeight:
    if isinstance(a, AlphaWeight):
        return a
    return AlphaWeight(float(a))


def norm2(f: TwoVarSeries, a: AlphaLike) -> float:
    """Two-variable norm ``sqrt(sum (k+1)^a (l+1)^a |coeff|^2)`` (exact finite sum)."""
    aw = as_alpha(a)
    w1 = aw.weights(f.deg1)
    w2 = aw.weights(f.deg2)
    return float(np.sqrt(np.einsum("k,l,kl->", w1, w2, np.abs(f.coeffs) ** 2).real))


def norm1(F: OneVarSeries, a: AlphaLike) -> float:
    """One-variable norm ``sqrt(sum (k+1)^a |coeff|^2)``."""
    aw = as_alpha(a)
    return float(np.sqrt(np.dot(aw.weights(F.deg), np.abs(F.coeffs) ** 2)))


def inner2(f: TwoVarSeries, g: TwoVarSeries, a: AlphaLike) -> complex:
    """Sesquilinear form inducing :func:`norm2`; the second argument is conjugated."""
    aw = as_alpha(a)
    d1 = min(f.deg1, g.deg1)
    d2 = min(f.deg2, g.deg2)
    w1 = aw.weights(d1)
    w2 = aw.weights(d2)
    block_f = f.coeffs[: d1 + 1, : d2 + 1]
    block_g = g.coeffs[: d1 + 1, : d2 + 1]
    return complex(np.einsum("k,l,kl->", w1, w2, block_f * np.conj(block_g)))


def inner1(F: OneVarSeries, G: OneVarSeries, a: AlphaLike) -> complex:
    aw = as_alpha(a)
    d = min(F.deg, G.deg)
    w = aw.weights(d)
    return complex(np.dot(w, F.coeffs[: d + 1] * np.conj(G.coeffs[: d + 1])))


def phi(a: AlphaLike, s: float) -> float:
    """Decay gauge: ``s^(1-alpha)`` for ``alpha < 1``, ``max(log s, 0)`` at ``alpha = 1``.

    Undefined for ``alpha > 1`` (the spaces are algebras there and no rate is
    attached to them).
    """
    alpha = as_alpha(a).alpha
    if alpha > 1.0:
        raise UnsupportedRateError(f"no rate gauge is defined for alpha = {alpha} > 1")
    if s < 0.0:
        raise ValueError("the rate gauge is defined on s >= 0")
    if alpha == 1.0:
        return max(math.log(s), 0.0) if s > 0.0 else 0.0
    return float(s) ** (1.0 - alpha)


def phi_inv(a: AlphaLike, t: float) -> float:
    """Inverse of :func:`phi` on the branch ``s >= 1``."""
    alpha = as_alpha(a).alpha
    if alpha > 1.0:
        raise UnsupportedRateError(f"no rate gauge is defined for alpha = {alpha} > 1")
    if alpha == 1.0:
        if t < 0.0:
            raise ValueError("the logarithmic gauge only takes values t >= 0")
        return math.exp(t)
    if t < 0.0:
        raise ValueError("the power gauge only takes values t >= 0")
    return float(t) ** (1.0 / (1.0 - alpha))


def beta_of_alpha(alpha: float) -> float:
    """Index of the one-variable space receiving diagonal restrictions."""
    alpha = as_alpha(alpha).alpha
    return alpha - 1.0 if alpha >= 0.0 else 2.0 * alpha - 1.0


def kernel_norm_sq(a: AlphaLike, w: complex, tol: float = 1e-12) -> float:
    """Squared reproducing-kernel norm ``sum_k (k+1)^(-alpha) |w|^(2k)``.

    The sum is truncated once a rigorous geometric majorant bounds the tail
    below ``tol``: past the index where ``q_k = ((k+2)/(k+1))^|alpha| |w|^2``
    drops under 1, the terms are dominated by a geometric series with ratio
    ``q_k``.
    """
    alpha = as_alpha(a).alpha
    r2 = abs(w) ** 2
    if r2 >= 1.0:
        raise DivergentKernelError(
            f"kernel norm diverges for |w| = {abs(w):.6g} >= 1"
        )
    total = 0.0
    k = 0
    term = 1.0
    while True:
        total += term
        q = ((k + 2.0) / (k + 1.0)) ** abs(alpha) * r2
        if q < 1.0 and term * q / (1.0 - q) < tol:
            break
        k += 1
        term = (k + 1.0) ** (-alpha) * r2**k
    return total


@dataclass(frozen=True)
class ComparisonConstants:
    """Constants ``c2 <= c1`` with ``c2 ||R(f)|| <= ||f|| <= c1 ||R(f)||``."""

    c1: float
    c2: float

    def __post_init__(self):
        if not (0.0 < self.c2 <= self.c1):
            raise ValueError(f"constants must satisfy 0 < c2 <= c1, got {self}")


def comparison_constants(alpha: float, pat: DiagonalPattern) -> ComparisonConstants:
    """Two-sided constants comparing a diagonal series with its restriction.

    For a series supported on ``(M k, N k)`` the per-term weight ratio
    ``((Mk+1)(Nk+1) / (k+1)^2)^alpha`` runs monotonically between 1 and
    ``(M N)^alpha``, which yields the closed forms below; the pattern
    ``(1, 1)`` is an exact isometry.
    """
    alpha = as_alpha(alpha).alpha
    ma = float(pat.M) ** alpha
    na = float(pat.N) ** alpha
    c1 = max(1.0, ma) * max(1.0, na)
    c2 = min(1.0, ma) * min(1.0, na)
    return ComparisonConstants(c1=c1, c2=c2)
