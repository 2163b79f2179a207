"""Truncated power series in one and two complex variables.

A ``TwoVarSeries`` stores the dense coefficient grid of
``f(z1, z2) = sum_{k,l} a[k,l] z1^k z2^l`` up to an explicit truncation
degree in each variable; a ``OneVarSeries`` is the univariate analogue.
Values are immutable and compare equal iff their grids, zero-extended to
common degrees, agree entrywise.  All arithmetic here is exact polynomial
arithmetic on the stored coefficients (no hidden truncation: products grow
the grid, and binary operations zero-extend to common degrees).

Structural maps between one and two variables also live here: slices
``f(., w)``, the diagonal restriction ``f(z, z)``, and the lifting
``F(z1^M z2^N)`` / restriction pair attached to a diagonal support pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Tuple, Union

import numpy as np

from .errors import (
    DomainError,
    GridSizeError,
    PatternViolationError,
    SingularReciprocalError,
)

__all__ = [
    "MAX_GRID_ENTRIES",
    "TwoVarSeries",
    "OneVarSeries",
    "DiagonalPattern",
    "constant1",
    "constant2",
    "monomial1",
    "monomial2",
    "separable",
    "multiply1",
    "multiply2",
    "reciprocal1",
    "reciprocal2",
    "slice_series",
    "diag_restrict",
    "lift",
    "restrict",
    "is_diagonal",
    "diagonal_project",
]

# Global cap on coefficient-grid size; exceeding it raises, never truncates.
MAX_GRID_ENTRIES = 4096 * 4096

Scalar = Union[int, float, complex]


def _check_entries(entries: int) -> None:
    if entries > MAX_GRID_ENTRIES:
        raise GridSizeError(
            f"coefficient grid of {entries} entries exceeds the cap of "
            f"{MAX_GRID_ENTRIES}"
        )


def _as_grid(values, ndim: int) -> np.ndarray:
    arr = np.asarray(values, dtype=np.complex128)
    if arr.ndim != ndim:
        raise ValueError(f"expected a {ndim}-dimensional coefficient array, got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError("coefficient array must be nonempty")
    if not np.all(np.isfinite(arr)):
        raise ValueError("coefficients must be finite (no NaN/Inf)")
    _check_entries(arr.size)
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class TwoVarSeries:
    """Bivariate polynomial / truncated power series on a dense grid.

    ``coeffs[k, l]`` is the coefficient of ``z1^k z2^l``; the grid shape is
    exactly ``(deg1 + 1, deg2 + 1)``.
    """

    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_grid(self.coeffs, 2))

    @property
    def deg1(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def deg2(self) -> int:
        return self.coeffs.shape[1] - 1

    @classmethod
    def from_terms(cls, terms: Mapping[Tuple[int, int], Scalar],
                   deg1: int | None = None, deg2: int | None = None) -> "TwoVarSeries":
        """Build a series from a ``{(k, l): coefficient}`` mapping."""
        if not terms and deg1 is None:
            deg1 = deg2 = 0
        if deg1 is None:
            deg1 = max(k for k, _ in terms)
            deg2 = max(l for _, l in terms)
        grid = np.zeros((deg1 + 1, deg2 + 1), dtype=np.complex128)
        for (k, l), c in terms.items():
            grid[k, l] = c
        return cls(grid)

    def coeff(self, k: int, l: int) -> complex:
        """Coefficient of ``z1^k z2^l`` (zero outside the stored grid)."""
        if 0 <= k <= self.deg1 and 0 <= l <= self.deg2:
            return complex(self.coeffs[k, l])
        return 0.0

    def pad(self, deg1: int, deg2: int) -> "TwoVarSeries":
        """Zero-extend to degrees at least ``(deg1, deg2)``."""
        d1 = max(deg1, self.deg1)
        d2 = max(deg2, self.deg2)
        if (d1, d2) == (self.deg1, self.deg2):
            return self
        grid = np.zeros((d1 + 1, d2 + 1), dtype=np.complex128)
        grid[: self.deg1 + 1, : self.deg2 + 1] = self.coeffs
        return TwoVarSeries(grid)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwoVarSeries):
            return NotImplemented
        d1 = max(self.deg1, other.deg1)
        d2 = max(self.deg2, other.deg2)
        return bool(np.array_equal(self.pad(d1, d2).coeffs, other.pad(d1, d2).coeffs))

    def isclose(self, other: "TwoVarSeries", rtol: float = 1e-12, atol: float = 1e-12) -> bool:
        d1 = max(self.deg1, other.deg1)
        d2 = max(self.deg2, other.deg2)
        return bool(np.allclose(self.pad(d1, d2).coeffs, other.pad(d1, d2).coeffs,
                                rtol=rtol, atol=atol))

    def __add__(self, other):
        if isinstance(other, TwoVarSeries):
            d1 = max(self.deg1, other.deg1)
            d2 = max(self.deg2, other.deg2)
            return TwoVarSeries(self.pad(d1, d2).coeffs + other.pad(d1, d2).coeffs)
        if isinstance(other, (int, float, complex)):
            grid = np.array(self.coeffs)
            grid[0, 0] += other
            return TwoVarSeries(grid)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TwoVarSeries(-self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (TwoVarSeries, int, float, complex)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TwoVarSeries):
            return multiply2(self, other)
        if isinstance(other, (int, float, complex)):
            return TwoVarSeries(self.coeffs * other)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"TwoVarSeries(deg1={self.deg1}, deg2={self.deg2})"


@dataclass(frozen=True, eq=False)
class OneVarSeries:
    """Univariate polynomial / truncated power series."""

    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_grid(self.coeffs, 1))

    @property
    def deg(self) -> int:
        return self.coeffs.shape[0] - 1

    def coeff(self, k: int) -> complex:
        if 0 <= k <= self.deg:
            return complex(self.coeffs[k])
        return 0.0

    def pad(self, deg: int) -> "OneVarSeries":
        if deg <= self.deg:
            return self
        grid = np.zeros(deg + 1, dtype=np.complex128)
        grid[: self.deg + 1] = self.coeffs
        return OneVarSeries(grid)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OneVarSeries):
            return NotImplemented
        d = max(self.deg, other.deg)
        return bool(np.array_equal(self.pad(d).coeffs, other.pad(d).coeffs))

    def isclose(self, other: "OneVarSeries", rtol: float = 1e-12, atol: float = 1e-12) -> bool:
        d = max(self.deg, other.deg)
        return bool(np.allclose(self.pad(d).coeffs, other.pad(d).coeffs, rtol=rtol, atol=atol))

    def __add__(self, other):
        if isinstance(other, OneVarSeries):
            d = max(self.deg, other.deg)
            return OneVarSeries(self.pad(d).coeffs + other.pad(d).coeffs)
        if isinstance(other, (int, float, complex)):
            grid = np.array(self.coeffs)
            grid[0] += other
            return OneVarSeries(grid)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return OneVarSeries(-self.coeffs)

    def __sub__(self, other):
        if isinstance(other, (OneVarSeries, int, float, complex)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, OneVarSeries):
            return multiply1(self, other)
        if isinstance(other, (int, float, complex)):
            return OneVarSeries(self.coeffs * other)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"OneVarSeries(deg={self.deg})"


@dataclass(frozen=True)
class DiagonalPattern:
    """Support pattern ``{(M k, N k) : k >= 0}`` for diagonal-type series."""

    M: int
    N: int

    def __post_init__(self):
        if not (isinstance(self.M, (int, np.integer)) and isinstance(self.N, (int, np.integer))):
            raise ValueError("pattern exponents must be integers")
        if self.M < 1 or self.N < 1:
            raise ValueError(f"pattern exponents must be >= 1, got ({self.M}, {self.N})")


def constant2(c: Scalar = 1.0) -> TwoVarSeries:
    return TwoVarSeries(np.array([[c]], dtype=np.complex128))


def constant1(c: Scalar = 1.0) -> OneVarSeries:
    return OneVarSeries(np.array([c], dtype=np.complex128))


def monomial2(k: int, l: int, c: Scalar = 1.0) -> TwoVarSeries:
    """The series ``c * z1^k z2^l``."""
    return TwoVarSeries.from_terms({(k, l): c})


def monomial1(k: int, c: Scalar = 1.0) -> OneVarSeries:
    grid = np.zeros(k + 1, dtype=np.complex128)
    grid[k] = c
    return OneVarSeries(grid)


def separable(g: OneVarSeries, h: OneVarSeries) -> TwoVarSeries:
    """The product series ``g(z1) h(z2)`` (outer product of coefficients)."""
    _check_entries((g.deg + 1) * (h.deg + 1))
    return TwoVarSeries(np.outer(g.coeffs, h.coeffs))


def multiply2(f: TwoVarSeries, g: TwoVarSeries) -> TwoVarSeries:
    """Exact product; result degrees are ``(f.deg1+g.deg1, f.deg2+g.deg2)``."""
    d1 = f.deg1 + g.deg1
    d2 = f.deg2 + g.deg2
    _check_entries((d1 + 1) * (d2 + 1))
    # Shift-add over the factor with fewer nonzero terms: exact and fast
    # when one factor is a short polynomial, which is the common case here.
    a, b = f.coeffs, g.coeffs
    if np.count_nonzero(a) > np.count_nonzero(b):
        a, b = b, a
    out = np.zeros((d1 + 1, d2 + 1), dtype=np.complex128)
    for k, l in zip(*np.nonzero(a)):
        out[k : k + b.shape[0], l : l + b.shape[1]] += a[k, l] * b
    return TwoVarSeries(out)


def multiply1(F: OneVarSeries, G: OneVarSeries) -> OneVarSeries:
    return OneVarSeries(np.convolve(F.coeffs, G.coeffs))


def _require_invertible(a00: complex, eps0: float) -> None:
    if abs(a00) <= eps0:
        raise SingularReciprocalError(
            f"constant term has modulus {abs(a00):.3e} <= eps0 = {eps0:.3e}; "
            "the reciprocal series is not computable"
        )


def reciprocal2(f: TwoVarSeries, d1: int, d2: int, eps0: float = 1e-12) -> TwoVarSeries:
    """Coefficients of ``1/f`` on the rectangle ``k <= d1, l <= d2``.

    Solves the convolution recurrence
    ``b[k,l] = -(1/a[0,0]) * sum a[i,j] b[k-i,l-j]`` over ``(0,0) < (i,j) <= (k,l)``,
    so ``multiply2(f, result)`` agrees with 1 on every stored index of the
    requested rectangle up to rounding.
    """
    a00 = complex(f.coeffs[0, 0])
    _require_invertible(a00, eps0)
    _check_entries((d1 + 1) * (d2 + 1))
    support = [
        (int(k), int(l), complex(f.coeffs[k, l]))
        for k, l in zip(*np.nonzero(f.coeffs))
        if (k, l) != (0, 0) and k <= d1 and l <= d2
    ]
    b = np.zeros((d1 + 1, d2 + 1), dtype=np.complex128)
    inv = 1.0 / a00
    b[0, 0] = inv
    for k in range(d1 + 1):
        for l in range(d2 + 1):
            if k == 0 and l == 0:
                continue
            acc = 0.0 + 0.0j
            for i, j, aij in support:
                if i <= k and j <= l:
                    acc += aij * b[k - i, l - j]
            b[k, l] = -inv * acc
    return TwoVarSeries(b)


def reciprocal1(F: OneVarSeries, d: int, eps0: float = 1e-12) -> OneVarSeries:
    """Coefficients of ``1/F`` up to degree ``d``."""
    a0 = complex(F.coeffs[0])
    _require_invertible(a0, eps0)
    b = np.zeros(d + 1, dtype=np.complex128)
    inv = 1.0 / a0
    b[0] = inv
    for k in range(1, d + 1):
        top = min(k, F.deg)
        acc = np.dot(F.coeffs[1 : top + 1], b[k - 1 :: -1][: top])
        b[k] = -inv * acc
    return OneVarSeries(b)


def _fix_index(fix) -> int:
    if fix in ("z1", 1):
        return 1
    if fix in ("z2", 2):
        return 2
    raise ValueError(f"variable selector must be 'z1' or 'z2', got {fix!r}")


def slice_series(f: TwoVarSeries, fix, w: complex) -> OneVarSeries:
    """Fix one variable at ``w`` (``|w| < 1``) and return the slice in the other.

    With ``fix='z2'`` the result is ``g(z) = f(z, w)``, i.e.
    ``g[k] = sum_l a[k,l] w^l``.
    """
    if abs(w) >= 1.0:
        raise DomainError(f"slice point must satisfy |w| < 1, got |w| = {abs(w):.6g}")
    which = _fix_index(fix)
    if which == 2:
        powers = np.power(complex(w), np.arange(f.deg2 + 1))
        return OneVarSeries(f.coeffs @ powers)
    powers = np.power(complex(w), np.arange(f.deg1 + 1))
    return OneVarSeries(powers @ f.coeffs)


def diag_restrict(f: TwoVarSeries) -> OneVarSeries:
    """The diagonal restriction ``f(z, z)``: coefficient ``n`` is ``sum_{k+l=n} a[k,l]``."""
    d1, d2 = f.deg1, f.deg2
    out = np.zeros(d1 + d2 + 1, dtype=np.complex128)
    flipped = f.coeffs[::-1, :]
    for n in range(d1 + d2 + 1):
        out[n] = flipped.diagonal(offset=n - d1).sum()
    return OneVarSeries(out)


def lift(F: OneVarSeries, pat: DiagonalPattern) -> TwoVarSeries:
    """The substitution ``F(z1^M z2^N)``; coefficient ``F[k]`` lands at ``(M k, N k)``."""
    d1 = pat.M * F.deg
    d2 = pat.N * F.deg
    _check_entries((d1 + 1) * (d2 + 1))
    grid = np.zeros((d1 + 1, d2 + 1), dtype=np.complex128)
    ks = np.arange(F.deg + 1)
    grid[pat.M * ks, pat.N * ks] = F.coeffs
    return TwoVarSeries(grid)


def _offending_index(f: TwoVarSeries, pat: DiagonalPattern):
    for k, l in zip(*np.nonzero(f.coeffs)):
        if k % pat.M != 0 or l % pat.N != 0 or k // pat.M != l // pat.N:
            return int(k), int(l)
    return None


def is_diagonal(f: TwoVarSeries, pat: DiagonalPattern) -> bool:
    """True iff every nonzero coefficient sits at some ``(M k, N k)``."""
    return _offending_index(f, pat) is None


def restrict(f: TwoVarSeries, pat: DiagonalPattern) -> OneVarSeries:
    """Inverse of :func:`lift` on pattern-supported series: ``out[k] = a[M k, N k]``."""
    bad = _offending_index(f, pat)
    if bad is not None:
        raise PatternViolationError(
            f"series has support at {bad}, off the ({pat.M},{pat.N})-diagonal"
        )
    kmax = min(f.deg1 // pat.M, f.deg2 // pat.N)
    ks = np.arange(kmax + 1)
    return OneVarSeries(f.coeffs[pat.M * ks, pat.N * ks])


def diagonal_project(r: TwoVarSeries, pat: DiagonalPattern) -> TwoVarSeries:
    """Zero every coefficient off the ``(M, N)``-diagonal, keeping degrees."""
    grid = np.zeros_like(r.coeffs)
    kmax = min(r.deg1 // pat.M, r.deg2 // pat.N)
    ks = np.arange(kmax + 1)
    grid[pat.M * ks, pat.N * ks] = r.coeffs[pat.M * ks, pat.N * ks]
    return TwoVarSeries(grid)
