"""Optimal polynomial approximants to 1/f and explicit near-optimal constructions.

Given ``f`` and an order ``n``, the optimal approximant is the polynomial
``p`` in the chosen basis minimizing ``||p f - 1||`` in the weighted
coefficient norm — equivalently the solution of the Hermitian normal
equations ``G c = e`` with ``G[i,j] = <m_j f, m_i f>`` over basis monomials
``m_i``.  The squared minimum is the squared distance from 1 to ``f``
times the polynomial space.

Solver policy: normal equations with a Cholesky factorization and a single
ridge-regularized retry; residuals are always recomputed from the returned
coefficients by explicit series arithmetic, never read off the solver; every
solve carries an orthogonality certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import scipy.linalg

from .errors import (
    BasisSizeError,
    ConditioningError,
    UnsupportedRateError,
)
from .series import (
    DiagonalPattern,
    OneVarSeries,
    TwoVarSeries,
    is_diagonal,
    lift,
    multiply1,
    multiply2,
    reciprocal1,
    reciprocal2,
    restrict,
)
from .spaces import AlphaLike, as_alpha, norm1, norm2, phi

__all__ = [
    "SOLVER_CAP",
    "BasisSpec",
    "GramSystem",
    "ApproximantResult",
    "gram_assemble",
    "solve_optimal",
    "riesz_approximant",
    "riesz_diagonal",
    "cesaro",
    "residual_norm_sq",
    "diagonal_reduce_solve",
    "closed_form_twisted",
    "perturbation_check",
]

# Hard cap on the number of unknowns per normal-equation solve.
SOLVER_CAP = 10_000

# Above this many design-matrix entries, assemble the Gram matrix in
# row-blocks instead of materializing the full matrix of shifted copies.
_DESIGN_ENTRY_LIMIT = 16_000_000

Series = Union[TwoVarSeries, OneVarSeries]


@dataclass(frozen=True)
class BasisSpec:
    """Monomial basis of an order-``n`` polynomial space.

    ``full`` is the square grid ``{z1^k z2^l : 0 <= k, l <= n}``; ``diagonal``
    keeps the pattern monomials ``{(Mk, Nk) : Mk <= n, Nk <= n}``; ``onevar``
    is ``{z^k : k <= n}`` (monomials in the first variable when applied to a
    two-variable function).
    """

    n: int
    kind: str
    pattern: Optional[DiagonalPattern] = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("basis order must be nonnegative")
        if self.kind not in ("full", "diagonal", "onevar"):
            raise ValueError(f"unknown basis kind {self.kind!r}")
        if (self.kind == "diagonal") != (self.pattern is not None):
            raise ValueError("diagonal bases need a pattern; other kinds must not carry one")

    @classmethod
    def full(cls, n: int) -> "BasisSpec":
        return cls(n=n, kind="full")

    @classmethod
    def diagonal(cls, n: int, pattern: DiagonalPattern) -> "BasisSpec":
        return cls(n=n, kind="diagonal", pattern=pattern)

    @classmethod
    def onevar(cls, n: int) -> "BasisSpec":
        return cls(n=n, kind="onevar")

    def indices2(self) -> List[Tuple[int, int]]:
        """Monomial exponents for a two-variable problem, constant first."""
        if self.kind == "full":
            return [(k, l) for k in range(self.n + 1) for l in range(self.n + 1)]
        if self.kind == "diagonal":
            M, N = self.pattern.M, self.pattern.N
            kmax = self.n // max(M, N)
            return [(M * k, N * k) for k in range(kmax + 1)]
        return [(k, 0) for k in range(self.n + 1)]

    def indices1(self) -> List[int]:
        """Monomial exponents for a one-variable problem."""
        if self.kind != "onevar":
            raise ValueError("one-variable problems take a onevar basis")
        return list(range(self.n + 1))


@dataclass(frozen=True)
class GramSystem:
    """Normal equations ``matrix @ c = rhs`` over an ordered monomial basis."""

    basis: tuple
    matrix: np.ndarray
    rhs: np.ndarray
    cond_estimate: float


@dataclass(frozen=True)
class ApproximantResult:
    """A solved approximant with its recomputed residual and certificates."""

    p: Series
    residual_sq: float
    n: int
    basis_kind: str
    cond_estimate: float
    ortho_residual: float
    basis: tuple = ()


def _check_basis_size(size: int) -> None:
    if size > SOLVER_CAP:
        raise BasisSizeError(
            f"basis of {size} unknowns exceeds the solver cap of {SOLVER_CAP}; "
            "choose a reduced basis explicitly"
        )


def _gram_two_var(f: TwoVarSeries, aw, indices) -> Tuple[np.ndarray, np.ndarray]:
    """Gram matrix and right-hand side by shifted-copy accumulation."""
    F1, F2 = f.coeffs.shape
    kmax = max(k for k, _ in indices)
    lmax = max(l for _, l in indices)
    R1, R2 = kmax + F1, lmax + F2
    sw1 = np.sqrt(aw.weights(R1 - 1))
    sw2 = np.sqrt(aw.weights(R2 - 1))
    B = len(indices)
    if R1 * R2 * B <= _DESIGN_ENTRY_LIMIT:
        design = np.zeros((R1, R2, B), dtype=np.complex128)
        for i, (k, l) in enumerate(indices):
            design[k : k + F1, l : l + F2, i] = (
                f.coeffs * sw1[k : k + F1, None] * sw2[None, l : l + F2]
            )
        flat = design.reshape(R1 * R2, B)
        G = flat.conj().T @ flat
    else:
        G = np.zeros((B, B), dtype=np.complex128)
        row = np.empty((R2, B), dtype=np.complex128)
        for u in range(R1):
            row[:] = 0.0
            for i, (k, l) in enumerate(indices):
                if k <= u < k + F1:
                    row[l : l + F2, i] = f.coeffs[u - k, :] * sw2[l : l + F2]
            G += sw1[u] ** 2 * (row.conj().T @ row)
    G = 0.5 * (G + G.conj().T)
    rhs = np.zeros(B, dtype=np.complex128)
    for i, (k, l) in enumerate(indices):
        if (k, l) == (0, 0):
            rhs[i] = np.conj(f.coeffs[0, 0])
    return G, rhs


def _gram_one_var(F: OneVarSeries, aw, indices) -> Tuple[np.ndarray, np.ndarray]:
    L = F.deg + 1
    R = max(indices) + L
    sw = np.sqrt(aw.weights(R - 1))
    B = len(indices)
    design = np.zeros((R, B), dtype=np.complex128)
    for i, k in enumerate(indices):
        design[k : k + L, i] = F.coeffs * sw[k : k + L]
    G = design.conj().T @ design
    G = 0.5 * (G + G.conj().T)
    rhs = np.zeros(B, dtype=np.complex128)
    for i, k in enumerate(indices):
        if k == 0:
            rhs[i] = np.conj(F.coeffs[0])
    return G, rhs


def _cond_hermitian(G: np.ndarray) -> float:
    ev = np.linalg.eigvalsh(G)
    lo, hi = float(ev[0]), float(ev[-1])
    if lo <= 0.0:
        return float("inf")
    return hi / lo


def gram_assemble(f: Series, a: AlphaLike, b: BasisSpec) -> GramSystem:
    """Assemble the normal equations for minimizing ``||p f - 1||`` over ``b``.

    ``G[i,j] = <m_j f, m_i f>`` and ``rhs[i] = <1, m_i f>``; the right-hand
    side is supported on the constant monomial only, where it equals the
    conjugate of ``f``'s constant coefficient.
    """
    aw = as_alpha(a)
    if isinstance(f, OneVarSeries):
        indices: Sequence = b.indices1()
        _check_basis_size(len(indices))
        if not np.any(f.coeffs):
            raise ValueError("f must not be identically zero")
        G, rhs = _gram_one_var(f, aw, indices)
    else:
        indices = b.indices2()
        _check_basis_size(len(indices))
        if not np.any(f.coeffs):
            raise ValueError("f must not be identically zero")
        G, rhs = _gram_two_var(f, aw, indices)
    return GramSystem(
        basis=tuple(indices), matrix=G, rhs=rhs, cond_estimate=_cond_hermitian(G)
    )


def _solve_normal(gram: GramSystem) -> np.ndarray:
    G, rhs = gram.matrix, gram.rhs
    try:
        factor = scipy.linalg.cho_factor(G)
        return scipy.linalg.cho_solve(factor, rhs)
    except scipy.linalg.LinAlgError:
        pass
    ridge = 1e-12 * (np.trace(G).real / G.shape[0])
    try:
        factor = scipy.linalg.cho_factor(G + ridge * np.eye(G.shape[0]))
        return scipy.linalg.cho_solve(factor, rhs)
    except scipy.linalg.LinAlgError as exc:
        raise ConditioningError(
            f"Gram factorization failed even with ridge {ridge:.3e} "
            f"(condition estimate {gram.cond_estimate:.3e})",
            cond_estimate=gram.cond_estimate,
        ) from exc


def _series_from_solution(c: np.ndarray, indices, onevar: bool) -> Series:
    if onevar:
        grid = np.zeros(max(indices) + 1, dtype=np.complex128)
        grid[list(indices)] = c
        return OneVarSeries(grid)
    kmax = max(k for k, _ in indices)
    lmax = max(l for _, l in indices)
    grid = np.zeros((kmax + 1, lmax + 1), dtype=np.complex128)
    for ci, (k, l) in zip(c, indices):
        grid[k, l] = ci
    return TwoVarSeries(grid)


def residual_norm_sq(p: Series, f: Series, a: AlphaLike) -> float:
    """Exact ``||p f - 1||^2`` by explicit series multiplication."""
    if isinstance(p, OneVarSeries):
        return norm1(multiply1(p, f) - 1.0, a) ** 2
    return norm2(multiply2(p, f) - 1.0, a) ** 2


def _ortho_residual_two_var(p: TwoVarSeries, f: TwoVarSeries, aw, indices) -> float:
    r = multiply2(p, f) - 1.0
    w1 = aw.weights(r.deg1)
    w2 = aw.weights(r.deg2)
    wr = w1[:, None] * w2[None, :] * r.coeffs
    F1, F2 = f.coeffs.shape
    worst = 0.0
    for k, l in indices:
        cert = np.vdot(f.coeffs, wr[k : k + F1, l : l + F2])
        worst = max(worst, abs(cert))
    return worst


def _ortho_residual_one_var(p: OneVarSeries, F: OneVarSeries, aw, indices) -> float:
    r = multiply1(p, F) - 1.0
    w = aw.weights(r.deg)
    wr = w * r.coeffs
    L = F.deg + 1
    worst = 0.0
    for k in indices:
        cert = np.vdot(F.coeffs, wr[k : k + L])
        worst = max(worst, abs(cert))
    return worst


def solve_optimal(
    f: Series,
    a: AlphaLike,
    b: BasisSpec,
    *,
    ortho_tol: Optional[float] = None,
) -> ApproximantResult:
    """Solve for the optimal approximant of order ``b.n`` in basis ``b``.

    The residual is recomputed from the solution coefficients by series
    arithmetic, and the orthogonality certificate
    ``max_i |<p f - 1, m_i f>|`` must come out below ``ortho_tol``
    (default ``1e-8 * ||f||^2``), else a conditioning error is raised.
    """
    aw = as_alpha(a)
    gram = gram_assemble(f, aw, b)
    c = _solve_normal(gram)
    onevar_problem = isinstance(f, OneVarSeries)
    p = _series_from_solution(c, gram.basis, onevar_problem)
    res_sq = residual_norm_sq(p, f, aw)
    if onevar_problem:
        ortho = _ortho_residual_one_var(p, f, aw, gram.basis)
        fnorm_sq = norm1(f, aw) ** 2
    else:
        ortho = _ortho_residual_two_var(p, f, aw, gram.basis)
        fnorm_sq = norm2(f, aw) ** 2
    tol = 1e-8 * fnorm_sq if ortho_tol is None else ortho_tol
    if ortho > tol:
        raise ConditioningError(
            f"orthogonality certificate {ortho:.3e} exceeds tolerance {tol:.3e} "
            f"(condition estimate {gram.cond_estimate:.3e})",
            cond_estimate=gram.cond_estimate,
        )
    return ApproximantResult(
        p=p,
        residual_sq=res_sq,
        n=b.n,
        basis_kind=b.kind,
        cond_estimate=gram.cond_estimate,
        ortho_residual=ortho,
        basis=gram.basis,
    )


def _phi_grid(alpha: float, values: np.ndarray) -> np.ndarray:
    if alpha == 1.0:
        out = np.zeros_like(values, dtype=float)
        pos = values > 1.0
        out[pos] = np.log(values[pos])
        return out
    return values.astype(float) ** (1.0 - alpha)


def riesz_approximant(f: TwoVarSeries, a: AlphaLike, n: int, eps0: float = 1e-12) -> TwoVarSeries:
    """Riesz-type mean of the reciprocal series on the square grid of order ``n``.

    Coefficient ``(k, l)`` of the result is
    ``(1 - phi(max(k, l)) / phi(n + 1)) * b[k, l]`` with ``b`` the reciprocal
    of ``f`` truncated at ``(n, n)``.  At ``alpha = 0`` this is the order-``n``
    Cesaro mean of the reciprocal's expansion in the ``max(k, l)`` grading.
    """
    aw = as_alpha(a)
    if aw.alpha > 1.0:
        raise UnsupportedRateError(f"no rate gauge is defined for alpha = {aw.alpha} > 1")
    b = reciprocal2(f, n, n, eps0)
    idx = np.arange(n + 1)
    grading = np.maximum.outer(idx, idx)
    denom = phi(aw, n + 1)
    if denom == 0.0:
        # only reachable at alpha = 1, n = 0, where the sole weight is 1
        weights = np.ones_like(grading, dtype=float)
    else:
        weights = 1.0 - _phi_grid(aw.alpha, grading) / denom
    return TwoVarSeries(weights * b.coeffs)


def riesz_diagonal(
    f: TwoVarSeries, a: AlphaLike, n: int, pat: DiagonalPattern, eps0: float = 1e-12
) -> TwoVarSeries:
    """Riesz-type approximant built along a diagonal support pattern.

    The one-variable Riesz weights ``1 - phi(k)/phi(n+1)`` are applied to the
    reciprocal of the restricted function and the result is lifted back, so
    the approximant is a degree-``n`` polynomial in ``z1^M z2^N``.  For the
    pattern ``(1, 1)`` this coincides with :func:`riesz_approximant`.
    """
    aw = as_alpha(a)
    if aw.alpha > 1.0:
        raise UnsupportedRateError(f"no rate gauge is defined for alpha = {aw.alpha} > 1")
    F = restrict(f, pat)
    B = reciprocal1(F, n, eps0)
    denom = phi(aw, n + 1)
    if denom == 0.0:
        weights = np.ones(n + 1)
    else:
        weights = 1.0 - _phi_grid(aw.alpha, np.arange(n + 1)) / denom
    return lift(OneVarSeries(weights * B.coeffs), pat)


def cesaro(f: TwoVarSeries, n: int, eps0: float = 1e-12) -> TwoVarSeries:
    """Order-``n`` Cesaro mean of the reciprocal series.

    Computed as the ``alpha = 0`` Riesz mean and cross-checked against the
    average of the Taylor sections ``t_0, ..., t_n`` in the ``max(k, l)``
    grading; the two agree identically.
    """
    p = riesz_approximant(f, 0.0, n, eps0)
    b = reciprocal2(f, n, n, eps0)
    idx = np.arange(n + 1)
    grading = np.maximum.outer(idx, idx)
    # coefficient (k,l) appears in sections t_m for m >= max(k,l)
    mean = (n + 1.0 - grading) / (n + 1.0) * b.coeffs
    scale = np.max(np.abs(b.coeffs)) + 1.0
    assert np.allclose(p.coeffs, mean, rtol=0.0, atol=1e-13 * scale), (
        "Cesaro mean disagrees with averaged Taylor sections"
    )
    return p


def closed_form_twisted(a: AlphaLike, n: int, pat: DiagonalPattern) -> float:
    """Exact squared residual of the diagonal Riesz approximant for ``1 - z1^M z2^N``.

    Evaluates ``phi(n+1)^-2 * sum_{k=1}^{n+1} (phi(k) - phi(k-1))^2
    (Mk+1)^alpha (Nk+1)^alpha``, which is what
    ``residual_norm_sq(riesz_diagonal(...))`` computes term by term.
    """
    aw = as_alpha(a)
    if aw.alpha > 1.0:
        raise UnsupportedRateError(f"no rate gauge is defined for alpha = {aw.alpha} > 1")
    denom = phi(aw, n + 1)
    if denom == 0.0:
        # alpha = 1, n = 0: the approximant is the constant 1, residual -z1^M z2^N
        return float((pat.M + 1.0) ** aw.alpha * (pat.N + 1.0) ** aw.alpha)
    k = np.arange(1.0, n + 2.0)
    increments = _phi_grid(aw.alpha, k) - _phi_grid(aw.alpha, k - 1.0)
    weights = (pat.M * k + 1.0) ** aw.alpha * (pat.N * k + 1.0) ** aw.alpha
    return float(np.sum(increments**2 * weights) / denom**2)


def diagonal_reduce_solve(
    f: TwoVarSeries,
    a: AlphaLike,
    n: int,
    pat: DiagonalPattern,
    *,
    ortho_tol: Optional[float] = None,
) -> ApproximantResult:
    """Optimal approximant of order ``n`` for pattern-supported ``f``.

    Restricting the minimization to the diagonal basis loses nothing for
    diagonal ``f`` (projecting any competitor onto the pattern can only
    shrink the residual), so this attains the full square-basis optimum.
    For the pattern ``(1, 1)`` the solve is performed as a one-variable
    problem at doubled parameter on the restricted function — an exact
    isometry — and lifted back; other patterns solve the small diagonal
    Gram system directly.  The residual is always recomputed in two
    variables.
    """
    aw = as_alpha(a)
    if not is_diagonal(f, pat):
        restrict(f, pat)  # raises PatternViolationError with the offending index
    if (pat.M, pat.N) == (1, 1):
        F = restrict(f, pat)
        doubled = as_alpha(2.0 * aw.alpha)
        gram = gram_assemble(F, doubled, BasisSpec.onevar(n))
        c = _solve_normal(gram)
        p1 = _series_from_solution(c, gram.basis, onevar=True)
        p = lift(p1, pat)
        indices = [(k, k) for k in gram.basis]
        cond = gram.cond_estimate
    else:
        basis = BasisSpec.diagonal(n, pat)
        gram = gram_assemble(f, aw, basis)
        c = _solve_normal(gram)
        p = _series_from_solution(c, gram.basis, onevar=False)
        indices = list(gram.basis)
        cond = gram.cond_estimate
    res_sq = residual_norm_sq(p, f, aw)
    ortho = _ortho_residual_two_var(p, f, aw, indices)
    fnorm_sq = norm2(f, aw) ** 2
    tol = 1e-8 * fnorm_sq if ortho_tol is None else ortho_tol
    if ortho > tol:
        raise ConditioningError(
            f"orthogonality certificate {ortho:.3e} exceeds tolerance {tol:.3e} "
            f"(condition estimate {cond:.3e})",
            cond_estimate=cond,
        )
    return ApproximantResult(
        p=p,
        residual_sq=res_sq,
        n=n,
        basis_kind="diagonal",
        cond_estimate=cond,
        ortho_residual=ortho,
        basis=tuple(indices),
    )


def perturbation_check(
    result: ApproximantResult,
    f: Series,
    a: AlphaLike,
    *,
    n_directions: int = 20,
    eps: float = 1e-3,
    seed: int = 0,
) -> float:
    """Largest residual decrease found by perturbing ``p`` in its basis span.

    Probes ``p + eps * q`` for random unit-norm directions ``q`` supported on
    the solved basis and returns ``max(residual_sq - residual(p + eps q))``;
    a value at rounding level certifies local optimality.
    """
    aw = as_alpha(a)
    rng = np.random.default_rng(seed)
    onevar = isinstance(result.p, OneVarSeries)
    worst = 0.0
    for _ in range(n_directions):
        coeffs = rng.standard_normal(len(result.basis)) + 1j * rng.standard_normal(
            len(result.basis)
        )
        q = _series_from_solution(coeffs, result.basis, onevar)
        qnorm = norm1(q, aw) if onevar else norm2(q, aw)
        q = q * (1.0 / qnorm)
        perturbed = result.p + eps * q
        decrease = result.residual_sq - residual_norm_sq(perturbed, f, aw)
        worst = max(worst, decrease)
    return worst
