"""Weighted norms on the bidisk and the structural maps between one and two variables.

The two-variable space at parameter alpha weighs the coefficient at (k, l) by
(k+1)^alpha (l+1)^alpha.  Three classical choices: alpha = -1 is the Bergman
space, alpha = 0 the Hardy space, alpha = 1 the Dirichlet space.
"""

import numpy as np

from bidisk import (
    DiagonalPattern,
    OneVarSeries,
    TwoVarSeries,
    beta_of_alpha,
    comparison_constants,
    diag_restrict,
    kernel_norm_sq,
    lift,
    norm1,
    norm2,
    restrict,
    separable,
    slice_series,
)

f = TwoVarSeries.from_terms({(0, 0): 1, (1, 1): -1})          # 1 - z1 z2
g = separable(OneVarSeries([1, -1]), OneVarSeries([1, -1]))   # (1 - z1)(1 - z2)

print("Norms of the two running examples:")
print(f"{'alpha':>6} | {'||1 - z1 z2||':>14} | {'||(1-z1)(1-z2)||':>17}")
for alpha in (-1.0, -0.5, 0.0, 0.5, 1.0):
    print(f"{alpha:6.1f} | {norm2(f, alpha):14.6f} | {norm2(g, alpha):17.6f}")
print()
print("The product norm factors exactly: at alpha = 1,")
print(f"  ||(1-z1)(1-z2)|| = {norm2(g, 1.0):.6f} = (||1-z||_D1)^2 = {norm1(OneVarSeries([1, -1]), 1.0)**2:.6f}")
print()

# Slices: fixing z2 = w gives a one-variable function whose norm is
# controlled by the reproducing-kernel norm at w.
w = 0.7
gslice = slice_series(f, "z2", w)
bound = np.sqrt(kernel_norm_sq(1.0, w)) * norm2(f, 1.0)
print(f"Slice of 1 - z1 z2 at z2 = {w}: coefficients {np.round(gslice.coeffs.real, 4)}")
print(f"  slice norm {norm1(gslice, 1.0):.6f} <= kernel bound {bound:.6f}")
print()

# The diagonal restriction f(z, z) lands in a one-variable space with a
# SHIFTED parameter: beta = alpha - 1 for alpha >= 0, 2 alpha - 1 below.
print("Diagonal restriction f(z,z) contracts into the shifted space:")
for alpha in (-1.0, 0.0, 1.0, 2.0):
    beta = beta_of_alpha(alpha)
    r = diag_restrict(g)
    print(
        f"  alpha = {alpha:4.1f} -> beta = {beta:4.1f}: "
        f"||f(z,z)||_beta = {norm1(r, beta):8.5f} <= ||f||_alpha = {norm2(g, alpha):8.5f}"
    )
print()

# Lifting F(z) -> F(z1^M z2^N) embeds a one-variable space at doubled
# parameter; for M = N = 1 it is an exact isometry, in general a two-sided
# comparison with closed-form constants.
F = OneVarSeries([1.0, -0.5, 0.25])
for M, N in ((1, 1), (2, 3)):
    pat = DiagonalPattern(M, N)
    lifted = lift(F, pat)
    cc = comparison_constants(0.5, pat)
    lo = cc.c2 * norm1(restrict(lifted, pat), 1.0)
    hi = cc.c1 * norm1(restrict(lifted, pat), 1.0)
    print(
        f"pattern ({M},{N}): c2, c1 = {cc.c2:.4f}, {cc.c1:.4f}; "
        f"{lo:.6f} <= ||F(z1^{M} z2^{N})||_0.5 = {norm2(lifted, 0.5):.6f} <= {hi:.6f}"
    )
