"""
Solving for Lie biderivations and splitting one apart
=====================================================

Finds every bilinear map on T_3 that acts as a Lie derivation in each
argument, then decomposes one of them into its inner, extremal, and
central pieces and checks the reconstruction is exact.
"""

from liebider import (MapLaw, decompose, make_extremal, make_inner,
                      solve_space, upper_triangular, verify_decomposition)

t = upper_triangular(3, 2)

# solve_space returns the canonical basis of the solution space of the
# chosen law, as BilinearMap objects over exact rationals.
space = solve_space(t.alg, MapLaw.LIE_BIDER)
print("Lie biderivation space dimension:", len(space))

# Pick a basis solution and split it.  The decomposition is
#   phi(x, y) = lambda0 [x, y] + [x, [y, r]] + mu(x, y)
# with lambda0 central, r = phi(e, e), and mu central-valued.  Basis map 8
# is a pure multiple of the bracket, so everything lands in lambda0.
phi = space[8]
d = decompose(t, phi)
print("lambda0 =", d.lambda0)
print("r =", d.r)
print("mu coefficients:", len(d.mu.items()))

# verify_decomposition re-derives the claim from scratch; exact equality,
# no tolerances anywhere.
assert verify_decomposition(t, phi, d)
rebuilt = make_inner(t, d.lambda0) + make_extremal(t, d.r) + d.mu
assert rebuilt == phi
print("reconstruction exact:", rebuilt == phi)

# The same split works for every basis solution.
for k, phi in enumerate(space):
    d = decompose(t, phi)
    assert verify_decomposition(t, phi, d)
print("all", len(space), "basis maps decompose and verify")
