"""
Building a triangular algebra and poking at its structure
=========================================================

Constructs the 3x3 rational upper triangular algebra, multiplies a few
basis elements, and locates the pieces the rest of the library leans on:
the center, the Peirce corners, and the corner isomorphism tau.
"""

from liebider import center_basis, lie_bracket, tau, upper_triangular

# upper_triangular(n, k) builds T_n over Q split at column k: the basis
# is E11, E12, ..., Enn in row-major order, and e is the identity of the
# top-left k x k corner.
t = upper_triangular(3, 2)
alg = t.alg

print("basis:", ", ".join(alg.basis_labels))
print("dim:", alg.dim)

# Products follow matrix units: E12 * E23 = E13, E23 * E12 = 0.
e12 = alg.basis_element(1)
e23 = alg.basis_element(4)
print("E12 * E23 =", e12 * e23)
print("E23 * E12 =", e23 * e12)
print("[E12, E23] =", lie_bracket(e12, e23))

# The center of T_n is one-dimensional: rational multiples of the identity.
for z in center_basis(alg):
    print("center element:", z)

# The split at k = 2 gives Peirce corners A = e T e, M = e T f, B = f T f.
print("corner A indices:", t.a_indices)
print("bimodule M indices:", t.m_indices)
print("corner B indices:", t.b_indices)

# tau carries the A-part of a central element to its B-part; on T_3 both
# parts are scalar, so tau is just matching the scalars up.
z = center_basis(alg)[0]
a = t.proj_a(z)
print("tau(", a, ") =", tau(t, a))
