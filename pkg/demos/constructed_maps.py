"""
Inner, extremal, and central maps from scratch
==============================================

Builds the three kinds of maps the decomposition produces, checks the
law residual vanishes for each, and shows the one subtlety: an extremal
map is only a Lie biderivation when its direction sits in the far corner
of the bimodule (or differs from one by a central element).
"""

from liebider import (MapLaw, law_residual, lemma_suite, make_central,
                      make_extremal, make_inner, solve_space, upper_triangular)

t = upper_triangular(3, 2)
alg = t.alg
basis = alg.basis()


def max_residual(phi):
    worst = 0
    for x in basis:
        for y in basis:
            for z in basis:
                r1, r2 = law_residual(phi, MapLaw.LIE_BIDER, (x, y, z))
                worst = max(worst, sum(abs(c) for c in r1.coords),
                            sum(abs(c) for c in r2.coords))
    return worst


# Inner: phi(x, y) = lambda [x, y] for central lambda.
inner = make_inner(t, alg.unit_element())
print("inner residual:", max_residual(inner))

# Extremal: phi(x, y) = [x, [y, r]].  E13 spans the far corner of M.
e13 = basis[t.m_indices[0]]
extremal = make_extremal(t, e13)
print("extremal(E13) residual:", max_residual(extremal))

# Central: phi(x, y) = g(x) h(y) z with g, h killing commutators and z
# central.  The trace functional qualifies.
tr = t.trace_functional()
central = make_central(t, tr, tr, alg.unit_element())
print("central residual:", max_residual(central))

# All three land inside the solved space, so lemma_suite accepts them.
for phi in (inner, extremal, central):
    assert lemma_suite(t, phi).all_pass()
print("lemma suite: all three pass")

# The subtlety: [x, [y, E12]] satisfies the first-slot law on its own
# (that is just the Jacobi identity) but picks up an extra second-slot
# term; it is not a Lie biderivation and sits outside the solved span.
e12 = basis[1]
stray = make_extremal(t, e12)
print("extremal(E12) residual:", max_residual(stray))

space = solve_space(alg, MapLaw.LIE_BIDER)
print("solution space dimension:", len(space))
