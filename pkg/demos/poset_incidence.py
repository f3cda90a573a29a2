"""
Incidence algebras and when the decomposition hypotheses fail
=============================================================

The upper triangular algebras are incidence algebras of chains.  Other
posets give other triangular algebras, and not all of them satisfy the
hypotheses the decomposition needs.  hypothesis_report checks them.
"""

from liebider import Poset, hypothesis_report, incidence_algebra, upper_triangular

# The chain 1 < 2 < 3 reproduces T_3 exactly.
chain = Poset(3, [(1, 2), (2, 3)])
t_chain = incidence_algebra(chain, {1})
t3 = upper_triangular(3, 1)
print("chain incidence algebra dim:", t_chain.alg.dim)
print("same structure constants as T_3:",
      t_chain.alg.structure_items() == t3.alg.structure_items())

rep = hypothesis_report(t_chain)
print("chain report:", rep)
assert rep.all_pass()

# The V poset 1 < 3 > 2 has a disconnected downset {1, 2}: its corner is
# Q x Q, the projected center is too small, and two conditions fail.
vee = Poset(3, [(1, 3), (2, 3)])
t_vee = incidence_algebra(vee, {1, 2})
rep = hypothesis_report(t_vee)
print("vee report:", rep)
print("cond_i:", rep.cond_i, " cond_ii:", rep.cond_ii)
assert not rep.all_pass()

# T_2 split at k = 1 fails cond_ii alone: both corners are copies of Q,
# so neither is noncommutative.
rep = hypothesis_report(upper_triangular(2, 1))
print("T_2 cond_ii:", rep.cond_ii)
