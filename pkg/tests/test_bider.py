"""Bilinear maps, law constraint systems, solution spaces, constructors."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liebider import (BilinearMap, FiniteAlgebra, MapLaw, NotCentral,
                      NotVanishing, SpanChecker, constraint_matrix,
                      law_residual, lemma31_residual, lie_bracket,
                      make_central, make_extremal, make_inner, nullspace,
                      solve_space, upper_triangular)

ALL_LAWS = list(MapLaw)


def one_dim():
    return FiniteAlgebra(1, ["1"], {(0, 0, 0): 1}, [1])


# -- BilinearMap -----------------------------------------------------------

def test_map_round_trips_through_flat(t2):
    phi = BilinearMap(t2.alg, {(0, 1, 1): Fraction(2, 3), (2, 0, 2): -1})
    assert BilinearMap.from_flat(t2.alg, phi.flat()) == phi
    assert phi.items() == [(0, 1, 1, Fraction(2, 3)), (2, 0, 2, Fraction(-1))]
    assert len(phi.flat()) == 27


def test_map_drops_zero_coefficients(t2):
    phi = BilinearMap(t2.alg, {(0, 0, 0): 0})
    assert phi.is_zero()
    assert phi.items() == []


def test_map_rejects_bad_index(t2):
    with pytest.raises(ValueError):
        BilinearMap(t2.alg, {(0, 0, 3): 1})
    with pytest.raises(ValueError):
        BilinearMap.from_flat(t2.alg, [0] * 26)


def test_map_value_and_call(t2):
    phi = BilinearMap(t2.alg, {(0, 1, 1): 5})
    assert phi.value(0, 1) == t2.alg.basis_element(1).scale(5)
    assert phi.value(1, 0).is_zero()
    x = t2.alg.element([2, 0, 0])
    y = t2.alg.element([0, 3, 0])
    assert phi(x, y) == t2.alg.basis_element(1).scale(30)


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3),
       st.lists(st.integers(-5, 5), min_size=3, max_size=3),
       st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_map_evaluation_is_bilinear(xs, ys, zs):
    t = upper_triangular(2, 1)
    phi = BilinearMap(t.alg, {(0, 1, 1): 2, (1, 2, 1): -3, (2, 2, 2): 1})
    x, y, z = (t.alg.element(c) for c in (xs, ys, zs))
    assert phi(x + z, y) == phi(x, y) + phi(z, y)
    assert phi(x, y + z) == phi(x, y) + phi(x, z)
    assert phi(x.scale(7), y) == phi(x, y).scale(7)


def test_map_arithmetic(t2):
    a = BilinearMap(t2.alg, {(0, 0, 0): 1})
    b = BilinearMap(t2.alg, {(0, 0, 0): 2, (1, 1, 1): 1})
    assert (a + b).items() == [(0, 0, 0, 3), (1, 1, 1, 1)]
    assert (b - a).items() == [(0, 0, 0, 1), (1, 1, 1, 1)]
    assert a.scale(0).is_zero()
    assert (a + a) == a.scale(2)


# -- constraint_matrix -------------------------------------------------------

def test_abelian_system_is_zero():
    m = constraint_matrix(one_dim(), MapLaw.LIE_BIDER)
    assert m.cols == 1
    assert m.entries == ()


def test_system_shape(t2):
    m = constraint_matrix(t2.alg, MapLaw.LIE_BIDER)
    assert m.cols == 27
    assert m.rows == 2 * 27 * 3
    m1 = constraint_matrix(t2.alg, MapLaw.LIE_DERIV_FIRST)
    assert m1.rows == 27 * 3


def test_assoc_kernel_contains_extremal(t2):
    m = constraint_matrix(t2.alg, MapLaw.ASSOC_BIDER)
    phi = make_extremal(t2, t2.alg.basis_element(1))
    assert all(v == 0 for v in m.mul_vector(phi.flat()))


# -- solve_space ---------------------------------------------------------------

FROZEN_DIMS = {
    ("t2", MapLaw.LIE_BIDER): 8,
    ("t2", MapLaw.ASSOC_BIDER): 4,
    ("t2", MapLaw.LIE_DERIV_FIRST): 12,
    ("t2", MapLaw.LIE_DERIV_SECOND): 12,
    ("t3", MapLaw.LIE_BIDER): 11,
    ("t3", MapLaw.ASSOC_BIDER): 2,
    ("t3", MapLaw.LIE_DERIV_FIRST): 48,
    ("t3", MapLaw.LIE_DERIV_SECOND): 48,
}


@pytest.mark.parametrize("law", ALL_LAWS)
def test_solution_dimensions_t2(t2, law):
    assert len(solve_space(t2.alg, law)) == FROZEN_DIMS[("t2", law)]


@pytest.mark.parametrize("law", ALL_LAWS)
def test_solution_dimensions_t3(t3, law):
    assert len(solve_space(t3.alg, law)) == FROZEN_DIMS[("t3", law)]


@pytest.mark.parametrize("law", ALL_LAWS)
def test_sliced_solver_matches_full_system_t2(t2, law):
    direct = nullspace(constraint_matrix(t2.alg, law))
    assert [phi.flat() for phi in solve_space(t2.alg, law)] == direct


def test_sliced_solver_matches_full_system_t3(t3):
    direct = nullspace(constraint_matrix(t3.alg, MapLaw.LIE_BIDER))
    assert [phi.flat() for phi in solve_space(t3.alg, MapLaw.LIE_BIDER)] == direct


def test_sliced_solver_matches_full_system_block(block21):
    # regression: elimination with pivot values other than 1 used to lose
    # three of these five dimensions
    direct = nullspace(constraint_matrix(block21.alg, MapLaw.LIE_BIDER))
    got = [phi.flat() for phi in solve_space(block21.alg, MapLaw.LIE_BIDER)]
    assert len(got) == 5
    assert got == direct


def test_block_assoc_dimension(block21):
    assert len(solve_space(block21.alg, MapLaw.ASSOC_BIDER)) == 1


def test_one_dim_space():
    assert len(solve_space(one_dim(), MapLaw.LIE_BIDER)) == 1


def test_solutions_satisfy_law_everywhere(t2):
    basis = t2.alg.basis()
    for law in ALL_LAWS:
        for phi in solve_space(t2.alg, law):
            for x in basis:
                for y in basis:
                    for z in basis:
                        r1, r2 = law_residual(phi, law, (x, y, z))
                        assert r1.is_zero() and r2.is_zero()


# -- constructors ----------------------------------------------------------------

def test_make_inner_examples(t2):
    assert make_inner(t2, t2.alg.zero()).is_zero()
    one = t2.alg.unit_element()
    bracket_map = make_inner(t2, one)
    for i, x in enumerate(t2.alg.basis()):
        for j, y in enumerate(t2.alg.basis()):
            assert bracket_map.value(i, j) == lie_bracket(x, y)
    doubled = make_inner(t2, one.scale(2))
    assert (0, 1, 1, 2) in doubled.items()


def test_make_inner_rejects_non_central(t2):
    with pytest.raises(NotCentral):
        make_inner(t2, t2.e)


def test_make_extremal_examples(t2, t3):
    assert make_extremal(t3, t3.alg.unit_element()).is_zero()
    phi = make_extremal(t3, t3.alg.basis_element(2))   # r = E13
    assert phi.value(0, 0) == t3.alg.basis_element(2)
    phi = make_extremal(t2, t2.alg.basis_element(1))   # r = E12
    assert phi.value(2, 0) == -t2.alg.basis_element(1)


def test_make_central_examples(t3):
    tr = t3.trace_functional()
    one = t3.alg.unit_element()
    phi = make_central(t3, tr, tr, one)
    assert phi.value(0, 0) == one          # tr(E11)tr(E11) = 1
    assert phi(one, one) == one.scale(9)   # tr(1) = 3 on T3
    assert make_central(t3, [0] * 6, tr, one).is_zero()


def test_make_central_rejections(t2, t3):
    e12_functional = [0, 1, 0]
    with pytest.raises(NotVanishing):
        make_central(t2, e12_functional, t2.trace_functional(),
                     t2.alg.unit_element())
    with pytest.raises(NotCentral):
        make_central(t3, t3.trace_functional(), t3.trace_functional(), t3.e)


def test_constructed_maps_lie_in_solved_span(t3, t3_space):
    span = SpanChecker([phi.flat() for phi in t3_space], t3.alg.dim ** 3)
    one = t3.alg.unit_element()
    tr = t3.trace_functional()
    for phi in (make_inner(t3, one),
                make_extremal(t3, t3.alg.basis_element(2)),
                make_central(t3, tr, tr, one)):
        assert span.contains(phi.flat())


def test_extremal_needs_corner_r_to_stay_in_span(t3, t3_space):
    # [x,[y,E12]] obeys the first-slot law by Jacobi alone but picks up
    # [[x,y],[z,r]] - [[x,z],[y,r]] in the second slot, nonzero here
    phi = make_extremal(t3, t3.alg.basis_element(1))
    span = SpanChecker([p.flat() for p in t3_space], t3.alg.dim ** 3)
    assert not span.contains(phi.flat())
    e22, e23 = t3.alg.basis_element(3), t3.alg.basis_element(4)
    r1, r2 = law_residual(phi, MapLaw.LIE_BIDER, (e22, e23, e22))
    assert not (r1.is_zero() and r2.is_zero())


def test_assoc_space_inside_lie_space(t2, t3, t2_space, t3_space):
    for t, space in ((t2, t2_space), (t3, t3_space)):
        span = SpanChecker([phi.flat() for phi in space], t.alg.dim ** 3)
        for phi in solve_space(t.alg, MapLaw.ASSOC_BIDER):
            assert span.contains(phi.flat())


# -- residuals --------------------------------------------------------------------

def test_law_residual_zero_for_solutions(t3, t3_space):
    triple = (t3.alg.basis_element(0), t3.alg.basis_element(3),
              t3.alg.basis_element(4))
    for phi in t3_space:
        r1, r2 = law_residual(phi, MapLaw.LIE_BIDER, triple)
        assert r1.is_zero() and r2.is_zero()


def test_law_residual_detects_violation(t2):
    # phi(E11, E11) = E12, zero elsewhere; z = E22 sees [phi(x,y), z] alone
    phi = BilinearMap(t2.alg, {(0, 0, 1): 1})
    e11, e22 = t2.alg.basis_element(0), t2.alg.basis_element(2)
    r1, r2 = law_residual(phi, MapLaw.LIE_BIDER, (e11, e11, e22))
    assert not (r1.is_zero() and r2.is_zero())
    # at (E11, E11, E12) every term happens to vanish though
    e12 = t2.alg.basis_element(1)
    r1, r2 = law_residual(phi, MapLaw.LIE_BIDER, (e11, e11, e12))
    assert r1.is_zero() and r2.is_zero()


def test_one_sided_law_leaves_other_slot_unchecked(t2):
    phi = BilinearMap(t2.alg, {(0, 0, 1): 1})
    triple = tuple(t2.alg.basis())
    r1, r2 = law_residual(phi, MapLaw.LIE_DERIV_FIRST, triple)
    assert r2.is_zero()
    r1, r2 = law_residual(phi, MapLaw.LIE_DERIV_SECOND, triple)
    assert r1.is_zero()


def test_four_point_identity_examples(t3, t3_space):
    quad = (t3.alg.basis_element(0), t3.alg.basis_element(3),
            t3.alg.basis_element(1), t3.alg.basis_element(4))
    assert lemma31_residual(make_inner(t3, t3.alg.unit_element()), quad).is_zero()
    assert lemma31_residual(BilinearMap(t3.alg, {}), quad).is_zero()
    for phi in t3_space:
        assert lemma31_residual(phi, quad).is_zero()


@given(st.integers(0, 7), st.lists(st.integers(0, 5), min_size=4, max_size=4))
def test_four_point_identity_on_solution_combinations(idx, quad_idx):
    t = upper_triangular(3, 2)
    space = solve_space(t.alg, MapLaw.LIE_BIDER)
    phi = space[idx % len(space)] + space[(idx + 3) % len(space)].scale(2)
    quad = tuple(t.alg.basis_element(i) for i in quad_idx)
    assert lemma31_residual(phi, quad).is_zero()
