from fractions import Fraction as F
from math import factorial

import pytest

from volring.errors import DomainError, UnsupportedError
from volring.flagring import (
    GLnWeight,
    brion_degree_integral,
    flag_cohomology,
    flag_degree_closed_form,
    flag_volume_polynomial,
    gc_additivity_check,
    gc_dimension_check,
    gc_polytope,
    invariant_generators,
    kostant_check,
)
from volring.mpoly import MPoly
from volring.polykernel import QPolytope, ehrhart_count, lattice_points, lattice_volume, minkowski_sum, polytopes_equal
from volring.rootdata import build_root_system, weyl_dimension

from conftest import verts


def test_weight_validation():
    with pytest.raises(DomainError):
        GLnWeight((0, 1))
    lam = GLnWeight((2, 1, 0))
    assert lam.to_weight().coords == (1, 1)
    assert lam.is_regular and not GLnWeight((1, 1, 0)).is_regular


def test_gl2_segment():
    assert verts(gc_polytope((3, 0)).polytope) == [("0",), ("3",)]


def test_gl3_interlacing_form():
    g = gc_polytope((2, 1, 0)).polytope
    assert g.dim == 3
    assert len(g.ineqs) == 6
    assert len(lattice_points(g)) == 8
    assert len(lattice_points(gc_polytope((1, 1, 0)).polytope)) == 3
    # (x21, x22, x31) = (2, 0, 1) is a pattern, (0, 2, 1) is not
    assert g.contains((2, 0, 1)) and not g.contains((0, 2, 1))


@pytest.mark.parametrize(
    "lam,count",
    [((3, 0), 4), ((2, 1, 0), 8), ((1, 0, 0, 0), 4), ((2, 2, 1), 3), ((3, 1, 0), 15)],
)
def test_dimension_check(lam, count):
    res = gc_dimension_check(lam)
    assert res == (count, count, True)


def test_volume_polynomial(A1, A2, B2):
    c = MPoly.var(0, 1)
    assert flag_volume_polynomial(A1) == c
    c1, c2 = MPoly.var(0, 2), MPoly.var(1, 2)
    assert flag_volume_polynomial(A2) == c1 * c2 * (c1 + c2) / 2
    P = flag_volume_polynomial(B2)
    assert P.degree == 4 and P.is_homogeneous()


def test_b2_leading_term_from_dimensions(B2):
    # dim V_{k rho} = (k+1)^4 for B2, whose k^4 coefficient is P(rho) = 1
    P = flag_volume_polynomial(B2)
    assert all(weyl_dimension(B2, (k, k)) == (k + 1) ** 4 for k in range(5))
    assert P(1, 1) == 1


def test_homogeneity(B2):
    P = flag_volume_polynomial(B2)
    for k in (2, 3):
        assert P(2 * k, 3 * k) == k ** 4 * P(2, 3)


def test_degree_closed_form(A1, A2):
    assert flag_degree_closed_form(A1, (5,)) == 5
    assert flag_degree_closed_form(A2, (1, 1)) == 6
    assert flag_degree_closed_form(A2, (2, 2)) == 48
    assert flag_degree_closed_form(A2, (1, 0)) == 0
    with pytest.raises(DomainError):
        flag_degree_closed_form(A2, (1, -1))


@pytest.mark.parametrize("lam", [(a, b, c) for a in range(4) for b in range(a + 1) for c in range(b + 1)])
def test_degree_equals_normalized_volume_gl3(lam, A2):
    g = gc_polytope(lam).polytope
    w = GLnWeight(lam)
    nvol = factorial(3) * lattice_volume(g, dim=3)
    assert nvol == flag_degree_closed_form(A2, w.to_weight())
    if not w.is_regular:
        assert nvol == 0


def test_degree_equals_normalized_volume_gl4():
    A3 = build_root_system("A", 3)
    for lam in [(3, 2, 1, 0), (2, 1, 0, -1), (3, 1, 1, 0)]:
        g = gc_polytope(lam).polytope
        assert factorial(6) * lattice_volume(g, dim=6) == flag_degree_closed_form(A3, GLnWeight(lam).to_weight())


@pytest.mark.parametrize("lam", [(2, 1, 0), (1, 1, 0), (3, 1, 0)])
def test_ehrhart_equals_hilbert(lam):
    g = gc_polytope(lam).polytope
    w = GLnWeight(lam).to_weight()
    for k in (1, 2, 3):
        assert ehrhart_count(g, k) == weyl_dimension(w.rs, w * k)


def test_cohomology():
    expected = {("A", 1): (1, 1), ("A", 2): (1, 2, 2, 1), ("B", 2): (1, 2, 2, 2, 1), ("C", 2): (1, 2, 2, 2, 1)}
    for (f, r), h in expected.items():
        assert flag_cohomology(build_root_system(f, r)).hilbert == h


@pytest.mark.parametrize("family,rank", [("A", 1), ("A", 2), ("B", 2), ("C", 2)])
def test_kostant(family, rank):
    assert kostant_check(build_root_system(family, rank))


def test_kostant_rank_limit():
    with pytest.raises(UnsupportedError):
        kostant_check(build_root_system("A", 4))


def test_invariants_a2(A2):
    inv = invariant_generators(A2, 3)
    assert [g.degree for g in inv] == [2, 3]


def test_additivity():
    assert gc_additivity_check((3, 0), (2, 0))
    assert gc_additivity_check((2, 1, 0), (1, 1, 0))
    assert gc_additivity_check((1, 0, 0), (0, 0, -1))
    g = gc_polytope((2, 1, 0)).polytope
    doubled = gc_polytope((4, 2, 0)).polytope
    assert polytopes_equal(doubled, g.scale(2))
    assert polytopes_equal(doubled, minkowski_sum(g, g))


def test_brion(A1, A2):
    assert brion_degree_integral(QPolytope.simplex(2), None, 2) == 1
    assert brion_degree_integral(QPolytope.point((1, 1)), A2, 3) == 6
    assert brion_degree_integral(QPolytope.point((2, 2)), A2, 3) == 48
    assert brion_degree_integral(QPolytope.point((4,)), A1, 1) == 4
    with pytest.raises(DomainError):
        brion_degree_integral(QPolytope.point((1, -1)), A2, 3)


def test_brion_drops_orthogonal_roots(A2):
    # on the ray of omega_1 the root alpha_2 is orthogonal and omitted, leaving c^2/2
    seg = QPolytope.from_points([(1, 0), (2, 0)])
    assert brion_degree_integral(seg, A2, 1) == F(7, 6)
