from fractions import Fraction as F

import pytest

from volring.apolarity import normal_form
from volring.errors import DomainError, UnboundedError
from volring.mpoly import MPoly, polarize
from volring.polykernel import QPolytope, lattice_volume, minkowski_sum, polytopes_equal
from volring.toricring import (
    ToricFamily,
    combine_divisors,
    h_vector_check,
    h_vector_of_simple_polytope,
    kushnirenko_check,
    moment_from_divisor,
    preset,
    shift_divisor,
    toric_additivity_check,
    toric_cohomology,
    toric_volume_polynomial,
)

from conftest import verts

x, y = MPoly.var(0, 2), MPoly.var(1, 2)


def test_p2_triangle():
    fam = preset("P2")
    assert verts(moment_from_divisor(fam, (0, 0, 1))) == [("0", "0"), ("0", "1"), ("1", "0")]
    assert verts(moment_from_divisor(fam, (1, 0, 0))) == [("-1", "0"), ("-1", "1"), ("0", "0")]
    assert verts(moment_from_divisor(fam, (0, 0, 0))) == [("0", "0")]


def test_p1xp1_square():
    fam = preset("P1xP1")
    assert verts(moment_from_divisor(fam, (1, 0, 1, 0))) == [("-1", "-1"), ("-1", "0"), ("0", "-1"), ("0", "0")]


def test_unbounded_divisor():
    fam = ToricFamily(2, ((1, 0), (0, 1)), ())
    with pytest.raises(UnboundedError):
        moment_from_divisor(fam, (0, 0))


def test_family_validation():
    with pytest.raises(DomainError):
        ToricFamily(2, ((2, 0), (0, 1)), ())
    with pytest.raises(DomainError):
        ToricFamily(2, ((1, 0), (0, 1)), ((1, 0, 0),))
    with pytest.raises(DomainError):
        preset("P3")


def test_volume_polynomials():
    assert toric_volume_polynomial(preset("P2")) == MPoly.monomial((2,), F(1, 2))
    assert toric_volume_polynomial(preset("P1xP1")) == x * y
    assert toric_volume_polynomial(preset("Hirzebruch(1)")) == x * y + y * y / 2
    assert toric_volume_polynomial(preset("point")) == MPoly.const(0, 1)


def test_cohomology():
    assert toric_cohomology(preset("P2")).hilbert == (1, 1, 1)
    assert toric_cohomology(preset("Hirzebruch(1)")).hilbert == (1, 2, 1)
    assert toric_cohomology(preset("point")).hilbert == (1,)
    pres = toric_cohomology(preset("P1xP1"))
    assert pres.hilbert == (1, 2, 1)
    assert pres.ideal_gens == {2: [x * x, y * y]}
    P = toric_volume_polynomial(preset("P1xP1"))
    assert not normal_form(x * y, pres, P).is_zero()
    assert normal_form(x * x, pres, P).is_zero()


@pytest.mark.parametrize("name,h", [("P2", [1, 1, 1]), ("P1xP1", [1, 2, 1]), ("Hirzebruch(1)", [1, 2, 1])])
def test_h_vectors(name, h):
    res = h_vector_check(preset(name))
    assert res.ok and res.rhs == h


def test_h_vector_of_cube_and_non_simple():
    assert h_vector_of_simple_polytope(QPolytope.box([0, 0, 0], [1, 1, 1])) == [1, 3, 3, 1]
    octahedron = QPolytope.from_points(
        [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    )
    assert h_vector_of_simple_polytope(octahedron) is None


def test_non_simple_is_skipped():
    # rays of the octahedral fan's dual: the polytope is an octahedron
    rays = tuple((a, b, c) for a in (1, -1) for b in (1, -1) for c in (1, -1))
    fam = ToricFamily(3, rays, ((1,) * 8,))
    res = h_vector_check(fam, pres=toric_cohomology(fam))
    assert res.skipped and "not simple" in res.detail


@pytest.mark.parametrize("name", ["P2", "P1xP1", "Hirzebruch(1)"])
def test_kushnirenko(name):
    fam = preset(name)
    for x_ in [(1,) * fam.num_basis, (2,) + (1,) * (fam.num_basis - 1), (3,) * fam.num_basis]:
        assert kushnirenko_check(fam, x_).ok


def test_additivity():
    fam = preset("Hirzebruch(1)")
    assert toric_additivity_check(fam, (1, 0, 0, 0), (0, 0, 0, 1))
    assert toric_additivity_check(fam, (0, 0, 0, 0), (2, 0, 0, 1))
    assert toric_additivity_check(preset("P1xP1"), (1, 0, 2, 0), (3, 0, 1, 0))


def test_translation_invariance():
    fam = preset("Hirzebruch(1)")
    m = (2, -1)
    a = (0, 0, 0, 1)
    shifted = shift_divisor(fam, a, m)
    assert polytopes_equal(moment_from_divisor(fam, shifted), moment_from_divisor(fam, a).translate((-2, 1)))
    moved = ToricFamily(2, fam.rays, (fam.basis_divisors[0], shifted))
    assert toric_volume_polynomial(moved) == toric_volume_polynomial(fam)
    assert toric_cohomology(moved).ideal_gens == toric_cohomology(fam).ideal_gens


def test_mixed_volumes():
    fam = preset("Hirzebruch(1)")
    P = toric_volume_polynomial(fam)
    polys = [moment_from_divisor(fam, combine_divisors(fam, e)) for e in [(1, 0), (0, 1)]]
    s = minkowski_sum(*polys)
    incl_excl = (lattice_volume(s, dim=2) - lattice_volume(polys[0], dim=2) - lattice_volume(polys[1], dim=2)) / 2
    assert polarize(P, [(1, 0), (0, 1)]) == incl_excl == F(1, 2)


def test_json_roundtrip():
    fam = preset("P2")
    again = ToricFamily.from_json(fam.to_json())
    assert again.rays == fam.rays and again.basis_divisors == fam.basis_divisors
