from fractions import Fraction as F

import pytest

from volring.errors import CertificationError, DomainError
from volring.mpoly import MPoly, apply_diffop, interpolate_homogeneous, monomials, polarize, sample_grid

x = MPoly.var(0, 2)
y = MPoly.var(1, 2)


def test_monomial_order():
    assert list(monomials(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert list(monomials(0, 0)) == [()]
    assert list(monomials(0, 1)) == []


def test_arithmetic_and_evaluation():
    p = (x + y) ** 2
    assert p == x * x + 2 * x * y + y * y
    assert p(1, 2) == 9
    assert (p / 3)(1, 1) == F(4, 3)
    assert (p - p).is_zero()
    assert p.degree == 2 and p.is_homogeneous()
    assert not (p + 1).is_homogeneous()


def test_substitution_composes():
    p = x * y
    q = p(x + y, x - y)
    assert q == x * x - y * y


def test_derivative_with_rationals():
    p = MPoly(2, {(3, 1): F(1, 2)})
    assert p.derivative(0) == MPoly(2, {(2, 1): F(3, 2)})
    assert p.derivative(0, 2) == MPoly(2, {(1, 1): F(3)})


def test_apply_diffop():
    P = x * x * y
    assert apply_diffop(MPoly.monomial((1, 0)), P) == 2 * x * y
    assert apply_diffop(MPoly.monomial((2, 1)), P) == MPoly.const(2, 2)
    assert apply_diffop(MPoly.monomial((0, 2)), P).is_zero()
    with pytest.raises(DomainError):
        apply_diffop(MPoly.var(0, 1), P)


def test_json_roundtrip_and_text():
    p = MPoly(2, {(2, 0): F(1, 2), (0, 1): -3})
    assert MPoly.from_json(p.to_json()) == p
    assert p.to_json()["terms"][0] == {"exps": [2, 0], "coef": "1/2"}
    assert p.to_str() == "1/2*x1^2 - 3*x2"


def test_interpolation_recovers_polynomial():
    target = x * y + y * y / 2
    got = interpolate_homogeneous(2, 2, lambda p: target(p))
    assert got == target


def test_interpolation_certifies():
    # a piecewise-linear oracle is not a quadratic form
    with pytest.raises(CertificationError):
        interpolate_homogeneous(2, 2, lambda p: max(p) ** 2)


def test_sample_grid_is_positive():
    pts = sample_grid(3, 2)
    assert len(pts) == 6
    assert all(min(p) >= 1 and sum(p) == 5 for p in pts)


def test_polarization():
    P = x * y
    # mixed area of two unit segments along the axes
    assert polarize(P, [(1, 0), (0, 1)]) == F(1, 2)
    assert polarize(P, [(1, 1), (1, 1)]) == P(1, 1)
