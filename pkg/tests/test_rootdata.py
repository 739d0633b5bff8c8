from fractions import Fraction as F

import pytest

from volring.errors import CapExceededError, DomainError, UnsupportedError
from volring.rootdata import (
    build_root_system,
    inversion_count,
    length_distribution,
    longest_element,
    sl2_tensor_decompose,
    weight_polytope,
    weyl_dimension,
    weyl_group,
)
from volring.polykernel import facets, vertices_of


@pytest.mark.parametrize(
    "family,rank,lengths",
    [
        ("A", 1, [1, 1]),
        ("A", 2, [1, 2, 2, 1]),
        ("B", 2, [1, 2, 2, 2, 1]),
        ("C", 2, [1, 2, 2, 2, 1]),
        ("A", 3, [1, 3, 5, 6, 5, 3, 1]),
        ("B", 3, [1, 3, 5, 7, 8, 8, 7, 5, 3, 1]),
    ],
)
def test_length_distribution(family, rank, lengths):
    assert length_distribution(build_root_system(family, rank)) == lengths


def test_group_orders():
    assert len(weyl_group(build_root_system("D", 4))) == 192
    assert len(weyl_group(build_root_system("B", 3))) == 48


def test_cartan_matrices(A2, B2):
    assert A2.cartan == ((2, -1), (-1, 2))
    # entry (i, j) is <alpha_i, alpha_j coroot>; alpha_2 is the short root
    assert B2.cartan == ((2, -2), (-1, 2))


def test_bfs_length_is_inversion_count(B2):
    for w in weyl_group(B2):
        assert w.length == inversion_count(B2, w) == len(w.word)


def test_positive_root_counts():
    assert build_root_system("A", 3).num_positive_roots == 6
    assert build_root_system("B", 2).num_positive_roots == 4
    assert build_root_system("D", 4).num_positive_roots == 12


def test_weyl_dimension(A2, B2):
    assert weyl_dimension(A2, (1, 1)) == 8
    assert weyl_dimension(A2, (2, 0)) == 6
    assert weyl_dimension(B2, (1, 0)) == 5
    assert weyl_dimension(B2, (0, 1)) == 4
    with pytest.raises(DomainError):
        weyl_dimension(A2, (-1, 0))


def test_pairing_scale_is_immaterial():
    for family in "ABC":
        rs1 = build_root_system(family, 2)
        rs2 = build_root_system(family, 2, pairing_scale=F(7, 3))
        for lam in [(1, 0), (0, 1), (2, 3)]:
            assert weyl_dimension(rs1, lam) == weyl_dimension(rs2, lam)


def test_weight_polytopes(A2, B2):
    hexagon = weight_polytope(A2, (1, 1))
    assert len(vertices_of(hexagon)) == 6
    assert len(facets(hexagon)) == 6
    assert len(vertices_of(weight_polytope(A2, (1, 0)))) == 3
    assert len(vertices_of(weight_polytope(B2, (1, 1)))) == 8


def test_star(A2, A1):
    assert A2.weight(1, 0).star().coords == (0, 1)
    assert A1.weight(3).star().coords == (3,)
    assert longest_element(A2).length == 3


def test_caps_and_unsupported():
    with pytest.raises(CapExceededError, match="group too large"):
        weyl_group(build_root_system("A", 4), cap=100)
    with pytest.raises(UnsupportedError):
        build_root_system("D", 2)
    with pytest.raises(UnsupportedError):
        build_root_system("E", 6)


def test_clebsch_gordan():
    assert sl2_tensor_decompose(2, 1) == [(1, 1), (3, 1)]
    assert sl2_tensor_decompose(3, 3) == [(0, 1), (2, 1), (4, 1), (6, 1)]
    with pytest.raises(DomainError):
        sl2_tensor_decompose(-1, 2)
