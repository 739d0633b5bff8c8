import pytest

from volring.errors import DomainError
from volring.momentlab import (
    dominant_slice,
    dominant_slice_direct,
    group_compactification_moment,
    sl2_additivity_counterexample,
    sl2_additivity_report,
    sl2_diag_moment,
    weight_polytope_sum_check,
)
from volring.polykernel import QPolytope, minkowski_sum, polytopes_equal, vertices_of
from volring.rootdata import build_root_system

from conftest import verts


def test_sl2_segments():
    assert verts(sl2_diag_moment(2, 1)) == [("1",), ("3",)]
    assert verts(sl2_diag_moment(1, 2)) == [("1",), ("3",)]
    assert verts(sl2_diag_moment(3, 3)) == [("0",), ("6",)]


def test_counterexample_with_witness():
    rep = sl2_additivity_counterexample()
    assert not rep.equal
    assert verts(rep.polytopes["lhs"]) == [("2",), ("6",)]
    assert verts(rep.polytopes["rhs"]) == [("0",), ("6",)]
    w = rep.witness
    assert w["point"] == [0] and w["belongs_to"] == "rhs"
    # the certificate: <a, 0> < b for an inequality of the other side
    assert w["value"] < w["violates"]["b"]
    data = rep.to_json()
    assert data["witness"]["point"] == ["0"]


def test_scaled_and_trivial_variants():
    rep = sl2_additivity_report((4, 2), (2, 4))
    assert verts(rep.polytopes["lhs"]) == [("4",), ("12",)]
    assert verts(rep.polytopes["rhs"]) == [("0",), ("12",)]
    rep = sl2_additivity_report((3, 0), (0, 2))
    assert verts(rep.polytopes["lhs"]) == [("5",)]
    assert verts(rep.polytopes["rhs"]) == [("1",), ("5",)]
    assert not rep.equal and rep.witness["point"] == [1]


def test_sl2_symmetry_and_segment_oracle():
    for a in range(5):
        for b in range(5):
            assert polytopes_equal(sl2_diag_moment(a, b), sl2_diag_moment(b, a))
            for a2 in range(3):
                for b2 in range(3):
                    lo = abs(a - b) + abs(a2 - b2)
                    want = lo == abs(a + a2 - b - b2)
                    assert sl2_additivity_report((a, b), (a2, b2)).equal == want


@pytest.mark.parametrize(
    "family,rank,lam,expected",
    [
        ("A", 1, (2,), [("0",), ("2",)]),
        ("A", 2, (1, 1), [("0", "0"), ("0", "3/2"), ("1", "1"), ("3/2", "0")]),
        ("B", 2, (1, 0), [("0", "0"), ("0", "1"), ("1", "0")]),
    ],
)
def test_dominant_slices_agree(family, rank, lam, expected):
    rs = build_root_system(family, rank)
    direct = dominant_slice_direct(rs, lam)
    assert verts(direct) == expected
    assert polytopes_equal(dominant_slice(rs, lam), direct)


@pytest.mark.parametrize("family,rank,lam", [("A", 1, (2,)), ("A", 2, (1, 0)), ("B", 2, (1, 0))])
def test_literal_bound_differs(family, rank, lam):
    rs = build_root_system(family, rank)
    assert not polytopes_equal(dominant_slice(rs, lam, literal=True), dominant_slice_direct(rs, lam))


def test_literal_bound_on_a1_doubles_the_segment(A1):
    assert verts(dominant_slice(A1, (2,), literal=True)) == [("0",), ("4",)]


def test_dominant_slice_rejects_non_dominant(A2):
    with pytest.raises(DomainError):
        dominant_slice(A2, (1, -1))


@pytest.mark.parametrize(
    "family,rank,l1,l2",
    [("A", 1, (1,), (3,)), ("A", 2, (1, 0), (0, 1)), ("B", 2, (1, 0), (1, 1)), ("C", 2, (0, 1), (2, 1))],
)
def test_weight_sum(family, rank, l1, l2):
    rs = build_root_system(family, rank)
    assert weight_polytope_sum_check(rs, l1, l2)
    assert weight_polytope_sum_check(rs, l2, l1)
    assert weight_polytope_sum_check(rs, [2 * c for c in l1], [2 * c for c in l2])


def test_group_compactification(A1, A2):
    assert verts(group_compactification_moment(A1, [(-2,), (0,), (2,)])) == [("0", "0"), ("2", "2")]
    assert verts(group_compactification_moment(A1, [(0,)])) == [("0", "0")]
    adjoint = [(2, -1), (-1, 2), (1, 1), (-2, 1), (1, -2), (-1, -1), (0, 0)]
    p = group_compactification_moment(A2, adjoint)
    assert all(c >= 0 for v in vertices_of(p) for c in v)
    assert verts(p) == [("0", "0", "0", "0"), ("0", "3/2", "3/2", "0"), ("1", "1", "1", "1"), ("3/2", "0", "0", "3/2")]
    with pytest.raises(DomainError):
        group_compactification_moment(A1, [(2,), (0,)])
