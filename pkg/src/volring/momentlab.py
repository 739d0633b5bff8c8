"""Moment polytopes computed from representation data.

Weights are in fundamental-weight coordinates throughout. Additivity
verdicts come with an exact witness: a vertex of one side together with
an inequality of the other side that it violates.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from ._linalg import dot, frac_vector
from .errors import DomainError
from .polykernel import (
    QPolytope,
    h_from_v,
    inequalities_of,
    minkowski_sum,
    polytopes_equal,
    vertices_of,
)
from .report import jsonable
from .rootdata import (
    DEFAULT_WEYL_CAP,
    Weight,
    longest_element,
    sl2_tensor_decompose,
    weight_polytope,
    weyl_group,
)

__all__ = [
    "MomentReport",
    "find_witness",
    "sl2_diag_moment",
    "sl2_additivity_report",
    "sl2_additivity_counterexample",
    "dominant_slice",
    "dominant_slice_direct",
    "weight_polytope_sum_check",
    "weight_sum_report",
    "group_compactification_moment",
]


@dataclass
class MomentReport:
    name: str
    inputs: dict
    polytopes: dict
    equal: bool
    witness: dict | None = None
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return self.equal

    def to_json(self):
        out = {
            "name": self.name,
            "inputs": jsonable(self.inputs),
            "polytopes": {k: _vertex_json(p) for k, p in self.polytopes.items()},
            "equal": self.equal,
            "witness": jsonable(self.witness),
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _vertex_json(p):
    return {"dim": p.dim, "vertices": [[str(x) for x in v] for v in vertices_of(p)]}


def find_witness(lhs, rhs):
    """A vertex of one polytope outside the other, with the violated inequality."""
    for inside, outside, side in ((rhs, lhs, "rhs"), (lhs, rhs, "lhs")):
        ineqs = inequalities_of(h_from_v(outside))
        for v in vertices_of(inside):
            for a, b in ineqs:
                if dot(a, v) < b:
                    return {
                        "point": list(v),
                        "belongs_to": side,
                        "violates": {"a": list(a), "b": b},
                        "value": dot(a, v),
                    }
    return None


def _compare(name, inputs, lhs, rhs):
    equal = polytopes_equal(lhs, rhs)
    witness = None if equal else find_witness(lhs, rhs)
    if not equal and witness is None:
        raise AssertionError("unequal polytopes without a separating vertex")
    return MomentReport(name, inputs, {"lhs": lhs, "rhs": rhs}, equal, witness)


def sl2_diag_moment(a, b):
    """Hull of the highest weights in ``V_a (x) V_b``, from Clebsch-Gordan."""
    weights = [k for k, _ in sl2_tensor_decompose(a, b)]
    return QPolytope.from_points([(k,) for k in weights])


def sl2_additivity_report(p1, p2):
    """Compare ``mu(L_p1) + mu(L_p2)`` with ``mu(L_{p1+p2})`` on ``P1 x P1``."""
    (a1, b1), (a2, b2) = p1, p2
    lhs = minkowski_sum(sl2_diag_moment(a1, b1), sl2_diag_moment(a2, b2))
    rhs = sl2_diag_moment(a1 + a2, b1 + b2)
    return _compare("sl2-diagonal-additivity", {"L1": list(p1), "L2": list(p2)}, lhs, rhs)


def sl2_additivity_counterexample():
    """``[1,3] + [1,3] = [2,6]`` differs from ``[0,6]``; witness 0."""
    return sl2_additivity_report((2, 1), (1, 2))


def _as_weight(rs, lam):
    if isinstance(lam, Weight):
        return lam
    return rs.weight(lam)


def _gram(rs):
    W = rs.fundamental_weights
    return [[rs.pairing(u, v) for v in W] for u in W]


def dominant_slice(rs, lam, literal=False):
    """``P_lam`` intersected with the dominant chamber, as 2r inequalities.

    The chamber is ``c_i >= 0``; the upper bounds are
    ``<x, omega_i> <= <lam, omega_i>``. With ``literal=True`` the bounds
    read ``<x, omega_i> <= c_i`` instead, which depends on how the form is
    normalized and in general is a different polytope.
    """
    lam = _as_weight(rs, lam)
    if not lam.is_dominant:
        raise DomainError(f"weight {lam.coords} is not dominant")
    r = rs.rank
    G = _gram(rs)
    A, b = [], []
    for i in range(r):
        e = [0] * r
        e[i] = 1
        A.append(e)
        b.append(0)
    for i in range(r):
        A.append([-G[j][i] for j in range(r)])
        bound = lam.coords[i] if literal else sum(G[j][i] * lam.coords[j] for j in range(r))
        b.append(-bound)
    p = QPolytope.from_inequalities(A, b)
    return QPolytope(p.dim, ineqs=p.ineqs, vertices=vertices_of(p))


def dominant_slice_direct(rs, lam, cap=DEFAULT_WEYL_CAP):
    """Facets of the Weyl-orbit hull plus the chamber, vertex-enumerated."""
    lam = _as_weight(rs, lam)
    P = h_from_v(weight_polytope(rs, lam, cap))
    r = rs.rank
    ineqs = list(P.ineqs)
    for i in range(r):
        e = [Fraction(0)] * r
        e[i] = Fraction(1)
        ineqs.append((tuple(e), Fraction(0)))
    p = QPolytope.from_inequalities([a for a, _ in ineqs], [b for _, b in ineqs])
    return QPolytope(p.dim, ineqs=p.ineqs, vertices=vertices_of(p))


def weight_polytope_sum_check(rs, lam1, lam2, cap=DEFAULT_WEYL_CAP):
    return weight_sum_report(rs, lam1, lam2, cap).equal


def weight_sum_report(rs, lam1, lam2, cap=DEFAULT_WEYL_CAP):
    l1, l2 = _as_weight(rs, lam1), _as_weight(rs, lam2)
    lhs = minkowski_sum(dominant_slice_direct(rs, l1, cap), dominant_slice_direct(rs, l2, cap))
    rhs = dominant_slice_direct(rs, l1 + l2, cap)
    return _compare(
        f"weight-slice-sum {rs.name}",
        {"lambda1": list(l1.coords), "lambda2": list(l2.coords)},
        lhs,
        rhs,
    )


def group_compactification_moment(rs, weights, cap=DEFAULT_WEYL_CAP):
    """``(x, x*)``-image of the hull of the weights, cut by the doubled chamber."""
    pts = [tuple(frac_vector(w.coords if isinstance(w, Weight) else w)) for w in weights]
    if not pts:
        raise DomainError("empty weight list")
    r = rs.rank
    if any(len(p) != r for p in pts):
        raise DomainError(f"weights of {rs.name} have {r} coordinates")
    group = weyl_group(rs, cap)
    ptset = set(pts)
    for w in group:
        for p in ptset:
            if w.act(p) not in ptset:
                raise DomainError(f"weight set is not W-invariant: {w.act(p)} missing")
    w0 = longest_element(rs)

    def star(x):
        return tuple(-y for y in w0.act(x))

    hull = vertices_of(QPolytope.from_points(pts))
    image = h_from_v(QPolytope.from_points([x + star(x) for x in hull]))
    ineqs = list(image.ineqs)
    for i in range(2 * r):
        e = [Fraction(0)] * (2 * r)
        e[i] = Fraction(1)
        ineqs.append((tuple(e), Fraction(0)))
    p = QPolytope.from_inequalities([a for a, _ in ineqs], [b for _, b in ineqs])
    return QPolytope(p.dim, ineqs=p.ineqs, vertices=vertices_of(p))
