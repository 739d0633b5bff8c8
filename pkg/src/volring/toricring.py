"""Smooth projective toric varieties from rays and divisor coefficients.

A divisor ``D = sum a_rho D_rho`` has moment polytope
``{m : <m, u_rho> >= -a_rho for every ray}``. The volume polynomial lives
on the coefficient space of a chosen list of basis divisors.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial, gcd

from ._linalg import dot, frac, frac_vector
from .apolarity import annihilator_presentation
from .errors import DomainError
from .mpoly import MPoly, interpolate_homogeneous
from .polykernel import (
    QPolytope,
    facets,
    lattice_volume,
    minkowski_sum,
    polytopes_equal,
    vertices_of,
)
from .report import CheckResult

__all__ = [
    "ToricFamily",
    "PRESETS",
    "preset",
    "moment_from_divisor",
    "combine_divisors",
    "toric_additivity_check",
    "toric_volume_polynomial",
    "toric_cohomology",
    "h_vector_check",
    "h_vector_of_simple_polytope",
    "kushnirenko_check",
    "shift_divisor",
]


@dataclass(frozen=True)
class ToricFamily:
    dim: int
    rays: tuple
    basis_divisors: tuple
    name: str = "custom"

    def __post_init__(self):
        rays = tuple(tuple(int(x) for x in u) for u in self.rays)
        divs = tuple(frac_vector(a) for a in self.basis_divisors)
        for u in rays:
            if len(u) != self.dim:
                raise DomainError(f"ray {u} does not live in Z^{self.dim}")
            if gcd(*u) != 1:
                raise DomainError(f"ray {u} is not primitive")
        for a in divs:
            if len(a) != len(rays):
                raise DomainError(f"divisor {a} needs one coefficient per ray ({len(rays)})")
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "basis_divisors", divs)

    @property
    def num_basis(self):
        return len(self.basis_divisors)

    def to_json(self):
        return {
            "dim": self.dim,
            "rays": [list(u) for u in self.rays],
            "divisors": [[str(x) for x in a] for a in self.basis_divisors],
        }

    @classmethod
    def from_json(cls, data, name="custom"):
        try:
            return cls(int(data["dim"]), data["rays"], data["divisors"], name=name)
        except KeyError as exc:
            raise DomainError(f"toric family JSON is missing {exc}") from None


PRESETS = {
    "P2": ToricFamily(2, ((1, 0), (0, 1), (-1, -1)), ((0, 0, 1),), "P2"),
    "P1xP1": ToricFamily(
        2, ((1, 0), (-1, 0), (0, 1), (0, -1)), ((1, 0, 0, 0), (0, 0, 1, 0)), "P1xP1"
    ),
    # (1,0,0,0) is the fiber class (a segment), (0,0,0,1) the triangle
    # (0,0), (0,1), (1,1)
    "Hirzebruch(1)": ToricFamily(
        2, ((1, 0), (0, 1), (-1, 1), (0, -1)), ((1, 0, 0, 0), (0, 0, 0, 1)), "Hirzebruch(1)"
    ),
    "point": ToricFamily(0, (), (), "point"),
}


def preset(name):
    aliases = {"p2": "P2", "p1xp1": "P1xP1", "hirzebruch(1)": "Hirzebruch(1)",
               "hirzebruch1": "Hirzebruch(1)", "f1": "Hirzebruch(1)", "point": "point"}
    key = aliases.get(str(name).lower())
    if key is None:
        raise DomainError(f"unknown toric preset {name!r}; choose from {sorted(PRESETS)}")
    return PRESETS[key]


def combine_divisors(fam, x):
    """Coefficient vector of ``sum x_i a^(i)`` over the basis divisors."""
    x = frac_vector(x)
    if len(x) != fam.num_basis:
        raise DomainError(f"expected {fam.num_basis} basis coordinates, got {len(x)}")
    out = [Fraction(0)] * len(fam.rays)
    for xi, a in zip(x, fam.basis_divisors):
        out = [s + xi * c for s, c in zip(out, a)]
    return tuple(out)


def moment_from_divisor(fam, a):
    """``{m : <m, u_rho> >= -a_rho}``; raises UnboundedError when not bounded."""
    a = frac_vector(a)
    if len(a) != len(fam.rays):
        raise DomainError(f"divisor needs {len(fam.rays)} coefficients, got {len(a)}")
    if fam.dim == 0:
        return QPolytope.point(())
    p = QPolytope.from_inequalities(fam.rays, [-x for x in a])
    # forces vertex enumeration so unboundedness surfaces here
    return QPolytope(p.dim, ineqs=p.ineqs, vertices=vertices_of(p))


def shift_divisor(fam, a, m):
    """Linearly equivalent divisor ``a_rho + <m, u_rho>``; its polytope is ``mu(a) - m``."""
    m = frac_vector(m)
    return tuple(frac(x) + dot(m, u) for x, u in zip(a, fam.rays))


def toric_additivity_check(fam, a, b):
    lhs = minkowski_sum(moment_from_divisor(fam, a), moment_from_divisor(fam, b))
    rhs = moment_from_divisor(fam, tuple(frac(x) + frac(y) for x, y in zip(a, b)))
    return polytopes_equal(lhs, rhs)


def toric_volume_polynomial(fam):
    """``P(x) = Vol(mu(sum x_i a^(i)))``, interpolated and certified on further samples."""
    n = fam.dim

    def oracle(x):
        return lattice_volume(moment_from_divisor(fam, combine_divisors(fam, x)), dim=n)

    return interpolate_homogeneous(fam.num_basis, n, oracle)


def toric_cohomology(fam):
    return annihilator_presentation(toric_volume_polynomial(fam), fam.dim)


def kushnirenko_check(fam, x, P=None):
    """``n! Vol(mu(sum x_i a^(i)))`` against ``n! P(x)``."""
    if P is None:
        P = toric_volume_polynomial(fam)
    n = fam.dim
    lhs = factorial(n) * lattice_volume(moment_from_divisor(fam, combine_divisors(fam, x)), dim=n)
    rhs = factorial(n) * P(frac_vector(x))
    return CheckResult(f"kushnirenko {list(x)}", lhs == rhs, lhs, rhs)


def h_vector_of_simple_polytope(p):
    """h-vector of a full-dimensional simple polytope, or None if it is not simple.

    Codimension-k faces correspond to k-subsets of the facets through some
    vertex; ``sum_k f_k (t-1)^(n-k) = sum_k h_k t^(n-k)`` with ``f_k`` the
    number of codimension-k faces.
    """
    n = p.dim
    verts = vertices_of(p)
    if n == 0:
        return [1]
    fcts = facets(p)
    through = [frozenset(j for j, (_, _, tight) in enumerate(fcts) if i in tight)
               for i in range(len(verts))]
    if any(len(s) != n for s in through):
        return None
    f = []
    for k in range(n + 1):
        faces = set()
        for s in through:
            faces.update(combinations(sorted(s), k))
        f.append(len(faces))
    # expand sum_k f_k (t-1)^(n-k); coefficient of t^(n-i) is h_i
    h = [0] * (n + 1)
    for k, fk in enumerate(f):
        m = n - k
        for j in range(m + 1):
            # (t-1)^m contributes comb(m, j) t^j (-1)^(m-j)
            h[n - j] += fk * comb(m, j) * (-1) ** (m - j)
    return h


def h_vector_check(fam, pres=None):
    """Hilbert function of the ring against the h-vector of a simple moment polytope."""
    if pres is None:
        pres = toric_cohomology(fam)
    hilbert = list(pres.hilbert)
    a = combine_divisors(fam, [1] * fam.num_basis)
    p = moment_from_divisor(fam, a)
    if fam.dim > 0 and p.affine_dim() < fam.dim:
        return CheckResult("h-vector", False, hilbert, None,
                           "sum of basis divisors is not full-dimensional; check skipped", skipped=True)
    h = h_vector_of_simple_polytope(p)
    if h is None:
        return CheckResult("h-vector", False, hilbert, None, "not simple; check skipped", skipped=True)
    return CheckResult("h-vector", hilbert == h, hilbert, h)
