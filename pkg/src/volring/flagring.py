"""Flag varieties: Gelfand-Cetlin polytopes, degrees and the cohomology ring.

Gelfand-Cetlin coordinates are the entries of a triangular pattern below
its fixed top row, read row by row. For ``GL(3)`` and ``lam = (l1, l2, l3)``
the coordinates are ``(x21, x22, x31)`` with

    l1 >= x21 >= l2 >= x22 >= l3,    x21 >= x31 >= x22.
"""

from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, factorial, floor, prod

from ._linalg import EchelonSpan, frac, frac_vector
from .apolarity import annihilator_presentation, ideals_equal
from .errors import DomainError, PresentationMismatch, UnsupportedError
from .mpoly import MPoly, monomials
from .polykernel import (
    DEFAULT_LATTICE_CAP,
    QPolytope,
    integrate,
    lattice_points,
    minkowski_sum,
    polytopes_equal,
    vertices_of,
)
from .rootdata import (
    DEFAULT_WEYL_CAP,
    Weight,
    build_root_system,
    length_distribution,
    weyl_dimension,
    weyl_group,
)

__all__ = [
    "GLnWeight",
    "GCPolytope",
    "gc_polytope",
    "gc_dimension_check",
    "flag_degree_closed_form",
    "flag_volume_polynomial",
    "flag_cohomology",
    "kostant_check",
    "gc_additivity_check",
    "brion_degree_integral",
    "invariant_generators",
]

GCDimension = namedtuple("GCDimension", "count dim equal")


@dataclass(frozen=True)
class GLnWeight:
    """Weakly decreasing tuple ``l1 >= ... >= ln``."""

    parts: tuple

    def __init__(self, parts):
        parts = frac_vector(parts)
        if len(parts) < 1:
            raise DomainError("a GL(n) weight needs at least one part")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"{tuple(str(p) for p in parts)} is not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self):
        return len(self.parts)

    @property
    def is_integral(self):
        return all(p.denominator == 1 for p in self.parts)

    @property
    def is_regular(self):
        return all(a > b for a, b in zip(self.parts, self.parts[1:]))

    def __add__(self, other):
        if self.n != other.n:
            raise DomainError("weights for different GL(n)")
        return GLnWeight(tuple(a + b for a, b in zip(self.parts, other.parts)))

    def __mul__(self, k):
        return GLnWeight(tuple(frac(k) * p for p in self.parts))

    __rmul__ = __mul__

    def root_system(self):
        if self.n < 2:
            raise UnsupportedError("GL(1) has no roots")
        return build_root_system("A", self.n - 1)

    def to_weight(self):
        """Fundamental-weight coordinates ``c_i = l_i - l_{i+1}`` for ``A_{n-1}``."""
        rs = self.root_system()
        return Weight(rs, tuple(a - b for a, b in zip(self.parts, self.parts[1:])))

    def to_json(self):
        return [str(p) for p in self.parts]


@dataclass(frozen=True)
class GCPolytope:
    weight: GLnWeight
    polytope: QPolytope

    @property
    def num_coords(self):
        return self.polytope.dim


def _pattern_index(n):
    """Map pattern position ``(row, col)`` (0-based, row 0 = top) to a coordinate."""
    index = {}
    k = 0
    for i in range(1, n):
        for j in range(n - i):
            index[(i, j)] = k
            k += 1
    return index


def gc_polytope(lam):
    """Gelfand-Cetlin polytope of a ``GL(n)`` weight in ``R^{n(n-1)/2}``."""
    if not isinstance(lam, GLnWeight):
        lam = GLnWeight(lam)
    n = lam.n
    index = _pattern_index(n)
    N = len(index)

    def entry(i, j):
        # (coefficient vector, constant)
        if i == 0:
            return [Fraction(0)] * N, lam.parts[j]
        v = [Fraction(0)] * N
        v[index[(i, j)]] = Fraction(1)
        return v, Fraction(0)

    A, b = [], []
    for i in range(n - 1):
        for j in range(n - 1 - i):
            upper_left, cl = entry(i, j)
            upper_right, cr = entry(i, j + 1)
            below, cb = entry(i + 1, j)
            # upper_left >= below
            A.append([p - q for p, q in zip(upper_left, below)])
            b.append(cb - cl)
            # below >= upper_right
            A.append([p - q for p, q in zip(below, upper_right)])
            b.append(cr - cb)
    if N == 0:
        return GCPolytope(lam, QPolytope.point(()))
    lo, hi = lam.parts[-1], lam.parts[0]
    bounds = [(ceil(lo), floor(hi))] * N
    return GCPolytope(lam, QPolytope.from_inequalities(A, b, bounds=bounds))


def gc_dimension_check(lam, cap=DEFAULT_LATTICE_CAP):
    """Lattice points of the GC polytope against the Weyl dimension formula."""
    if not isinstance(lam, GLnWeight):
        lam = GLnWeight(lam)
    if not lam.is_integral:
        raise DomainError("dimension check needs an integral weight")
    count = len(lattice_points(gc_polytope(lam).polytope, cap=cap))
    dim = weyl_dimension(lam.root_system(), lam.to_weight())
    if dim.denominator == 1:
        dim = dim.numerator
    return GCDimension(count, dim, count == dim)


def _root_forms(rs, roots=None):
    """Linear forms ``c -> <lam(c), alpha> / <rho, alpha>`` in weight coordinates."""
    forms = []
    for a in rs.positive_roots if roots is None else roots:
        rho_a = rs.pairing(rs.rho, a)
        coeffs = [rs.pairing(w, a) / rho_a for w in rs.fundamental_weights]
        forms.append(MPoly.linear_form(coeffs))
    return forms


def flag_volume_polynomial(rs):
    """``prod_{alpha > 0} <lam, alpha> / <rho, alpha>`` in fundamental-weight coordinates."""
    P = MPoly.const(rs.rank, 1)
    for f in _root_forms(rs):
        P = P * f
    return P


def flag_degree_closed_form(rs, lam):
    """``N! prod <lam, alpha> / <rho, alpha>``; zero for non-regular ``lam``."""
    if not isinstance(lam, Weight):
        lam = rs.weight(lam)
    if not lam.is_dominant:
        raise DomainError(f"weight {lam.coords} is not dominant")
    x = lam.ambient()
    N = rs.num_positive_roots
    value = prod(
        (rs.pairing(x, a) / rs.pairing(rs.rho, a) for a in rs.positive_roots),
        start=Fraction(1),
    )
    return factorial(N) * value


def flag_cohomology(rs, cap=DEFAULT_WEYL_CAP):
    """Presentation of ``H*(G/B)`` as ``Sym / Ann(P)``, checked against Weyl lengths."""
    P = flag_volume_polynomial(rs)
    N = rs.num_positive_roots
    pres = annihilator_presentation(P, N)
    expected = tuple(length_distribution(rs, cap))
    if pres.hilbert != expected:
        raise PresentationMismatch(
            f"presentation mismatch for {rs.name}: Hilbert {pres.hilbert} vs lengths {expected}"
        )
    return pres


def invariant_generators(rs, max_degree, cap=DEFAULT_WEYL_CAP):
    """Spanning set of W-invariant operators in each degree ``1..max_degree``.

    ``W`` acts on the operator variables through the transposed action on
    weight coordinates; invariants come from averaging monomials.
    """
    group = weyl_group(rs, cap)
    r = rs.rank
    subs_list = []
    for w in group:
        M = w.weight_matrix
        subs_list.append(
            [MPoly.linear_form([M[j][i] for j in range(r)]) for i in range(r)]
        )
    out = []
    for d in range(1, max_degree + 1):
        mons = list(monomials(r, d))
        index = {m: i for i, m in enumerate(mons)}
        span = EchelonSpan(len(mons))
        for m in mons:
            mono = MPoly.monomial(m)
            avg = MPoly.zero(r)
            for subs in subs_list:
                avg = avg + mono.substitute(subs)
            avg = avg / len(group)
            if avg.is_zero():
                continue
            v = [Fraction(0)] * len(mons)
            for e, c in avg.terms.items():
                v[index[e]] = c
            if span.add(v):
                out.append(avg)
    return out


def kostant_check(rs, cap=DEFAULT_WEYL_CAP):
    """Ann(P) equals the ideal generated by positive-degree W-invariants (degrees <= N+1)."""
    if rs.rank > 3:
        raise UnsupportedError(f"kostant_check is limited to rank <= 3, got {rs.name}")
    N = rs.num_positive_roots
    pres = flag_cohomology(rs, cap)
    inv = invariant_generators(rs, N + 1, cap)
    return ideals_equal(pres.generators(), inv, N, nvars=rs.rank)


def gc_additivity_check(lam, mu):
    """``Delta(lam) + Delta(mu) == Delta(lam + mu)`` exactly."""
    if not isinstance(lam, GLnWeight):
        lam = GLnWeight(lam)
    if not isinstance(mu, GLnWeight):
        mu = GLnWeight(mu)
    if lam.n != mu.n:
        raise DomainError("weights for different GL(n)")
    lhs = minkowski_sum(gc_polytope(lam).polytope, gc_polytope(mu).polytope)
    rhs = gc_polytope(lam + mu).polytope
    return polytopes_equal(lhs, rhs)


def brion_degree_integral(mupoly, rs, n):
    """``n! * integral of prod_{alpha not in E} <g, alpha>/<rho, alpha>`` over ``mupoly``.

    ``E`` holds the positive roots orthogonal to the whole polytope. With
    ``rs=None`` there are no roots (torus case) and the integrand is 1.
    A 0-dimensional polytope is integrated with the counting measure.
    """
    verts = vertices_of(mupoly)
    if rs is None:
        f = MPoly.const(mupoly.dim, 1)
    else:
        if mupoly.dim != rs.rank:
            raise DomainError(f"polytope lives in R^{mupoly.dim}, weights of {rs.name} have {rs.rank} coordinates")
        if any(c < 0 for v in verts for c in v):
            raise DomainError("moment polytope leaves the dominant chamber")
        kept = []
        for a in rs.positive_roots:
            if any(rs.pairing(rs.to_ambient(v), a) != 0 for v in verts):
                kept.append(a)
        f = MPoly.const(rs.rank, 1)
        for form in _root_forms(rs, kept):
            f = f * form
    return factorial(n) * integrate(mupoly, f)
