"""Exact rational convex polytopes.

A :class:`QPolytope` carries an inequality description, a vertex list, or
both. Conversions use the double description method on integer data.
Volumes are normalized to the lattice induced on the polytope's affine
span, so a segment from ``(0, 0)`` to ``(2, 2)`` has 1-dimensional volume
2 and a point has 0-dimensional volume 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, floor, ceil, prod

from ._linalg import (
    EchelonSpan,
    det,
    dot,
    frac,
    frac_vector,
    inverse,
    nullspace,
    primitive,
    rank,
    rref,
    saturated_basis,
)
from .errors import CapExceededError, CertificationError, DomainError, UnboundedError
from .mpoly import MPoly

__all__ = [
    "QPolytope",
    "SimplexDecomposition",
    "v_from_h",
    "h_from_v",
    "minkowski_sum",
    "lattice_points",
    "lattice_volume",
    "integrate",
    "ehrhart_count",
    "polytopes_equal",
    "triangulate",
    "DEFAULT_LATTICE_CAP",
]

DEFAULT_LATTICE_CAP = 10**7


@dataclass(frozen=True)
class QPolytope:
    """Bounded rational polytope in ``R^dim``.

    ``ineqs`` is a tuple of ``(a, b)`` meaning ``<a, x> >= b``;
    ``vertices`` is a lexicographically sorted tuple of points. An empty
    polytope has ``vertices == ()``. ``bounds`` is an optional integer
    bounding box used to speed up lattice scans.
    """

    dim: int
    ineqs: tuple | None = None
    vertices: tuple | None = None
    bounds: tuple | None = None

    def __post_init__(self):
        if self.ineqs is None and self.vertices is None:
            raise DomainError("a polytope needs inequalities or vertices")

    @classmethod
    def from_inequalities(cls, A, b, bounds=None):
        A = [frac_vector(a) for a in A]
        if not A:
            raise DomainError("no inequalities given")
        dim = len(A[0])
        if any(len(a) != dim for a in A):
            raise DomainError("inequality rows have different lengths")
        ineqs = tuple((a, frac(bi)) for a, bi in zip(A, b))
        if bounds is not None:
            bounds = tuple((int(lo), int(hi)) for lo, hi in bounds)
        return cls(dim, ineqs=ineqs, bounds=bounds)

    @classmethod
    def from_points(cls, points, dim=None):
        """Convex hull of ``points``; redundant points are dropped."""
        pts = [frac_vector(p) for p in points]
        if dim is None:
            if not pts:
                raise DomainError("cannot infer dimension of an empty point set")
            dim = len(pts[0])
        if any(len(p) != dim for p in pts):
            raise DomainError("points have different lengths")
        return cls(dim, vertices=_hull(tuple(sorted(set(pts)))).vertices)

    @classmethod
    def empty(cls, dim):
        return cls(dim, vertices=())

    @classmethod
    def point(cls, p):
        p = frac_vector(p)
        return cls(len(p), vertices=(p,))

    @classmethod
    def box(cls, lows, highs):
        d = len(lows)
        A, b = [], []
        for i in range(d):
            e = [0] * d
            e[i] = 1
            A.append(e)
            b.append(lows[i])
            A.append([-x for x in e])
            b.append(-frac(highs[i]))
        return cls.from_inequalities(A, b)

    @classmethod
    def simplex(cls, d, scale=1):
        pts = [[0] * d]
        for i in range(d):
            e = [0] * d
            e[i] = scale
            pts.append(e)
        return cls.from_points(pts)

    @property
    def is_empty(self):
        return len(vertices_of(self)) == 0

    def contains(self, x):
        x = frac_vector(x)
        return all(dot(a, x) >= b for a, b in inequalities_of(self))

    def scale(self, k):
        k = frac(k)
        if k < 0:
            raise DomainError("negative dilation")
        if k == 0:
            return QPolytope.empty(self.dim) if self.is_empty else QPolytope.point((0,) * self.dim)
        ineqs = None if self.ineqs is None else tuple((a, b * k) for a, b in self.ineqs)
        verts = None if self.vertices is None else tuple(tuple(x * k for x in v) for v in self.vertices)
        bounds = None
        if self.bounds is not None and k.denominator == 1:
            bounds = tuple((lo * int(k), hi * int(k)) for lo, hi in self.bounds)
        return QPolytope(self.dim, ineqs=ineqs, vertices=verts, bounds=bounds)

    def translate(self, t):
        t = frac_vector(t)
        ineqs = None
        if self.ineqs is not None:
            ineqs = tuple((a, b + dot(a, t)) for a, b in self.ineqs)
        verts = None
        if self.vertices is not None:
            verts = tuple(sorted(tuple(x + y for x, y in zip(v, t)) for v in self.vertices))
        return QPolytope(self.dim, ineqs=ineqs, vertices=verts)

    def affine_dim(self):
        verts = vertices_of(self)
        return _hull(verts).affdim if verts else -1

    def to_json(self):
        out = {"dim": self.dim}
        if self.ineqs is not None:
            out["ineqs"] = [
                {"a": [str(x) for x in a], "b": str(b)} for a, b in self.ineqs
            ]
        if self.vertices is not None:
            out["vertices"] = [[str(x) for x in v] for v in sorted(self.vertices)]
        return out

    @classmethod
    def from_json(cls, data):
        dim = int(data["dim"])
        ineqs = verts = None
        if data.get("ineqs") is not None:
            ineqs = tuple((frac_vector(r["a"]), frac(r["b"])) for r in data["ineqs"])
        if data.get("vertices") is not None:
            verts = tuple(sorted(frac_vector(v) for v in data["vertices"]))
        return cls(dim, ineqs=ineqs, vertices=verts)


@dataclass(frozen=True)
class SimplexDecomposition:
    """Simplices (tuples of vertices) with disjoint interiors covering a polytope."""

    affine_dim: int
    simplices: tuple


# ---------------------------------------------------------------------------
# double description


def _extreme_rays(rows, dim):
    """Extreme rays of the pointed cone ``{y : <r, y> >= 0 for r in rows}``.

    ``rows`` are integer tuples of length ``dim`` and must have rank
    ``dim``. Returns ``(rays, zero_masks)``; bit ``i`` of a mask is set
    when the ray is tight on ``rows[i]``.
    """
    span = EchelonSpan(dim)
    init = []
    for i, r in enumerate(rows):
        if span.add(r):
            init.append(i)
            if len(init) == dim:
                break
    if len(init) < dim:
        raise DomainError("cone is not pointed")
    Rinv = inverse([rows[i] for i in init])
    rays = []
    masks = []
    all_init = 0
    for i in init:
        all_init |= 1 << i
    for j in range(dim):
        col = [Rinv[i][j] for i in range(dim)]
        rays.append(primitive(col))
        masks.append(all_init & ~(1 << init[j]))

    init_set = set(init)
    for k, h in enumerate(rows):
        if k in init_set:
            continue
        vals = [sum(a * b for a, b in zip(h, r)) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        if not neg:
            bit = 1 << k
            masks = [m | bit if v == 0 else m for m, v in zip(masks, vals)]
            continue
        new_rays, new_masks = [], []
        bit = 1 << k
        for i, v in enumerate(vals):
            if v > 0:
                new_rays.append(rays[i])
                new_masks.append(masks[i])
            elif v == 0:
                new_rays.append(rays[i])
                new_masks.append(masks[i] | bit)
        need = dim - 2
        for p in pos:
            mp = masks[p]
            for n in neg:
                common = mp & masks[n]
                if bin(common).count("1") < need:
                    continue
                adjacent = True
                for r, mr in enumerate(masks):
                    if r != p and r != n and (mr & common) == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                vp, vn = vals[p], vals[n]
                ray = tuple(vp * a - vn * b for a, b in zip(rays[n], rays[p]))
                new_rays.append(primitive(ray))
                new_masks.append(common | bit)
        rays, masks = new_rays, new_masks
    return rays, masks


@dataclass(frozen=True)
class _Hull:
    vertices: tuple          # sorted, irredundant
    affdim: int
    base: tuple              # a point of the affine span
    pivots: tuple            # coordinates that parametrize the affine span
    equations: tuple         # (c, e): <c, x> = e
    facets: tuple            # (a, b, tight vertex indices): <a, x> >= b


@lru_cache(maxsize=8192)
def _hull(points):
    """Convex hull data for a sorted tuple of distinct rational points."""
    if not points:
        return _Hull((), -1, (), (), (), ())
    d = len(points[0])
    v0 = points[0]
    diffs = [[x - y for x, y in zip(p, v0)] for p in points[1:]]
    if diffs:
        _, pivots = rref(diffs, d)
    else:
        pivots = []
    k = len(pivots)
    if diffs and k:
        eqs = tuple(
            (c, dot(c, v0))
            for c in (tuple(Fraction(x) for x in primitive(v)) for v in nullspace(diffs, d))
        )
    else:
        eqs = tuple(
            (tuple(Fraction(int(i == j)) for j in range(d)), v0[i]) for i in range(d)
        )
    if k == 0:
        return _Hull((v0,), 0, v0, (), eqs, ())

    proj = [tuple(p[c] for c in pivots) for p in points]
    rows = [primitive((-1,) + y) for y in proj]
    rays, masks = _extreme_rays(rows, k + 1)
    raw_facets = []
    for ray, mask in zip(rays, masks):
        if not any(ray[1:]):
            continue
        b = Fraction(ray[0])
        a_proj = ray[1:]
        a = [Fraction(0)] * d
        for c, val in zip(pivots, a_proj):
            a[c] = Fraction(val)
        tight = frozenset(i for i in range(len(points)) if mask >> i & 1)
        raw_facets.append((tuple(a), b, tight))

    # a point is a vertex iff the normals of its tight facets have full rank
    is_vertex = []
    for i in range(len(points)):
        normals = [f[0] for f in raw_facets if i in f[2]]
        is_vertex.append(len(normals) >= k and rank(normals, d) == k)
    keep = [i for i in range(len(points)) if is_vertex[i]]
    reindex = {old: new for new, old in enumerate(keep)}
    verts = tuple(points[i] for i in keep)
    facets = tuple(
        sorted(
            (a, b, frozenset(reindex[i] for i in tight if i in reindex))
            for a, b, tight in raw_facets
        )
    )
    return _Hull(verts, k, v0, tuple(pivots), eqs, facets)


def _dedupe_sorted(points):
    return tuple(sorted(set(points)))


def vertices_of(p):
    """Irredundant, sorted vertex tuple of ``p`` (computed if needed)."""
    if p.vertices is not None:
        return p.vertices
    return v_from_h(p).vertices


def inequalities_of(p):
    if p.ineqs is not None:
        return p.ineqs
    return h_from_v(p).ineqs


@lru_cache(maxsize=4096)
def _vertex_enum(ineqs, d):
    if d == 0:
        return ((),) if all(b <= 0 for _, b in ineqs) else ()
    A = [list(a) for a, _ in ineqs]
    if not A:
        raise UnboundedError("no inequalities: polyhedron is all of R^d", direction=None)
    R, piv = rref(A, d)
    if len(piv) < d:
        # lines in the recession cone: either empty or unbounded
        lin = nullspace(A, d)
        sub = [(tuple(a[c] for c in piv), b) for a, b in ineqs]
        if _vertex_enum_full(sub, len(piv)):
            raise UnboundedError(
                f"polyhedron contains the line along {[str(x) for x in lin[0]]}",
                direction=tuple(lin[0]),
            )
        return ()
    return _vertex_enum_full(ineqs, d)


def _vertex_enum_full(ineqs, d):
    if d == 0:
        return ((),) if all(b <= 0 for _, b in ineqs) else ()
    rows = [primitive((-b,) + tuple(a)) for a, b in ineqs]
    rows.append((1,) + (0,) * d)
    rays, _ = _extreme_rays(rows, d + 1)
    verts, recession = [], []
    for r in rays:
        if r[0] > 0:
            verts.append(tuple(Fraction(x, r[0]) for x in r[1:]))
        else:
            recession.append(r[1:])
    if verts and recession:
        raise UnboundedError(
            f"polyhedron is unbounded along {list(recession[0])}",
            direction=tuple(Fraction(x) for x in recession[0]),
        )
    return _dedupe_sorted(verts)


def v_from_h(p):
    """Populate the vertex list from the inequality description."""
    if p.vertices is not None:
        return p
    verts = _vertex_enum(p.ineqs, p.dim)
    for v in verts:
        for a, b in p.ineqs:
            if dot(a, v) < b:
                raise CertificationError(f"computed vertex {v} violates {a} >= {b}")
    if verts:
        # irredundant: every vertex is cut out by rank-d tight inequalities
        for v in verts:
            tight = [a for a, b in p.ineqs if dot(a, v) == b]
            if rank(tight, p.dim) != p.dim:
                raise CertificationError(f"{v} is not a vertex")
    return QPolytope(p.dim, ineqs=p.ineqs, vertices=verts, bounds=p.bounds)


def h_from_v(p):
    """Populate an irredundant facet description of ``conv(vertices)``.

    Affine-span equations appear as pairs of opposite inequalities.
    """
    if p.ineqs is not None and p.vertices is not None:
        return p
    verts = vertices_of(p)
    if not verts:
        # 0 >= 1 is infeasible
        return QPolytope(p.dim, ineqs=(((Fraction(0),) * p.dim, Fraction(1)),), vertices=())
    h = _hull(verts)
    ineqs = []
    for c, e in h.equations:
        ineqs.append((c, e))
        ineqs.append((tuple(-x for x in c), -e))
    for a, b, _ in h.facets:
        ineqs.append((a, b))
    return QPolytope(p.dim, ineqs=tuple(ineqs), vertices=h.vertices, bounds=p.bounds)


def facets(p):
    """Irredundant facets ``(a, b, tight vertex indices)`` within the affine span."""
    verts = vertices_of(p)
    return _hull(verts).facets if verts else ()


def minkowski_sum(p, q):
    if p.dim != q.dim:
        raise DomainError(f"dimension mismatch: {p.dim} vs {q.dim}")
    vp, vq = vertices_of(p), vertices_of(q)
    if not vp or not vq:
        return QPolytope.empty(p.dim)
    pts = {tuple(x + y for x, y in zip(u, v)) for u in vp for v in vq}
    return QPolytope(p.dim, vertices=_hull(tuple(sorted(pts))).vertices)


def polytopes_equal(p, q):
    """Same point set, decided by comparing irredundant sorted vertex lists."""
    if p.dim != q.dim:
        return False
    return vertices_of(p) == vertices_of(q)


# ---------------------------------------------------------------------------
# triangulation, volume, integration


@lru_cache(maxsize=8192)
def _triangulate_points(points):
    h = _hull(points)
    if h.affdim <= 0:
        return (h.vertices,) if h.vertices else ()
    verts = h.vertices
    apex = verts[0]
    out = []
    for _, _, tight in h.facets:
        if 0 in tight:
            continue
        sub = tuple(sorted(verts[i] for i in tight))
        for s in _triangulate_points(sub):
            out.append((apex,) + s)
    return tuple(out)


def triangulate(p):
    """Deterministic pulling triangulation from the lex-smallest vertex."""
    verts = vertices_of(p)
    if not verts:
        return SimplexDecomposition(-1, ())
    return SimplexDecomposition(_hull(verts).affdim, _triangulate_points(verts))


class _SpanChart:
    """Coordinates on the affine span with respect to its induced lattice."""

    def __init__(self, verts):
        self.base = verts[0]
        d = len(self.base)
        diffs = [[x - y for x, y in zip(v, self.base)] for v in verts[1:]]
        self.basis = [tuple(Fraction(x) for x in b) for b in saturated_basis(diffs, d)]
        self.k = len(self.basis)
        _, self.cols = rref(self.basis, d)
        self.inv = inverse([[b[c] for c in self.cols] for b in self.basis])

    def to_chart(self, x):
        diff = [x[c] - self.base[c] for c in self.cols]
        return tuple(
            sum(diff[i] * self.inv[i][j] for i in range(self.k)) for j in range(self.k)
        )


def lattice_volume(p, dim=None):
    """Lattice-normalized volume of ``p`` in its affine span.

    With ``dim`` given, returns 0 when the polytope has smaller dimension.
    """
    verts = vertices_of(p)
    if not verts:
        return Fraction(0)
    k = _hull(verts).affdim
    if dim is not None:
        if k < dim:
            return Fraction(0)
        if k > dim:
            raise DomainError(f"polytope has dimension {k} > {dim}")
    if k == 0:
        return Fraction(1)
    chart = _SpanChart(verts)
    ys = tuple(sorted(chart.to_chart(v) for v in verts))
    total = Fraction(0)
    for s in _triangulate_points(ys):
        total += abs(det([[a - b for a, b in zip(y, s[0])] for y in s[1:]]))
    return total / factorial(k)


def _simplex_monomial_integrals(k):
    cache = {}

    def value(beta):
        if beta not in cache:
            cache[beta] = Fraction(prod(factorial(b) for b in beta), factorial(sum(beta) + k))
        return cache[beta]

    return value


def integrate(p, f):
    """Exact integral of ``f`` over ``p`` w.r.t. the lattice-normalized measure.

    A 0-dimensional polytope carries the counting measure.
    """
    if f.nvars != p.dim:
        raise DomainError(f"polynomial has {f.nvars} variables, polytope lives in R^{p.dim}")
    verts = vertices_of(p)
    if not verts:
        return Fraction(0)
    k = _hull(verts).affdim
    if k == 0:
        return f(verts[0])
    chart = _SpanChart(verts)
    back = {}
    for v in verts:
        back[chart.to_chart(v)] = v
    ys = tuple(sorted(back))
    mono = _simplex_monomial_integrals(k)
    total = Fraction(0)
    for s in _triangulate_points(ys):
        jac = abs(det([[a - b for a, b in zip(y, s[0])] for y in s[1:]]))
        X = [back[y] for y in s]
        # x = X0 + sum_i s_i (X_i - X0) on the standard simplex
        subs = []
        for j in range(p.dim):
            coeffs = [X[i + 1][j] - X[0][j] for i in range(k)]
            subs.append(MPoly.linear_form(coeffs, X[0][j]))
        g = f.substitute(subs)
        total += jac * sum(c * mono(beta) for beta, c in g.terms.items())
    return total


# ---------------------------------------------------------------------------
# lattice points


def _integer_box(p):
    if p.bounds is not None:
        return [tuple(b) for b in p.bounds]
    verts = vertices_of(p)
    if not verts:
        return None
    return [
        (ceil(min(v[i] for v in verts)), floor(max(v[i] for v in verts)))
        for i in range(p.dim)
    ]


def lattice_points(p, cap=DEFAULT_LATTICE_CAP):
    """Integer points of ``p`` in lexicographic order.

    Coordinates are scanned in order; each inequality is applied as soon as
    its last variable is assigned, which turns it into an interval bound.
    """
    box = _integer_box(p)
    if box is None:
        return []
    if p.dim == 0:
        return [()]
    if any(lo > hi for lo, hi in box):
        return []
    n_candidates = prod(hi - lo + 1 for lo, hi in box)
    if n_candidates > cap:
        raise CapExceededError(
            f"too many candidates: bounding box has {n_candidates} points (cap {cap})", cap
        )
    by_last = [[] for _ in range(p.dim)]
    for a, b in inequalities_of(p):
        nz = [i for i, x in enumerate(a) if x]
        if not nz:
            if b > 0:
                return []
            continue
        by_last[nz[-1]].append((a, b))

    out = []
    point = [0] * p.dim

    def rec(j):
        lo, hi = box[j]
        lo, hi = Fraction(lo), Fraction(hi)
        for a, b in by_last[j]:
            rest = b - sum(a[i] * point[i] for i in range(j))
            bound = rest / a[j]
            if a[j] > 0:
                lo = max(lo, bound)
            else:
                hi = min(hi, bound)
        for x in range(ceil(lo), floor(hi) + 1):
            point[j] = x
            if j + 1 == p.dim:
                out.append(tuple(point))
            else:
                rec(j + 1)

    rec(0)
    return out


def ehrhart_count(p, k, cap=DEFAULT_LATTICE_CAP):
    """Number of lattice points in the dilate ``k * p``."""
    if k < 0:
        raise DomainError("dilation factor must be nonnegative")
    if k == 0:
        return 0 if p.is_empty else 1
    return len(lattice_points(p.scale(k), cap=cap))


def basic_solution_vertices(p):
    """Vertices by brute force over all square subsystems.

    Independent of the double description route; used as a test oracle.
    """
    from itertools import combinations

    ineqs = list(p.ineqs)
    d = p.dim
    found = set()
    for subset in combinations(range(len(ineqs)), d):
        A = [list(ineqs[i][0]) for i in subset]
        if det(A) == 0:
            continue
        inv = inverse(A)
        bvec = [ineqs[i][1] for i in subset]
        x = tuple(sum(inv[r][c] * bvec[c] for c in range(d)) for r in range(d))
        if all(dot(a, x) >= b for a, b in ineqs):
            found.add(x)
    return tuple(sorted(found))
