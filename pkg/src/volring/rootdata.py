"""Root systems of types A, B, C, D in their standard Euclidean models.

Weights are stored in fundamental-weight coordinates ``c`` with
``lambda = sum c_i omega_i``; roots live in the ambient Euclidean space.
Every formula exposed here only uses ratios of pairings, so the
normalization of the invariant form is immaterial; ``pairing_scale``
exists so that this can be tested.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from ._linalg import dot, frac, frac_vector, inverse, matmul, solve
from .errors import CapExceededError, DomainError, UnsupportedError
from .polykernel import QPolytope

__all__ = [
    "RootSystem",
    "Weight",
    "WeylElement",
    "build_root_system",
    "weyl_group",
    "weyl_dimension",
    "weight_polytope",
    "sl2_tensor_decompose",
    "longest_element",
    "length_distribution",
    "inversion_count",
    "DEFAULT_WEYL_CAP",
]

DEFAULT_WEYL_CAP = 10_080


def _e(i, n, c=1):
    v = [Fraction(0)] * n
    v[i] = Fraction(c)
    return v


def _add(u, v, s=1):
    return tuple(a + s * b for a, b in zip(u, v))


@dataclass(frozen=True, eq=False)
class RootSystem:
    family: str
    rank: int
    ambient_dim: int
    simple_roots: tuple
    positive_roots: tuple
    fundamental_weights: tuple
    rho: tuple
    pairing_scale: Fraction = Fraction(1)
    cartan: tuple = field(default=(), repr=False)

    @property
    def name(self):
        return f"{self.family}{self.rank}"

    @property
    def num_positive_roots(self):
        return len(self.positive_roots)

    def pairing(self, u, v):
        return self.pairing_scale * dot(u, v)

    def coroot_pairing(self, x, alpha):
        """``<x, alpha^vee> = 2 <x, alpha> / <alpha, alpha>``."""
        return 2 * self.pairing(x, alpha) / self.pairing(alpha, alpha)

    def to_ambient(self, coords):
        coords = frac_vector(coords)
        if len(coords) != self.rank:
            raise DomainError(f"{self.name} weights have {self.rank} coordinates")
        out = [Fraction(0)] * self.ambient_dim
        for c, w in zip(coords, self.fundamental_weights):
            if c:
                out = [a + c * b for a, b in zip(out, w)]
        return tuple(out)

    def to_fundamental(self, x):
        """Fundamental-weight coordinates of an ambient vector in the root span."""
        return tuple(self.coroot_pairing(x, a) for a in self.simple_roots)

    def weight(self, *coords):
        if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
            coords = coords[0]
        return Weight(self, frac_vector(coords))

    def simple_root_coords(self, x):
        """Coefficients of ``x`` over the simple roots."""
        A = [list(col) for col in zip(*self.simple_roots)]
        sol = solve(A, list(x))
        if sol is None:
            raise DomainError("vector is not in the span of the roots")
        return tuple(sol)

    def reflection_matrix(self, i):
        """Simple reflection ``s_i`` on the ambient space."""
        a = self.simple_roots[i]
        n = self.ambient_dim
        aa = self.pairing(a, a)
        return tuple(
            tuple(
                Fraction(int(r == c)) - 2 * self.pairing_scale * a[r] * a[c] / aa
                for c in range(n)
            )
            for r in range(n)
        )

    def weight_reflection_matrix(self, i):
        """Simple reflection on fundamental-weight coordinates: ``c -> c - c_i alpha_i``."""
        r = self.rank
        rows = [[Fraction(int(a == b)) for b in range(r)] for a in range(r)]
        # alpha_i in weight coordinates is row i of the Cartan matrix
        for j in range(r):
            rows[j][i] -= self.cartan[i][j]
        return tuple(tuple(row) for row in rows)

    def to_json(self):
        def enc(vs):
            return [[str(x) for x in v] for v in vs]

        return {
            "family": self.family,
            "rank": self.rank,
            "ambient_dim": self.ambient_dim,
            "simple_roots": enc(self.simple_roots),
            "positive_roots": enc(self.positive_roots),
            "fundamental_weights": enc(self.fundamental_weights),
            "rho": [str(x) for x in self.rho],
            "cartan": enc(self.cartan),
        }


@dataclass(frozen=True)
class Weight:
    rs: RootSystem = field(repr=False, compare=False)
    coords: tuple

    @property
    def is_dominant(self):
        return all(c >= 0 for c in self.coords)

    @property
    def is_integral(self):
        return all(Fraction(c).denominator == 1 for c in self.coords)

    def ambient(self):
        return self.rs.to_ambient(self.coords)

    def __add__(self, other):
        return Weight(self.rs, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, k):
        k = frac(k)
        return Weight(self.rs, tuple(k * c for c in self.coords))

    __rmul__ = __mul__

    def star(self):
        """``-w0(lambda)``."""
        w0 = longest_element(self.rs)
        return Weight(self.rs, tuple(-x for x in w0.act(self.coords)))


@dataclass(frozen=True)
class WeylElement:
    word: tuple
    matrix: tuple          # ambient, orthogonal for the pairing
    weight_matrix: tuple   # on fundamental-weight coordinates, integral
    length: int

    def act(self, coords):
        return tuple(sum(m * c for m, c in zip(row, coords)) for row in self.weight_matrix)

    def act_ambient(self, x):
        return tuple(sum(m * c for m, c in zip(row, x)) for row in self.matrix)


def _standard_model(family, r):
    if family == "A":
        n = r + 1
        simple = [_add(_e(i, n), _e(i + 1, n), -1) for i in range(r)]
        positive = [_add(_e(i, n), _e(j, n), -1) for i in range(n) for j in range(i + 1, n)]
    elif family in ("B", "C", "D"):
        n = r
        simple = [_add(_e(i, n), _e(i + 1, n), -1) for i in range(r - 1)]
        positive = []
        for i in range(n):
            for j in range(i + 1, n):
                positive.append(_add(_e(i, n), _e(j, n), -1))
                positive.append(_add(_e(i, n), _e(j, n), 1))
        if family == "B":
            simple.append(tuple(_e(r - 1, n)))
            positive += [tuple(_e(i, n)) for i in range(n)]
        elif family == "C":
            simple.append(tuple(_e(r - 1, n, 2)))
            positive += [tuple(_e(i, n, 2)) for i in range(n)]
        else:
            simple.append(_add(_e(r - 2, n), _e(r - 1, n), 1))
    else:
        raise UnsupportedError(f"unsupported root system family {family!r}")
    return n, [tuple(s) for s in simple], [tuple(p) for p in positive]


def build_root_system(family, rank, pairing_scale=1):
    """Root system of type ``family`` (A/B/C/D) and the given rank."""
    family = str(family).upper()
    rank = int(rank)
    if family not in ("A", "B", "C", "D"):
        raise UnsupportedError(f"unsupported root system family {family!r}")
    if rank < 1:
        raise UnsupportedError(f"unsupported rank {rank} for type {family}")
    if family == "D" and rank < 3:
        raise UnsupportedError(f"unsupported: D{rank} (type D needs rank >= 3)")
    scale = frac(pairing_scale)
    if scale <= 0:
        raise DomainError("pairing scale must be positive")
    n, simple, positive = _standard_model(family, rank)

    def pair(u, v):
        return scale * dot(u, v)

    cartan = tuple(
        tuple(2 * pair(a, b) / pair(b, b) for b in simple) for a in simple
    )
    # omega_i = sum_j (A^-1)_{ij} alpha_j with alpha_i = sum_j A_ij omega_j
    inv = inverse([list(r) for r in cartan])
    fund = []
    for i in range(rank):
        w = [Fraction(0)] * n
        for j in range(rank):
            w = [x + inv[i][j] * y for x, y in zip(w, simple[j])]
        fund.append(tuple(w))

    A = [list(col) for col in zip(*simple)]

    def sort_key(root):
        coeffs = solve(A, list(root))
        return (sum(coeffs), tuple(-c for c in coeffs))

    positive = sorted(positive, key=sort_key)
    rho = tuple(sum(col) / 2 for col in zip(*positive))
    return RootSystem(
        family=family,
        rank=rank,
        ambient_dim=n,
        simple_roots=tuple(simple),
        positive_roots=tuple(positive),
        fundamental_weights=tuple(fund),
        rho=rho,
        pairing_scale=scale,
        cartan=cartan,
    )


_weyl_cache = {}


def weyl_group(rs, cap=DEFAULT_WEYL_CAP):
    """All Weyl group elements, by breadth-first closure over simple reflections.

    BFS depth equals the length, so each element's word is reduced.
    """
    key = (rs.family, rs.rank, rs.pairing_scale)
    if key in _weyl_cache and len(_weyl_cache[key]) <= cap:
        return _weyl_cache[key]
    n = rs.ambient_dim
    ident = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
    wident = tuple(tuple(Fraction(int(i == j)) for j in range(rs.rank)) for i in range(rs.rank))
    gens = [(rs.reflection_matrix(i), rs.weight_reflection_matrix(i)) for i in range(rs.rank)]
    elements = [WeylElement((), ident, wident, 0)]
    seen = {ident}
    frontier = [elements[0]]
    while frontier:
        nxt = []
        for w in frontier:
            for i, (s, ws) in enumerate(gens):
                m = tuple(tuple(r) for r in matmul(w.matrix, s))
                if m in seen:
                    continue
                seen.add(m)
                if len(seen) > cap:
                    raise CapExceededError(
                        f"group too large: Weyl group of {rs.name} exceeds cap {cap}", cap
                    )
                wm = tuple(tuple(r) for r in matmul(w.weight_matrix, ws))
                e = WeylElement(w.word + (i,), m, wm, w.length + 1)
                elements.append(e)
                nxt.append(e)
        frontier = nxt
    _weyl_cache[key] = elements
    return elements


def longest_element(rs):
    return max(weyl_group(rs), key=lambda w: w.length)


def inversion_count(rs, w):
    """Number of positive roots sent to negative roots by ``w``."""
    pos = set(rs.positive_roots)
    return sum(1 for a in rs.positive_roots if w.act_ambient(a) not in pos)


def length_distribution(rs, cap=DEFAULT_WEYL_CAP):
    """``[#{w : l(w) = d} for d = 0..N]``."""
    counts = Counter(w.length for w in weyl_group(rs, cap))
    return [counts[d] for d in range(max(counts) + 1)]


def _as_weight(rs, lam):
    if isinstance(lam, Weight):
        return lam
    return rs.weight(lam)


def weyl_dimension(rs, lam):
    """``prod_{alpha > 0} <lam + rho, alpha> / <rho, alpha>``."""
    lam = _as_weight(rs, lam)
    if not lam.is_dominant:
        raise DomainError(f"weight {lam.coords} is not dominant")
    x = _add(lam.ambient(), rs.rho)
    return prod(
        (rs.pairing(x, a) / rs.pairing(rs.rho, a) for a in rs.positive_roots),
        start=Fraction(1),
    )


def weight_polytope(rs, lam, cap=DEFAULT_WEYL_CAP):
    """Convex hull of the Weyl orbit of ``lam``, in fundamental-weight coordinates."""
    lam = _as_weight(rs, lam)
    if not lam.is_dominant:
        raise DomainError(f"weight {lam.coords} is not dominant")
    orbit = sorted({w.act(lam.coords) for w in weyl_group(rs, cap)})
    return QPolytope(rs.rank, vertices=tuple(orbit))


def sl2_tensor_decompose(a, b):
    """Clebsch-Gordan: ``V_a (x) V_b = V_|a-b| + V_|a-b|+2 + ... + V_a+b``.

    Returns a list of ``(highest_weight, multiplicity)``.
    """
    a, b = int(a), int(b)
    if a < 0 or b < 0:
        raise DomainError("SL2 highest weights are nonnegative")
    return [(k, 1) for k in range(abs(a - b), a + b + 1, 2)]
