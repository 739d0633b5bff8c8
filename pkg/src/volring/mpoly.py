"""Multivariate polynomials with exact rational coefficients.

Besides ring arithmetic this module provides the three operations the
rest of the package is built on: applying a polynomial as a constant
coefficient differential operator, recovering a homogeneous polynomial
from an evaluation oracle, and full polarization.
"""

from fractions import Fraction
from itertools import combinations
from math import comb, factorial, prod

from ._linalg import frac, solve
from .errors import CertificationError, DomainError

__all__ = [
    "MPoly",
    "monomials",
    "apply_diffop",
    "interpolate_homogeneous",
    "polarize",
    "sample_grid",
]


def monomials(nvars, degree):
    """Exponent vectors of the given degree in descending lex order.

    For ``nvars=2, degree=2`` this yields ``(2,0), (1,1), (0,2)``.
    """
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - first):
            yield (first,) + rest


def _grlex_key(exps):
    return (sum(exps), exps)


class MPoly:
    """Sparse polynomial in ``nvars`` variables over the rationals.

    ``terms`` maps exponent tuples to nonzero Fractions. Instances are
    treated as immutable values.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars, terms=None):
        self.nvars = int(nvars)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.nvars:
                raise DomainError(f"exponent {exps} does not have {self.nvars} entries")
            if any(e < 0 for e in exps):
                raise DomainError(f"negative exponent in {exps}")
            c = frac(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, i, nvars):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps, coef=1):
        return cls(len(exps), {tuple(exps): coef})

    @classmethod
    def linear_form(cls, coeffs, const=0):
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        if const:
            terms[(0,) * n] = const
        return cls(n, terms)

    # inspection

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, degree=None):
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            return False
        if degree is None or not degs:
            return True
        return degs == {degree}

    def homogeneous_part(self, d):
        return MPoly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def constant_value(self):
        if any(any(e) for e in self.terms):
            raise DomainError("polynomial is not constant")
        return self.terms.get((0,) * self.nvars, Fraction(0))

    # arithmetic

    def _check(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise DomainError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return MPoly.const(self.nvars, frac(other))

    def __add__(self, other):
        other = self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            c = frac(other)
            return MPoly(self.nvars, {e: c * v for e, v in self.terms.items()})
        other = self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = frac(c)
        return MPoly(self.nvars, {e: v / c for e, v in self.terms.items()})

    def __pow__(self, k):
        if k < 0:
            raise DomainError("negative power")
        result = MPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        try:
            return self == MPoly.const(self.nvars, frac(other))
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        if len(point) != self.nvars:
            raise DomainError(f"expected {self.nvars} coordinates, got {len(point)}")
        point = [frac(x) if not isinstance(x, MPoly) else x for x in point]
        if any(isinstance(x, MPoly) for x in point):
            return self.substitute(point)
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * prod(x**k for x, k in zip(point, e))
        return total

    def substitute(self, polys):
        """Compose with ``polys`` (one MPoly per variable, all in the same ring)."""
        if len(polys) != self.nvars:
            raise DomainError("substitution needs one polynomial per variable")
        target = polys[0].nvars if polys else 0
        result = MPoly.zero(target)
        cache = {}
        for e, c in self.terms.items():
            term = MPoly.const(target, c)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = polys[i] ** k
                    term = term * cache[key]
            result = result + term
        return result

    def derivative(self, i, times=1):
        terms = {}
        for e, c in self.terms.items():
            if e[i] >= times:
                ne = list(e)
                ne[i] -= times
                terms[tuple(ne)] = c * (factorial(e[i]) // factorial(e[i] - times))
        return MPoly(self.nvars, terms)

    def __repr__(self):
        if not self.terms:
            return f"MPoly({self.nvars}, 0)"
        return f"MPoly({self.nvars}, {self.to_str()})"

    def to_str(self, names=None):
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # serialization

    def to_json(self):
        return {
            "nvars": self.nvars,
            "terms": [
                {"exps": list(e), "coef": str(c)} for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            data["nvars"], {tuple(t["exps"]): frac(t["coef"]) for t in data["terms"]}
        )


def apply_diffop(f, P):
    """``f(d/dx_1, ..., d/dx_r)`` applied to ``P``."""
    if f.nvars != P.nvars:
        raise DomainError(f"variable count mismatch: {f.nvars} vs {P.nvars}")
    terms = {}
    for beta, c in f.terms.items():
        for alpha, a in P.terms.items():
            if all(b <= x for b, x in zip(beta, alpha)):
                scale = prod(factorial(x) // factorial(x - b) for x, b in zip(alpha, beta))
                e = tuple(x - b for x, b in zip(alpha, beta))
                terms[e] = terms.get(e, 0) + c * a * scale
    return MPoly(P.nvars, terms)


def sample_grid(nvars, degree, level=0):
    """Points with positive integer coordinates summing to ``degree + nvars + level``.

    At ``level=0`` this is the principal lattice of a simplex, which is
    unisolvent for homogeneous forms of the given degree.
    """
    total = degree + level
    return [tuple(e + 1 for e in beta) for beta in monomials(nvars, total)]


def interpolate_homogeneous(nvars, degree, oracle, n_certify=10):
    """Recover the homogeneous degree-``degree`` polynomial agreeing with ``oracle``.

    The oracle is sampled on :func:`sample_grid` and the result is checked
    on ``n_certify`` further points; a mismatch raises CertificationError.
    """
    basis = list(monomials(nvars, degree))
    points = sample_grid(nvars, degree)
    A = [[prod(Fraction(x) ** k for x, k in zip(p, e)) for e in basis] for p in points]
    b = [frac(oracle(p)) for p in points]
    coeffs = solve(A, b)
    if coeffs is None:
        raise CertificationError("singular interpolation system")
    P = MPoly(nvars, dict(zip(basis, coeffs)))

    extra = []
    level = 1
    while len(extra) < n_certify and nvars > 0:
        extra.extend(sample_grid(nvars, degree, level))
        level += 1
        if level > degree + n_certify + 2:
            break
    for p in extra[:n_certify]:
        got, want = P(p), frac(oracle(p))
        if got != want:
            raise CertificationError(
                f"oracle not polynomial of degree {degree}: at {p} expected {want}, got {got}"
            )
    return P


def polarize(P, vectors):
    """Full polarization ``M(v_1, ..., v_n)`` of a homogeneous degree-n polynomial.

    ``M(v, ..., v) == P(v)``; computed by inclusion-exclusion over subsets.
    """
    n = P.degree
    if not P.is_homogeneous():
        raise DomainError("polarization needs a homogeneous polynomial")
    if P.is_zero():
        return Fraction(0)
    if len(vectors) != n:
        raise DomainError(f"need {n} vectors, got {len(vectors)}")
    vecs = [tuple(frac(x) for x in v) for v in vectors]
    total = Fraction(0)
    for k in range(1, n + 1):
        sign = (-1) ** (n - k)
        for S in combinations(range(n), k):
            point = [sum(vecs[i][j] for i in S) for j in range(P.nvars)]
            total += sign * P(point)
    return total / factorial(n)


def num_monomials(nvars, degree):
    if nvars == 0:
        return int(degree == 0)
    return comb(degree + nvars - 1, nvars - 1)
