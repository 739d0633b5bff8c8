"""Graded algebras ``k[t_1..t_r] / Ann(P)`` from a homogeneous form ``P``.

The ideal consists of all ``f`` with ``f(d/dx) P = 0``. Each graded piece
is computed independently as the kernel of the exact linear map
``f -> f(d/dx) P`` from degree-d forms to degree-(n-d) forms.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from ._linalg import EchelonSpan, nullspace, rank, solve
from .errors import DomainError, PresentationMismatch
from .mpoly import MPoly, apply_diffop, monomials

__all__ = [
    "GradedAlgebraPresentation",
    "annihilator_presentation",
    "pairing_rank",
    "normal_form",
    "ideals_equal",
    "ideal_slice",
]


@dataclass(frozen=True)
class GradedAlgebraPresentation:
    """Presentation of ``A = k[t] / I`` with socle degree ``n``.

    ``basis[d]`` lists exponent tuples whose cosets form a basis of
    ``A_d``; ``ideal_gens[d]`` lists minimal generators of ``I`` in degree
    ``d`` (only nonempty degrees appear, up to ``n + 1``). ``A_d = 0`` for
    every ``d > n``.
    """

    nvars: int
    socle_degree: int
    hilbert: tuple
    ideal_gens: dict = field(default_factory=dict)
    basis: dict = field(default_factory=dict)
    _images: dict = field(default_factory=dict, repr=False, compare=False)

    def to_json(self):
        return {
            "nvars": self.nvars,
            "socle_degree": self.socle_degree,
            "hilbert": list(self.hilbert),
            "gens": {
                str(d): [g.to_json() for g in self.ideal_gens[d]]
                for d in sorted(self.ideal_gens)
            },
            "basis": {
                str(d): [list(m) for m in self.basis[d]] for d in sorted(self.basis)
            },
        }

    def generators(self):
        return [g for d in sorted(self.ideal_gens) for g in self.ideal_gens[d]]


def _check_form(P):
    if P.is_zero():
        raise DomainError("the zero polynomial has no annihilator presentation")
    if not P.is_homogeneous():
        raise DomainError("P must be homogeneous")


def _diff_matrix(P, d):
    """Columns: images ``m(d/dx) P`` of degree-d monomials, as coefficient vectors."""
    n = P.degree
    src = list(monomials(P.nvars, d))
    tgt = list(monomials(P.nvars, n - d))
    index = {m: i for i, m in enumerate(tgt)}
    cols = []
    for m in src:
        img = apply_diffop(MPoly.monomial(m), P)
        v = [Fraction(0)] * len(tgt)
        for e, c in img.terms.items():
            v[index[e]] = c
        cols.append(v)
    return src, tgt, cols


def ideal_slice(gens, nvars, d):
    """Coefficient rows spanning the degree-d part of the ideal generated by ``gens``."""
    mons = list(monomials(nvars, d))
    index = {m: i for i, m in enumerate(mons)}
    rows = []
    for g in gens:
        if g.is_zero() or g.degree > d:
            continue
        if not g.is_homogeneous():
            raise DomainError("ideal generators must be homogeneous")
        for m in monomials(nvars, d - g.degree):
            v = [Fraction(0)] * len(mons)
            for e, c in (g * MPoly.monomial(m)).terms.items():
                v[index[e]] = c
            rows.append(v)
    return mons, rows


def annihilator_presentation(P, n=None):
    """Hilbert function, minimal generators and a monomial basis of ``k[t]/Ann(P)``."""
    _check_form(P)
    if n is None:
        n = P.degree
    if P.degree != n:
        raise DomainError(f"P has degree {P.degree}, expected {n}")
    r = P.nvars
    hilbert = []
    gens = {}
    basis = {}
    images = {}
    lower = []
    for d in range(n + 2):
        mons = list(monomials(r, d))
        if d <= n:
            src, _, cols = _diff_matrix(P, d)
            # kernel of the map (columns indexed by monomials)
            rows = [list(row) for row in zip(*cols)]
            kernel = nullspace(rows, len(src))
            h = len(src) - len(kernel)
            hilbert.append(h)
            # basis monomials: greedy from the smallest in graded-lex order
            span = EchelonSpan(len(cols[0]))
            chosen = []
            for i in reversed(range(len(src))):
                if span.add(cols[i]):
                    chosen.append(i)
            chosen.sort()
            basis[d] = [src[i] for i in chosen]
            images[d] = (src, [cols[i] for i in chosen])
            kernel_polys = [
                MPoly(r, {m: c for m, c in zip(src, v) if c}) for v in kernel
            ]
        else:
            # every form of degree n+1 annihilates P
            kernel_polys = [MPoly.monomial(m) for m in mons]
        _, lower_rows = ideal_slice(lower, r, d)
        span = EchelonSpan(len(mons))
        for row in lower_rows:
            span.add(row)
        new = []
        index = {m: i for i, m in enumerate(mons)}
        for g in kernel_polys:
            v = [Fraction(0)] * len(mons)
            for e, c in g.terms.items():
                v[index[e]] = c
            if span.add(v):
                new.append(g)
        if new:
            gens[d] = new
            lower.extend(new)

    pres = GradedAlgebraPresentation(
        nvars=r,
        socle_degree=n,
        hilbert=tuple(hilbert),
        ideal_gens=gens,
        basis=basis,
        _images=images,
    )
    if hilbert[0] != 1 or hilbert[n] != 1:
        raise PresentationMismatch(f"A_0 and A_n must be 1-dimensional, got {hilbert}")
    if hilbert != hilbert[::-1]:
        raise PresentationMismatch(f"Hilbert function {hilbert} is not symmetric")
    return pres


def pairing_rank(P, d, pres=None):
    """Rank of the multiplication pairing ``A_d x A_{n-d} -> A_n``.

    Entries are the constants ``(m m')(d/dx) P`` over basis monomials.
    """
    _check_form(P)
    n = P.degree
    if not 0 <= d <= n:
        raise DomainError(f"degree {d} outside 0..{n}")
    if pres is None:
        pres = annihilator_presentation(P, n)
    left, right = pres.basis[d], pres.basis[n - d]
    M = []
    for m in left:
        row = []
        for mm in right:
            e = tuple(a + b for a, b in zip(m, mm))
            row.append(apply_diffop(MPoly.monomial(e), P).constant_value())
        M.append(row)
    return rank(M, len(right)) if M else 0


def normal_form(f, pres, P):
    """Representative of ``f + I`` in the span of the basis monomials."""
    if f.nvars != pres.nvars:
        raise DomainError("variable count mismatch")
    result = MPoly.zero(f.nvars)
    n = pres.socle_degree
    for d in sorted({sum(e) for e in f.terms}):
        if d > n:
            continue
        part = f.homogeneous_part(d)
        img = apply_diffop(part, P)
        if img.is_zero():
            continue
        tgt = list(monomials(P.nvars, n - d))
        vec = [img.coefficient(m) for m in tgt]
        cols = _basis_images(pres, P, d)
        A = [list(row) for row in zip(*cols)]
        coeffs = solve(A, vec)
        if coeffs is None:
            raise PresentationMismatch("image of f lies outside the span of the basis")
        result = result + MPoly(
            f.nvars, {m: c for m, c in zip(pres.basis[d], coeffs) if c}
        )
    return result


def _basis_images(pres, P, d):
    if d in pres._images:
        return pres._images[d][1]
    return [
        [apply_diffop(MPoly.monomial(m), P).coefficient(e)
         for e in monomials(P.nvars, pres.socle_degree - d)]
        for m in pres.basis[d]
    ]


def ideals_equal(gens1, gens2, n, nvars=None):
    """Do two homogeneous generator lists produce the same ideal in degrees ``<= n + 1``?"""
    all_gens = list(gens1) + list(gens2)
    if nvars is None:
        if not all_gens:
            return True
        nvars = all_gens[0].nvars
    for d in range(n + 2):
        _, rows1 = ideal_slice(gens1, nvars, d)
        _, rows2 = ideal_slice(gens2, nvars, d)
        ncols = len(list(monomials(nvars, d)))
        r1 = rank(rows1, ncols) if rows1 else 0
        r2 = rank(rows2, ncols) if rows2 else 0
        if r1 != r2:
            return False
        if r1 and rank(rows1 + rows2, ncols) != r1:
            return False
    return True
