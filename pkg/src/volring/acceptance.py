"""The acceptance suite: twelve exact checks run by ``volring selftest``."""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial

from .apolarity import annihilator_presentation, ideals_equal, pairing_rank
from .flagring import (
    GLnWeight,
    brion_degree_integral,
    flag_cohomology,
    flag_degree_closed_form,
    flag_volume_polynomial,
    gc_additivity_check,
    gc_dimension_check,
    gc_polytope,
    kostant_check,
)
from .momentlab import sl2_additivity_counterexample, sl2_diag_moment, weight_polytope_sum_check
from .mpoly import MPoly, apply_diffop, monomials
from .polykernel import (
    DEFAULT_LATTICE_CAP,
    QPolytope,
    ehrhart_count,
    h_from_v,
    integrate,
    lattice_volume,
    minkowski_sum,
    polytopes_equal,
    vertices_of,
)
from .rootdata import DEFAULT_WEYL_CAP, build_root_system, length_distribution, weyl_dimension
from .toricring import (
    combine_divisors,
    h_vector_check,
    kushnirenko_check,
    moment_from_divisor,
    preset,
    shift_divisor,
    toric_additivity_check,
    toric_cohomology,
    toric_volume_polynomial,
)

__all__ = ["Criterion", "CRITERIA", "run_acceptance", "run_criterion"]

TORIC_PRESETS = ("P2", "P1xP1", "Hirzebruch(1)")


@dataclass
class Criterion:
    number: int
    name: str
    ok: bool
    detail: str

    def to_json(self):
        return {"number": self.number, "name": self.name, "ok": self.ok, "detail": self.detail}

    def line(self):
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.number:2d}. {self.name}: {self.detail}"


class _Caps:
    lattice = DEFAULT_LATTICE_CAP
    weyl = DEFAULT_WEYL_CAP


def _segment(p):
    return [str(v[0]) for v in vertices_of(p)]


def c1_sl2_counterexample(caps):
    got = {ab: _segment(sl2_diag_moment(*ab)) for ab in [(2, 1), (1, 2), (3, 3)]}
    want = {(2, 1): ["1", "3"], (1, 2): ["1", "3"], (3, 3): ["0", "6"]}
    rep = sl2_additivity_counterexample()
    lhs = _segment(rep.polytopes["lhs"])
    rhs = _segment(rep.polytopes["rhs"])
    w = rep.witness
    ok = (
        got == want
        and lhs == ["2", "6"]
        and rhs == ["0", "6"]
        and not rep.equal
        and w is not None
        and w["point"] == [0]
        and w["belongs_to"] == "rhs"
    )
    point = [str(x) for x in w["point"]] if w else None
    return ok, f"moments {[got[k] for k in want]}, sum {lhs} vs {rhs}, witness {point}"


def c2_gc_dimension(caps):
    weights = [(a, b) for a in range(5) for b in range(a + 1)]
    weights += [(a, b, c) for a in range(4) for b in range(a + 1) for c in range(b + 1)]
    weights += [(1, 0, 0, 0), (1, 1, 0, 0), (2, 1, 0, 0)]
    bad = []
    for lam in weights:
        res = gc_dimension_check(lam, cap=caps.lattice)
        if not res.equal:
            bad.append((lam, res.count, res.dim))
    special = gc_dimension_check((2, 1, 0), cap=caps.lattice)
    ok = not bad and special.count == 8
    return ok, f"{len(weights)} weights, mismatches {bad}, (2,1,0) -> {special.count}"


def _n_vol(lam):
    g = gc_polytope(lam).polytope
    N = g.dim
    return factorial(N) * lattice_volume(g, dim=N)


def c3_degree_volume(caps):
    A2 = build_root_system("A", 2)
    A3 = build_root_system("A", 3)
    base = _n_vol((2, 1, 0))
    ok = base == 6 == flag_degree_closed_form(A2, (1, 1))
    cases = [(3, 1, 0), (3, 2, 0), (3, 2, 1), (4, 2, 0), (5, 3, 1), (3, 2, 1, 0), (4, 2, 1, 0)]
    bad = []
    for lam in cases:
        w = GLnWeight(lam).to_weight()
        rs = A2 if len(lam) == 3 else A3
        if _n_vol(lam) != flag_degree_closed_form(rs, w):
            bad.append(lam)
    return ok and not bad, f"3!vol(2,1,0) = {base}, mismatches among {len(cases)} weights: {bad}"


def c4_ehrhart(caps):
    bad = []
    weights = [(2, 1, 0), (1, 1, 0), (2, 0, 0)]
    for lam in weights:
        g = gc_polytope(lam).polytope
        w = GLnWeight(lam).to_weight()
        for k in (1, 2, 3):
            if ehrhart_count(g, k, cap=caps.lattice) != weyl_dimension(w.rs, w * k):
                bad.append((lam, k))
    return not bad, f"{len(weights)} weights x k=1,2,3, mismatches {bad}"


def c5_flag_hilbert(caps):
    expected = {
        ("A", 1): (1, 1),
        ("A", 2): (1, 2, 2, 1),
        ("A", 3): (1, 3, 5, 6, 5, 3, 1),
        ("B", 2): (1, 2, 2, 2, 1),
    }
    parts, ok = [], True
    for (fam, r), want in expected.items():
        rs = build_root_system(fam, r)
        pres = flag_cohomology(rs, caps.weyl)
        P = flag_volume_polynomial(rs)
        ranks = tuple(pairing_rank(P, d, pres) for d in range(len(want)))
        good = (
            pres.hilbert == want
            and tuple(length_distribution(rs, caps.weyl)) == want
            and ranks == want
        )
        ok = ok and good
        parts.append(f"{fam}{r} {list(pres.hilbert)}")
    return ok, ", ".join(parts)


def c6_kostant(caps):
    res = {f"{f}{r}": kostant_check(build_root_system(f, r), caps.weyl) for f, r in [("A", 1), ("A", 2), ("B", 2)]}
    return all(res.values()), str(res)


def c7_toric_rings(caps):
    expected = {"P2": (1, 1, 1), "P1xP1": (1, 2, 1), "Hirzebruch(1)": (1, 2, 1)}
    choices = {"P2": [(1,), (2,), (3,)], "P1xP1": [(1, 1), (2, 1), (1, 3)],
               "Hirzebruch(1)": [(1, 1), (2, 1), (0, 2)]}
    ok, parts = True, []
    for name, want in expected.items():
        fam = preset(name)
        pres = toric_cohomology(fam)
        P = toric_volume_polynomial(fam)
        hv = h_vector_check(fam, pres)
        kus = [kushnirenko_check(fam, x, P) for x in choices[name]]
        good = pres.hilbert == want and hv.ok and all(k.ok for k in kus)
        if name == "P1xP1":
            t1, t2 = MPoly.var(0, 2), MPoly.var(1, 2)
            good = good and ideals_equal(pres.generators(), [t1 ** 2, t2 ** 2], 2, nvars=2)
        ok = ok and good
        parts.append(f"{name} {list(pres.hilbert)} h={hv.rhs}")
    return ok, ", ".join(parts)


_ADDITIVITY_PAIRS = {
    1: [((1,), (1,)), ((1,), (2,)), ((0,), (3,)), ((2,), (5,)), ((4,), (1,))],
    2: [((1, 0), (0, 1)), ((1, 1), (2, 1)), ((0, 1), (0, 2)), ((3, 1), (1, 2)), ((1, 0), (1, 0))],
}


def c8_toric_additivity(caps):
    bad, total = [], 0
    for name in TORIC_PRESETS:
        fam = preset(name)
        for i, (x, y) in enumerate(_ADDITIVITY_PAIRS[fam.num_basis]):
            a, b = combine_divisors(fam, x), combine_divisors(fam, y)
            if i == 4:
                # a linearly equivalent representative, shifted by an integral m
                a = shift_divisor(fam, a, (1, -2))
            total += 1
            if not toric_additivity_check(fam, a, b):
                bad.append((name, x, y))
    return not bad, f"{total} pairs, failures {bad}"


def c9_gc_additivity(caps):
    weights = [(1, 0, 0), (1, 1, 0), (2, 1, 0)]
    pairs = list(combinations_with_replacement(weights, 2))
    bad = [(l, m) for l, m in pairs if not gc_additivity_check(l, m)]
    return not bad, f"{len(pairs)} pairs, failures {bad}"


def c10_weight_slices(caps):
    cases = [
        ("A", 1, [((1,), (1,)), ((1,), (2,)), ((0,), (3,))]),
        ("A", 2, [((1, 0), (0, 1)), ((1, 1), (1, 0)), ((2, 0), (0, 1))]),
        ("B", 2, [((1, 0), (1, 1)), ((0, 1), (1, 0))]),
    ]
    bad, total = [], 0
    for fam, r, pairs in cases:
        rs = build_root_system(fam, r)
        for l1, l2 in pairs:
            total += 1
            if not weight_polytope_sum_check(rs, l1, l2, caps.weyl):
                bad.append((f"{fam}{r}", l1, l2))
    return not bad, f"{total} pairs, failures {bad}"


def c11_brion(caps):
    ok, parts = True, []
    for name in TORIC_PRESETS:
        fam = preset(name)
        n = fam.dim
        x = [1] * fam.num_basis
        mu = moment_from_divisor(fam, combine_divisors(fam, x))
        lhs = brion_degree_integral(mu, None, n)
        vol = factorial(n) * lattice_volume(mu, dim=n)
        P = toric_volume_polynomial(fam)
        good = lhs == vol == factorial(n) * P(x)
        ok = ok and good
        parts.append(f"{name} {lhs}")
    A2 = build_root_system("A", 2)
    for k in (1, 2):
        lam = (k, k)
        lhs = brion_degree_integral(QPolytope.point(lam), A2, 3)
        rhs = flag_degree_closed_form(A2, lam)
        ok = ok and lhs == rhs
        parts.append(f"A2 {k}rho {lhs}={rhs}")
    return ok, ", ".join(parts)


def _random_points(rng, d, count, span=4):
    return [tuple(rng.randint(-span, span) for _ in range(d)) for _ in range(count)]


def _random_polytope(rng, d):
    while True:
        p = QPolytope.from_points(_random_points(rng, d, rng.randint(d + 1, d + 5)))
        if p.affine_dim() == d:
            return p


def _random_form(rng, nvars, degree):
    while True:
        terms = {m: Fraction(rng.randint(-3, 3)) for m in monomials(nvars, degree) if rng.random() < 0.6}
        P = MPoly(nvars, terms)
        if not P.is_zero():
            return P


def c12_properties(caps, instances=20, seed=20240611):
    rng = random.Random(seed)
    failures = {}

    def record(name, ok):
        failures.setdefault(name, 0)
        if not ok:
            failures[name] += 1

    for _ in range(instances):
        d = rng.choice([1, 2, 3])
        p = _random_polytope(rng, d)
        h = h_from_v(p)
        back = QPolytope(d, ineqs=h.ineqs)
        record("roundtrip", polytopes_equal(back, p) and polytopes_equal(QPolytope(d, vertices=vertices_of(back)), p))

        q, s = _random_polytope(rng, d), _random_polytope(rng, d)
        record(
            "minkowski-assoc",
            polytopes_equal(minkowski_sum(minkowski_sum(p, q), s), minkowski_sum(p, minkowski_sum(q, s))),
        )

        k = rng.randint(0, 4)
        record("volume-scaling", lattice_volume(p.scale(k), dim=d) == k ** d * lattice_volume(p))
        record("integrate-one", integrate(p, MPoly.const(d, 1)) == lattice_volume(p))

        nv, deg = rng.randint(1, 3), rng.randint(1, 4)
        P = _random_form(rng, nv, deg)
        pres = annihilator_presentation(P)
        record("hilbert-symmetry", pres.hilbert == pres.hilbert[::-1] and pres.hilbert[0] == 1)

        f = _random_form(rng, nv, rng.randint(0, 2))
        g = _random_form(rng, nv, rng.randint(0, 2))
        record("diffop-composition", apply_diffop(f * g, P) == apply_diffop(f, apply_diffop(g, P)))

    ok = all(v == 0 for v in failures.values())
    return ok, f"{instances} instances each, failures {failures}"


CRITERIA = [
    (1, "SL2 additivity counterexample", c1_sl2_counterexample),
    (2, "GC lattice points = Weyl dimension", c2_gc_dimension),
    (3, "degree = N! volume", c3_degree_volume),
    (4, "Ehrhart = Hilbert", c4_ehrhart),
    (5, "flag Hilbert = Weyl lengths, nondegenerate pairing", c5_flag_hilbert),
    (6, "Ann(P) = W-invariant ideal", c6_kostant),
    (7, "toric rings", c7_toric_rings),
    (8, "toric additivity", c8_toric_additivity),
    (9, "GC additivity", c9_gc_additivity),
    (10, "weight-polytope slice sum", c10_weight_slices),
    (11, "degree integral specializations", c11_brion),
    (12, "property suite", c12_properties),
]


def run_criterion(number, cap_lattice=None, cap_weyl=None):
    caps = _Caps()
    if cap_lattice is not None:
        caps.lattice = cap_lattice
    if cap_weyl is not None:
        caps.weyl = cap_weyl
    num, name, fn = CRITERIA[number - 1]
    try:
        ok, detail = fn(caps)
    except Exception as exc:  # a crash is a failed criterion, reported with its cause
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return Criterion(num, name, bool(ok), detail)


def run_acceptance(cap_lattice=None, cap_weyl=None):
    return [run_criterion(n, cap_lattice, cap_weyl) for n, _, _ in CRITERIA]
