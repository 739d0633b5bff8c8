"""Command-line entry point.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 for usage and input errors.
"""

import argparse
import json
import sys
from math import factorial
from pathlib import Path

from . import acceptance
from .apolarity import annihilator_presentation, pairing_rank
from .errors import (
    CapExceededError,
    CertificationError,
    DomainError,
    PresentationMismatch,
    UnboundedError,
    UnsupportedError,
)
from .flagring import (
    GLnWeight,
    flag_cohomology,
    flag_degree_closed_form,
    flag_volume_polynomial,
    gc_additivity_check,
    gc_dimension_check,
    gc_polytope,
    kostant_check,
)
from .momentlab import (
    group_compactification_moment,
    sl2_additivity_counterexample,
    sl2_additivity_report,
    weight_sum_report,
)
from .mpoly import MPoly
from .polykernel import DEFAULT_LATTICE_CAP, lattice_volume, v_from_h, vertices_of
from .report import CheckResult, Report, dumps
from .rootdata import DEFAULT_WEYL_CAP, build_root_system, length_distribution
from .toricring import (
    ToricFamily,
    h_vector_check,
    preset,
    toric_cohomology,
    toric_volume_polynomial,
)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2

MOMENT_EXAMPLES = ("sl2-counterexample", "sl2-additivity", "weight-sum", "group-compactification")


class UsageError(Exception):
    pass


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("caps must be positive")
    return value


def _int_list(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = [int(x) for x in text.replace(",", " ").split()]
    if isinstance(data, int):
        data = [data]
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise argparse.ArgumentTypeError(f"expected a list of integers, got {text!r}")
    return data


def _load_json(text):
    """Inline JSON, or the contents of a file path (optionally prefixed with @)."""
    candidate = text[1:] if text.startswith("@") else text
    path = Path(candidate)
    try:
        if text.startswith("@") or (not text.lstrip().startswith(("{", "[")) and path.exists()):
            return json.loads(path.read_text())
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON input: {exc}") from None


# ---------------------------------------------------------------------------
# commands


def cmd_flag_ring(family, rank, cap_weyl=DEFAULT_WEYL_CAP):
    rs = build_root_system(family, rank)
    rep = Report("flag-ring", inputs={"type": rs.family, "rank": rs.rank})
    P = flag_volume_polynomial(rs)
    rep.polynomial = P
    N = rs.num_positive_roots
    lengths = length_distribution(rs, cap_weyl)
    try:
        pres = flag_cohomology(rs, cap_weyl)
    except PresentationMismatch as exc:
        pres = annihilator_presentation(P, N)
        rep.add(CheckResult("hilbert = Weyl lengths", False, list(pres.hilbert), lengths, str(exc)))
    else:
        rep.add(CheckResult("hilbert = Weyl lengths", True, list(pres.hilbert), lengths))
    rep.presentation = pres
    ranks = [pairing_rank(P, d, pres) for d in range(N + 1)]
    rep.add(CheckResult("pairing nondegenerate", ranks == list(pres.hilbert), ranks, list(pres.hilbert)))
    rho = tuple([1] * rs.rank)
    rep.add(CheckResult("N! P(rho) = degree", factorial(N) * P(rho) == flag_degree_closed_form(rs, rho),
                        factorial(N) * P(rho), flag_degree_closed_form(rs, rho)))
    if rs.rank <= 3:
        ok = kostant_check(rs, cap_weyl)
        rep.add(CheckResult("Ann(P) = ideal of W-invariants", ok, ok, True))
    return rep


def cmd_toric_ring(fam):
    rep = Report("toric-ring", inputs={"family": fam.name, "data": fam.to_json()})
    P = toric_volume_polynomial(fam)
    rep.polynomial = P
    pres = toric_cohomology(fam)
    rep.presentation = pres
    ranks = [pairing_rank(P, d, pres) for d in range(fam.dim + 1)]
    rep.add(CheckResult("pairing nondegenerate", ranks == list(pres.hilbert), ranks, list(pres.hilbert)))
    rep.add(h_vector_check(fam, pres))
    return rep


def cmd_gc(parts, add=None, cap_lattice=DEFAULT_LATTICE_CAP):
    lam = GLnWeight(parts)
    if not lam.is_integral:
        raise DomainError("gc expects an integral weight")
    gc = gc_polytope(lam)
    poly = v_from_h(gc.polytope)
    rep = Report("gc", inputs={"lambda": list(parts)}, polytopes={"gc": poly})
    if add is not None:
        rep.inputs["mu"] = list(add)
    if lam.n >= 2:
        res = gc_dimension_check(lam, cap=cap_lattice)
        rep.add(CheckResult("lattice points = Weyl dimension", res.equal, res.count, res.dim))
        N = poly.dim
        nvol = factorial(N) * lattice_volume(poly, dim=N)
        deg = flag_degree_closed_form(lam.root_system(), lam.to_weight())
        rep.add(CheckResult("N! volume = degree", nvol == deg, nvol, deg))
    if add is not None:
        ok = gc_additivity_check(lam, GLnWeight(add))
        rep.add(CheckResult("additivity", ok, ok, True))
    return rep


def _moment_report(command_inputs, mrep, check):
    rep = Report("moment", inputs=command_inputs, polytopes=dict(mrep.polytopes))
    rep.extra = {"equal": mrep.equal, "witness": mrep.witness}
    rep.add(check)
    return rep


def cmd_moment(example, params=None, family=None, rank=None, weights=None, cap_weyl=DEFAULT_WEYL_CAP):
    params = params or []
    if example == "sl2-counterexample":
        mrep = sl2_additivity_counterexample()
        w = mrep.witness
        reproduced = (not mrep.equal) and w is not None and w["point"] == [0]
        check = CheckResult("counterexample reproduced", reproduced, mrep.equal, False,
                            "Minkowski sum of the moment polytopes differs from the moment polytope of the sum")
        return _moment_report({"example": example}, mrep, check)
    if example == "sl2-additivity":
        if len(params) != 4:
            raise UsageError("sl2-additivity needs --params a1 b1 a2 b2")
        a1, b1, a2, b2 = params
        mrep = sl2_additivity_report((a1, b1), (a2, b2))
        return _moment_report({"example": example, "params": params}, mrep,
                              CheckResult("additivity", mrep.equal, mrep.equal, True))
    if example == "weight-sum":
        if family is None or rank is None:
            raise UsageError("weight-sum needs --type and --rank")
        rs = build_root_system(family, rank)
        if len(params) != 2 * rs.rank:
            raise UsageError(f"weight-sum needs --params with {2 * rs.rank} integers (two weights)")
        l1, l2 = params[: rs.rank], params[rs.rank:]
        mrep = weight_sum_report(rs, l1, l2, cap_weyl)
        return _moment_report({"example": example, "type": rs.family, "rank": rs.rank,
                               "lambda1": l1, "lambda2": l2}, mrep,
                              CheckResult("slice additivity", mrep.equal, mrep.equal, True))
    if example == "group-compactification":
        if weights is None:
            # SL2 adjoint representation
            family, rank, weights = "A", 1, [[-2], [0], [2]]
        if family is None or rank is None:
            raise UsageError("group-compactification with --weights needs --type and --rank")
        rs = build_root_system(family, rank)
        poly = group_compactification_moment(rs, weights, cap_weyl)
        inside = all(x >= 0 for v in vertices_of(poly) for x in v)
        rep = Report("moment", inputs={"example": example, "type": rs.family, "rank": rs.rank,
                                       "weights": weights}, polytopes={"moment": poly})
        rep.add(CheckResult("inside doubled dominant chamber", inside, inside, True))
        return rep
    raise UsageError(f"unknown moment example {example!r}")


def cmd_apolarity(data):
    try:
        P = MPoly.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad polynomial JSON: {exc}") from None
    pres = annihilator_presentation(P)
    rep = Report("apolarity", inputs={"P": P}, polynomial=P, presentation=pres)
    n = P.degree
    ranks = [pairing_rank(P, d, pres) for d in range(n + 1)]
    rep.add(CheckResult("pairing nondegenerate", ranks == list(pres.hilbert), ranks, list(pres.hilbert)))
    return rep


def cmd_selftest(cap_lattice=None, cap_weyl=None):
    results = acceptance.run_acceptance(cap_lattice, cap_weyl)
    rep = Report("selftest")
    for c in results:
        rep.add(CheckResult(f"{c.number}. {c.name}", c.ok, None, None, c.detail))
    return rep


# ---------------------------------------------------------------------------
# argument parsing


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", help="write the report to this file instead of stdout")
    common.add_argument("--cap-lattice", type=_positive_int, default=DEFAULT_LATTICE_CAP,
                        help="maximum bounding-box size for lattice point scans")
    common.add_argument("--cap-weyl", type=_positive_int, default=DEFAULT_WEYL_CAP,
                        help="maximum Weyl group order")

    parser = argparse.ArgumentParser(
        prog="volring",
        description="Exact volume polynomials, moment polytopes and cohomology rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("flag-ring", parents=[common], help="cohomology ring of G/B")
    p.add_argument("type", choices=("A", "B", "C", "D", "a", "b", "c", "d"))
    p.add_argument("rank", type=int)

    p = sub.add_parser("toric-ring", parents=[common], help="cohomology ring of a toric surface")
    p.add_argument("family", help="preset (P2, P1xP1, Hirzebruch(1), point) or toric JSON / @file")

    p = sub.add_parser("gc", parents=[common], help="Gelfand-Cetlin polytope checks")
    p.add_argument("parts", type=int, nargs="+", help="weakly decreasing parts of a GL(n) weight")
    p.add_argument("--add", type=_int_list, help="second weight for the additivity check")

    p = sub.add_parser("moment", parents=[common], help="moment polytope examples")
    p.add_argument("example", choices=MOMENT_EXAMPLES)
    p.add_argument("--params", type=int, nargs="*", default=[])
    p.add_argument("--type", dest="family")
    p.add_argument("--rank", type=int)
    p.add_argument("--weights", help="JSON list of weights in fundamental-weight coordinates")

    p = sub.add_parser("apolarity", parents=[common], help="presentation of k[t]/Ann(P)")
    p.add_argument("poly", help='polynomial JSON {"nvars", "terms": [{"exps", "coef"}]} or @file')

    sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    return parser


def _dispatch(args):
    if args.command == "flag-ring":
        return cmd_flag_ring(args.type.upper(), args.rank, args.cap_weyl)
    if args.command == "toric-ring":
        text = args.family
        if text.lstrip().startswith("{") or text.startswith("@") or Path(text).is_file():
            fam = ToricFamily.from_json(_load_json(text))
        else:
            fam = preset(text)
        return cmd_toric_ring(fam)
    if args.command == "gc":
        return cmd_gc(args.parts, args.add, args.cap_lattice)
    if args.command == "moment":
        weights = _load_json(args.weights) if args.weights else None
        return cmd_moment(args.example, args.params, args.family, args.rank, weights, args.cap_weyl)
    if args.command == "apolarity":
        return cmd_apolarity(_load_json(args.poly))
    if args.command == "selftest":
        return cmd_selftest(args.cap_lattice, args.cap_weyl)
    raise UsageError(f"unknown command {args.command}")


def _render(rep, fmt):
    if fmt == "text":
        return rep.to_text() + "\n"
    return dumps(rep.to_json()) + "\n"


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        rep = _dispatch(args)
    except (UsageError, DomainError, UnsupportedError, UnboundedError, CapExceededError) as exc:
        print(f"volring: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CertificationError, PresentationMismatch) as exc:
        print(f"volring: check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    text = _render(rep, args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if rep.ok else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
