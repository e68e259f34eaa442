"""grassmorph command line.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 computation inconclusive (degree cap, enumeration budget, bad prime).
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import cayley_bacharach as cb
from . import classify as cl
from .exactalg import BadPrime, is_prime
from .morphisms import (
    Inconclusive,
    NotSurjective,
    RetriesExhausted,
    collision_scan,
    cohomology_class,
    example_split,
    is_surjective,
    pluecker_polys,
)
from .verify import run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(args, payload: dict, human: list[str]) -> None:
    if args.format == "json":
        payload = {"command": args.command, "seed": args.seed, **payload}
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(human) + "\n")


def _verdict_line(v: cl.ClassVerdict) -> str:
    w = f"  witness {json.dumps(v.witness.to_json(), sort_keys=True)}" if v.witness else ""
    note = f"\n  caveat: {v.caveat}" if v.caveat else ""
    return f"({v.q2},{v.s2}): {v.status}  [{v.reason}]{w}{note}"


def cmd_classify(args) -> int:
    use_split = not args.intervals_only
    if args.table is not None:
        if args.table < 1:
            raise UsageError("--table needs a positive c_max")
        rows = cl.table(args.table, use_split)
        human = []
        for row in rows:
            counts = ", ".join(f"{k} {n}" for k, n in row.counts().items())
            human.append(f"c={row.c}: {counts}; unknown {row.with_status(cl.Status.UNKNOWN)}")
        _emit(args, {"table": [r.to_json() for r in rows], "use_split": use_split}, human)
        return EXIT_OK
    if args.q2 is None or args.s2 is None:
        raise UsageError("classify needs q2 s2 or --table N")
    if args.q2 < 0 or args.s2 < 0:
        raise UsageError("class components must be nonnegative")
    v = cl.realizability(args.q2, args.s2, use_split)
    _emit(args, {"verdict": v.to_json(), "use_split": use_split}, [_verdict_line(v)])
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.a < 1 or args.b < 1:
        raise UsageError("a and b must be positive")
    if args.prime < 3 or not is_prime(args.prime):
        raise UsageError(f"--prime {args.prime} is not an odd prime")
    s = example_split(args.a, args.b)
    surj = is_surjective(s, args.seed)
    payload = {"matrix": s.to_json(), "surjective": surj.to_json(),
               "pluecker_polys": [f.to_json() for f in pluecker_polys(s)], "class": None}
    human = [f"matrix rows: {[str(f) for f in s.matrix[0]]}, {[str(f) for f in s.matrix[1]]}",
             f"surjective: {surj.surjective} ({surj.method})",
             "minors: " + ", ".join(str(f) for f in pluecker_polys(s))]
    if surj:
        res = cohomology_class(s, args.seed, args.prime)
        payload["class"] = res.to_json()
        human.append(f"class: {res.cls}  (section v = {list(res.section)}, "
                     f"dual incidence points mod {args.prime}: {res.evidence['dual_incidence']['points']})")
    _emit(args, payload, human)
    return EXIT_OK if surj else EXIT_FAIL


def _load_points(path: str) -> cb.PointConfig:
    try:
        with open(path) as fh:
            data = json.load(fh)
        return cb.parse_points(data)
    except (OSError, json.JSONDecodeError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot read points from {path}: {exc}") from exc


def cmd_cb_check(args) -> int:
    if args.d < 0:
        raise UsageError("degree must be nonnegative")
    z = _load_points(args.points)
    rep = cb.cb_check(z, args.d)
    human = [f"{len(z)} points, degree {args.d}: " + ("holds" if rep.holds else "fails")]
    if not rep.holds:
        human.append(f"failing point #{rep.failing_point} {z.points[rep.failing_point]}; "
                     f"certificate {rep.certificate}")
    _emit(args, {"points": z.to_json(), "report": rep.to_json()}, human)
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.a < 1 or args.b < 1:
        raise UsageError("a and b must be positive")
    if args.p < 3 or not is_prime(args.p):
        raise UsageError(f"{args.p} is not an odd prime")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        rep = collision_scan(example_split(args.a, args.b), args.p, args.sample, args.seed)
    notes = [str(w.message) for w in caught]
    human = [f"{rep.label}: ({rep.a},{rep.b}) over F_{rep.prime}, {rep.mode}",
             f"points {rep.points_scanned}, rank-2 {rep.rank2_points}, images {rep.distinct_images}",
             f"fibre sizes {rep.fiber_sizes}", *notes]
    _emit(args, {"report": rep.to_json(), "warnings": notes}, human)
    return EXIT_OK


def cmd_genpoints(args) -> int:
    if args.ell < 1 or args.t < 0 or args.c < 1:
        raise UsageError("need ell >= 1, t >= 0, c >= 1")
    z = cb.gen_position_points(args.ell, args.t, args.c, args.seed, args.strict_three,
                               args.on_curve, args.budget)
    rep = cb.cb_check(z, args.c - 3)
    human = [f"{len(z)} points: " + " ".join(map(repr, z.points)),
             f"general position (t={args.t}, c={args.c}): ok",
             f"Cayley-Bacharach in degree {args.c - 3}: {'holds' if rep.holds else 'fails'}"]
    _emit(args, {"points": z.to_json(), "cb": rep.to_json(),
                 "params": {"ell": args.ell, "t": args.t, "c": args.c,
                            "strict_three": args.strict_three, "on_curve": args.on_curve}}, human)
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    results = run_all(args.seed)
    human = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}  ({r.seconds:.2f}s)  {r.detail}" for r in results]
    ok = all(r.passed for r in results)
    human.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    _emit(args, {"checks": [r.to_json() for r in results], "all_passed": ok}, human)
    return EXIT_OK if ok else EXIT_FAIL


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="root seed for every random choice")
    common.add_argument("--prime", type=int, default=101, help="prime for finite-field cross-checks")
    common.add_argument("--budget", type=int, default=cb.DEFAULT_BUDGET, help="subset enumeration budget")
    common.add_argument("--format", choices=("human", "json"), default="human")

    parser = _Parser(prog="grassmorph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="realizability of a class (q2, s2)")
    p.add_argument("q2", type=int, nargs="?")
    p.add_argument("s2", type=int, nargs="?")
    p.add_argument("--table", type=int, metavar="C_MAX")
    p.add_argument("--intervals-only", action="store_true", help="skip the split-class pass")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("construct", parents=[common], help="build and verify the (a, b) example matrix")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("cb-check", parents=[common], help="Cayley-Bacharach test for a points file")
    p.add_argument("points")
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_cb_check)

    p = sub.add_parser("scan", parents=[common], help="fibre sizes over F_p")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--sample", type=int)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("genpoints", parents=[common], help="points in general position")
    p.add_argument("ell", type=int)
    p.add_argument("t", type=int)
    p.add_argument("c", type=int)
    p.add_argument("--strict-three", action="store_true")
    p.add_argument("--on-curve", type=int, default=0, metavar="DEGREE")
    p.set_defaults(func=cmd_genpoints)

    p = sub.add_parser("verify-paper", parents=[common], help="run the regression suite")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse exits on --help and on usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"grassmorph: {exc}\n")
        return EXIT_USAGE
    except (Inconclusive, BadPrime, cb.CapExceeded, RetriesExhausted) as exc:
        sys.stderr.write(f"grassmorph: inconclusive: {exc}\n")
        return EXIT_INCONCLUSIVE
    except NotSurjective as exc:
        sys.stderr.write(f"grassmorph: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
