"""Command line front end.

Exit codes: 0 success, 1 a negative answer (non-member, failed check),
2 bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .blowup_tower import TowerSpec, identity_checks
from .chow_ring import RingSpec, render
from .cones import eff_cone, nef_cone, member, nu_table
from .expr import ExprSyntaxError, evaluate
from .hn_model import InvalidDescriptor, as_fraction, format_fraction, parse_descriptor, twist
from .oracle import edge_cases, nu_oracle, random_hn
from .polygon import build_polygon, emit_csv, emit_svg
from .report import build_report, report_text


class UsageError(Exception):
    pass


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc
    return parse_descriptor(doc)


def cmd_analyze(args) -> int:
    report = build_report(_load(args.input))
    if args.text:
        sys.stdout.write(report_text(report))
    else:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    return 0


def cmd_polygon(args) -> int:
    h = _load(args.input)
    poly = build_polygon(h)
    nu = nu_table(h) if h.rank >= 2 else None
    emit_svg(poly, nu, args.svg)
    if args.csv:
        emit_csv(poly, nu, args.csv)
    return 0


def cmd_intersect(args) -> int:
    spec = RingSpec(args.n, as_fraction(args.d))
    x = evaluate(args.expr, spec)
    print(format_fraction(x.degree()) if args.degree else render(x))
    return 0


def cmd_cone_test(args) -> int:
    h = _load(args.input)
    if not 1 <= args.codim <= h.rank - 1:
        raise UsageError(f"--codim must lie in 1..{h.rank - 1}")
    cone = (nef_cone if args.nef else eff_cone)(h, args.codim)
    x = evaluate(args.expr, cone.spec)
    if not x.is_homogeneous() or (x and x.codim != args.codim):
        raise UsageError(f"expression is not a class of codimension {args.codim}")
    inside = member(x, cone)
    print("member" if inside else "non-member")
    return 0 if inside else 1


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    family = [
        random_hn(rng, args.max_rank, args.max_degree, args.max_pieces)
        for _ in range(args.random)
    ]
    base = edge_cases()
    family += base + [twist(h, t) for h in base for t in ("1/2", "-7/3")]
    failures = []
    for h in family:
        if nu_oracle(h, fast_cone=args.fast_cone)[0] != nu_table(h):
            failures.append(h)
    passed = len(family) - len(failures)
    print(f"checked {len(family)} profiles: {passed} passed, {len(failures)} failed")
    if failures:
        print("first counterexample: " + json.dumps(failures[0].to_json()))
        return 1
    return 0


def cmd_blowup_check(args) -> int:
    h = _load(args.input)
    if h.is_semistable:
        raise UsageError("bundle is semistable; there is no blow-up to check")
    spec = TowerSpec.from_hn(h)
    rows = identity_checks(spec)
    width = max(len(label) for label, _ in rows)
    print(
        f"blow-up of P(E) (n={spec.n}, D={format_fraction(spec.D)}) along P(Q_1) "
        f"(r1={spec.r1}, d1={format_fraction(spec.d1)})"
    )
    for label, ok in rows:
        print(f"{label.ljust(width)}  {'PASS' if ok else 'FAIL'}")
    return 0 if all(ok for _, ok in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hncones",
        description="Cones of cycles on projective bundles over curves, from HN data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="nu table, cones and homogeneity report")
    p.add_argument("--input", required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--text", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("polygon", help="render the HN polygon")
    p.add_argument("--input", required=True)
    p.add_argument("--svg", required=True)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("intersect", help="evaluate an expression in N(P(E))")
    p.add_argument("--n", type=int, required=True, help="rank of E")
    p.add_argument("--d", required=True, help="degree of E, integer or p/q")
    p.add_argument("--expr", required=True)
    p.add_argument("--degree", action="store_true", help="print the degree only")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("cone-test", help="membership in Eff^k (or Nef^k)")
    p.add_argument("--input", required=True)
    p.add_argument("--codim", type=int, required=True)
    p.add_argument("--expr", required=True)
    p.add_argument("--nef", action="store_true")
    p.set_defaults(func=cmd_cone_test)

    p = sub.add_parser("verify", help="closed form against the recursive oracle")
    p.add_argument("--random", type=int, default=500, metavar="N")
    p.add_argument("--max-rank", type=int, default=12)
    p.add_argument("--max-degree", type=int, default=20)
    p.add_argument("--max-pieces", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fast-cone", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("blowup-check", help="identities of the blow-up tower")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_blowup_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "intersect" and args.n < 1:
        print("error: --n must be a positive integer", file=sys.stderr)
        return 2
    if args.command == "verify" and (args.max_rank < 2 or args.max_pieces < 1 or args.random < 0):
        print("error: need --max-rank >= 2, --max-pieces >= 1, --random >= 0", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, InvalidDescriptor, ExprSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
