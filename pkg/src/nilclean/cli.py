"""Command line front end: classify, graph, invariants, verify, sweep."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import invariants as inv
from .graphs import build_graph, to_dot, to_json
from .rings import RingSpecError, make_ring
from .verify import CLAIMS, default_rings, odd_primes, run_sweep, select_claims
from .verify.sweep import DEFAULT_MAX_N, DEFAULT_PRIMES_TO, EXIT_UNEXPECTED

OUT_DIR_ENV = "NILCLEAN_OUT_DIR"
CLASSES = ("idempotents", "nilpotents", "units", "nil_clean", "weakly_nil_clean")


def _emit(text, out):
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    else:
        sys.stdout.write(text)


def classification(r):
    rows = []
    for x in r.elements:
        rows.append({"element": r.render(x), **{c: x in getattr(r, c) for c in CLASSES}})
    return {
        "ring": r.text,
        "order": r.order,
        "elements": rows,
        "sizes": {c: len(getattr(r, c)) for c in CLASSES},
        "predicates": r.ring_predicates(),
    }


def classification_text(r):
    heads = ("element", "idem", "nil", "unit", "nc", "wnc")
    width = max(len(heads[0]), *(len(r.render(x)) for x in r.elements))
    lines = [f"{r.text} (order {r.order})", "  ".join([heads[0].ljust(width), *heads[1:]])]
    for x in r.elements:
        flags = ["x" if x in getattr(r, c) else "." for c in CLASSES]
        lines.append("  ".join([r.render(x).ljust(width)] + [f.center(len(h)) for f, h in zip(flags, heads[1:])]))
    lines.append("")
    for c in CLASSES:
        members = ", ".join(r.render(x) for x in r.elements if x in getattr(r, c))
        lines.append(f"|{c}| = {len(getattr(r, c))}: {{{members}}}")
    for name, value in r.ring_predicates().items():
        lines.append(f"{name}: {value}")
    return "\n".join(lines) + "\n"


def cmd_classify(args):
    r = make_ring(args.ring)
    if args.format == "json":
        _emit(json.dumps(classification(r), indent=2) + "\n", args.out)
    else:
        _emit(classification_text(r), args.out)
    return 0


def cmd_graph(args):
    g = build_graph(make_ring(args.ring), args.kind)
    _emit(to_dot(g) if args.format == "dot" else to_json(g), args.out)
    return 0


def cmd_invariants(args):
    g = build_graph(make_ring(args.ring), args.kind)
    report = inv.invariant_report(g)
    payload = {"ring": g.ring, "kind": g.kind, **report.to_dict()}
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _write_report(report, out):
    out = out or os.environ.get(OUT_DIR_ENV)
    sys.stdout.write(report.to_text())
    if out:
        d = Path(out)
        d.mkdir(parents=True, exist_ok=True)
        (d / "report.json").write_text(report.to_json())
        (d / "report.txt").write_text(report.to_text())
    return report.exit_code


def _rings_for(args):
    if args.rings:
        extra = [s.strip() for s in args.rings.split(",") if s.strip()]
        for s in extra:
            make_ring(s)
        base = default_rings(args.max_n, extra=()) if args.max_n is not None else []
        return base + [s for s in extra if s not in base]
    return default_rings(args.max_n if args.max_n is not None else DEFAULT_MAX_N)


def cmd_verify(args):
    claims = select_claims(args.claims)
    rings = _rings_for(args)
    primes = odd_primes(args.primes_to)
    desc = (
        f"verify claims={args.claims}; {len(rings)} rings"
        f"{f' ({rings[0]}..{rings[-1]})' if rings else ''}; odd primes <= {args.primes_to}"
    )
    report = run_sweep(claims, rings=rings, primes=primes, jobs=args.jobs, description=desc)
    return _write_report(report, args.out)


def cmd_sweep(args):
    claims = [c for c in select_claims(args.claims) if CLAIMS[c].target == "ring"]
    rings = _rings_for(args)
    desc = f"sweep {len(claims)} ring claims over {len(rings)} rings (Z2..Z{args.max_n or DEFAULT_MAX_N} + curated)"
    report = run_sweep(claims, rings=rings, jobs=args.jobs, description=desc)
    return _write_report(report, args.out)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nilclean",
        description="Nil clean divisor graphs of finite commutative rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def ring_args(p):
        p.add_argument("ring_pos", nargs="?", metavar="RING", help="ring spec, e.g. Z6 or Z4xGF2^2")
        p.add_argument("--ring", help="ring spec (alternative to the positional)")

    p = sub.add_parser("classify", help="flag every element: idempotent, nilpotent, unit, nil clean, weakly nil clean")
    ring_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_classify)

    for name, func, helptext in (
        ("graph", cmd_graph, "export a divisor graph as DOT or JSON"),
        ("invariants", cmd_invariants, "exact invariants of a divisor graph as JSON"),
    ):
        p = sub.add_parser(name, help=helptext)
        ring_args(p)
        p.add_argument("kind_pos", nargs="?", metavar="KIND")
        p.add_argument("--kind", help="nilclean (default), nilpotent, zerodiv or idem:<element>")
        if name == "graph":
            p.add_argument("format_pos", nargs="?", metavar="FORMAT", choices=("dot", "json"))
            p.add_argument("--format", choices=("dot", "json"))
        p.add_argument("--out", help="output file (default stdout)")
        p.set_defaults(func=func)

    for name, func, helptext in (
        ("verify", cmd_verify, "check the claims over rings and primes"),
        ("sweep", cmd_sweep, "check the ring-level claims over Z2..Z<max-n> plus curated rings"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--claims", default="all", help="comma separated claim ids or prefixes, 'all' or 'none'")
        if name == "verify":
            p.add_argument("--primes-to", type=int, default=DEFAULT_PRIMES_TO)
        p.add_argument("--max-n", type=int, default=None, help=f"largest Z_n in the sweep (default {DEFAULT_MAX_N})")
        p.add_argument("--rings", help="comma separated ring specs to check instead of the default list")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--out", help=f"directory for report.json / report.txt (default ${OUT_DIR_ENV})")
        p.set_defaults(func=func)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "ring_pos"):
        args.ring = args.ring or args.ring_pos
        if not args.ring:
            parser.error("a ring spec is required")
    if hasattr(args, "kind_pos"):
        args.kind = args.kind or args.kind_pos or "nilclean"
    if hasattr(args, "format_pos"):
        args.format = args.format or args.format_pos or "dot"
    try:
        return args.func(args)
    except KeyError as exc:
        if args.command in ("verify", "sweep"):
            print(f"error: unknown claim id {exc.args[0]!r}; valid ids: {', '.join(CLAIMS)}", file=sys.stderr)
            return EXIT_UNEXPECTED
        raise
    except (RingSpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(main())
