"""Command-line interface.

Subcommands: ring, cuplength, trees, bounds, sweep, verify.  Output is
deterministic for fixed arguments; --format json emits exactly one JSON
document on stdout.  Exit codes: 0 success, 1 domain or consistency error,
2 usage error.
"""

import argparse
import json
import sys

from configtop import bounds, cohen_ring, selfcheck
from configtop.bounds import InconsistentBoundsError
from configtop.cohen_ring import RingError, make_ring
from configtop.labeling_trees import alpha, cell_dim_range, cohdim_mod2, min_edges


def _parse_range(text):
    """Parse "A..B" or a single integer into an inclusive range."""
    if ".." in text:
        a, b = text.split("..", 1)
        lo, hi = int(a), int(b)
    else:
        lo = hi = int(text)
    if hi < lo:
        raise ValueError("empty range %r" % text)
    return range(lo, hi + 1)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="configtop",
        description="Topological invariants of Euclidean configuration spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ring", help="rank table or basis of H*(F(R^n,k))")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, default=None,
                   help="list the admissible basis in q factors instead")

    p = sub.add_parser("cuplength", help="cuplength of H*(F(R^n,k)) with witness")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("trees", help="minimal labeling-tree collections")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--dot", action="store_true", help="emit DOT digraphs")
    p.add_argument("--search", action="store_true",
                   help="exhaustive search instead of the closed form")

    p = sub.add_parser("bounds", help="certified interval for one invariant")
    p.add_argument("--invariant", choices=bounds.INVARIANTS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("json", "md"), default="md")

    p = sub.add_parser("sweep", help="reports over ranges of n and k")
    p.add_argument("--n", type=str, required=True, metavar="A..B")
    p.add_argument("--k", type=str, required=True, metavar="C..D")
    p.add_argument("--invariant", choices=bounds.INVARIANTS, default=None,
                   help="restrict to one invariant (default: all three)")
    p.add_argument("--format", choices=("json", "md"), default="md")

    p = sub.add_parser("verify", help="run all self-verification suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-k", type=int, default=None)

    return parser


def _cmd_ring(args, out):
    ctx = make_ring(args.n, args.k)
    if args.q is not None:
        for mon in cohen_ring.basis(ctx, args.q):
            print(mon, file=out)
        return 0
    print("q\tdegree\trank", file=out)
    for q, (degree, rank) in enumerate(cohen_ring.poincare_table(ctx)):
        print("%d\t%d\t%d" % (q, degree, rank), file=out)
    return 0


def _cmd_cuplength(args, out):
    value, witness = cohen_ring.cuplength(make_ring(args.n, args.k))
    print(value, file=out)
    print("witness: %s" % witness, file=out)
    return 0


def _cmd_trees(args, out):
    mode = "search" if args.search else "closed_form"
    value, collection = min_edges(args.n, args.k, mode)
    if args.dot:
        print(collection.to_dot(), file=out)
        return 0
    print("alpha(k) = %d" % alpha(args.k), file=out)
    print("min total edges = %d (%s)" % (value, mode), file=out)
    print("cohdim_Z/2 B(R^%d,%d) = %d" % (args.n, args.k,
                                          cohdim_mod2(args.n, args.k)), file=out)
    lo, hi = cell_dim_range(args.n, args.k)
    print("cell dimensions in [%d, %d]" % (lo, hi), file=out)
    for tree in collection.trees:
        print("tree: lines %s, edges %d, leaves %d, depth %d"
              % (list(tree.line_counts), tree.edges, tree.leaves, tree.depth),
              file=out)
    return 0


def _emit_reports(reports, fmt, out):
    if fmt == "json":
        docs = [r.to_dict() for r in reports]
        print(json.dumps(docs[0] if len(docs) == 1 else docs, indent=2), file=out)
    else:
        print(bounds.reports_to_markdown(reports), file=out)


def _cmd_bounds(args, out):
    report = bounds.compute(args.invariant, args.n, args.k)
    _emit_reports([report], args.format, out)
    return 0


def _cmd_sweep(args, out):
    invariants = (args.invariant,) if args.invariant else bounds.INVARIANTS
    reports = bounds.sweep(_parse_range(args.n), _parse_range(args.k),
                           invariants=invariants)
    _emit_reports(reports, args.format, out)
    return 0


def _cmd_verify(args, out):
    results = selfcheck.run_all(seed=args.seed, max_k=args.max_k)
    all_ok = True
    for name, ok, detail in results:
        print("%s: %s (%s)" % (name, "PASS" if ok else "FAIL", detail), file=out)
        all_ok = all_ok and ok
    return 0 if all_ok else 1


_COMMANDS = {
    "ring": _cmd_ring,
    "cuplength": _cmd_cuplength,
    "trees": _cmd_trees,
    "bounds": _cmd_bounds,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
}


def run(argv=None, out=None):
    """Dispatch; returns the exit code instead of exiting."""
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code or 0
    try:
        return _COMMANDS[args.command](args, out)
    except (RingError, InconsistentBoundsError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
