"""Command-line interface: ``crsparse {generate,sparsify,resistances,metrics,sweep}``.

Exit status is 0 on success, 2 on usage errors and 1 on data errors. All
randomness is controlled by ``--seed``; output files are written atomically.
"""
import argparse
import json
import sys
import warnings

from .errors import CrsparseError
from .generators import gen_barbell, gen_random
from .graph import laplacian
from .graphio import atomic_write, format_float, read_graph, write_graph
from .metrics import error_report, isotropic_error
from .sparsify import cr_sparsify, effective_resistances, er_sparsify
from .sweep import METHODS, run_sweep, write_csv


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {value}")
    return value


def _seed(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("seed must be non-negative")
    return value


def _int_list(text):
    try:
        values = [_positive_int(t) for t in text.split(",") if t.strip()]
    except argparse.ArgumentTypeError as exc:
        raise argparse.ArgumentTypeError(f"bad list {text!r}: {exc}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _method_list(text):
    values = [t.strip() for t in text.split(",") if t.strip()]
    bad = [v for v in values if v not in METHODS]
    if bad or not values:
        raise argparse.ArgumentTypeError(f"methods must be drawn from {','.join(METHODS)}")
    return values


def _write_json(obj, path):
    with atomic_write(path) as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


def cmd_generate(args):
    if args.kind == "barbell":
        G = gen_barbell(args.k, args.p, args.weight_max, args.seed)
    else:
        G = gen_random(args.n, args.edge_prob, args.weight_max, args.seed)
    write_graph(G, args.out)


def cmd_sparsify(args):
    G = read_graph(args.input)
    if args.method == "cr":
        out = cr_sparsify(G, args.r, args.seed)
    else:
        out = er_sparsify(G, args.r, args.seed)
    if args.report:
        L = laplacian(G)
        report = {
            "method": out.method,
            "r": out.r,
            "seed": args.seed,
            "n": G.n,
            "source_edges": G.m,
            "source_W": out.source_W,
            "sketch_edges": out.distinct_edges,
            "sketch_W": out.sketch.total_weight(),
            "retained_fraction": out.retained_fraction,
            "isotropic_error": isotropic_error(L, laplacian(out.sketch)),
        }
    write_graph(out.sketch, args.out_graph)
    if args.report:
        _write_json(report, args.report)


def cmd_resistances(args):
    G = read_graph(args.input)
    table = effective_resistances(G)
    with atomic_write(args.out) as fh:
        fh.write("# u v w r_e\n")
        for (u, v, w), r_e in zip(G.edges(), table.resistances.tolist()):
            fh.write(f"{u} {v} {format_float(w)} {r_e!r}\n")


def cmd_metrics(args):
    G = read_graph(args.input)
    H = read_graph(args.sketch)
    if H.n != G.n:
        raise CrsparseError(f"vertex counts differ: {G.n} vs {H.n}")
    W = G.total_weight() if args.eps is not None else None
    report = error_report(laplacian(G), laplacian(H), W=W, eps=args.eps)
    _write_json(report.as_dict(), args.report)


def cmd_sweep(args):
    G = read_graph(args.input)
    records = run_sweep(G, args.r_list, args.methods, args.repeats, args.seed)
    with atomic_write(args.csv) as fh:
        write_csv(records, fh, timing=args.timing)
    failed = [r for r in records if r.failed]
    if failed:
        print(f"warning: {len(failed)} of {len(records)} records failed: {failed[0].error}",
              file=sys.stderr)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="crsparse", description="Sparsify weighted graphs by CR edge sampling.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a random graph as an edge list")
    p.add_argument("--kind", choices=["barbell", "random"], required=True)
    p.add_argument("--k", type=int, default=30, help="clique size (barbell)")
    p.add_argument("--p", type=int, default=41, help="path edge count (barbell)")
    p.add_argument("--n", type=int, default=50, help="vertex count (random)")
    p.add_argument("--edge-prob", type=float, default=0.2, help="edge probability (random)")
    p.add_argument("--weight-max", type=int, default=100)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("sparsify", help="sample a sparsified graph")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--method", choices=list(METHODS), default="cr")
    p.add_argument("--r", type=_positive_int, required=True, help="number of sampling trials")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--out-graph", required=True)
    p.add_argument("--report", help="optional JSON summary")
    p.set_defaults(func=cmd_sparsify)

    p = sub.add_parser("resistances", help="exact effective resistance of every edge")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_resistances)

    p = sub.add_parser("metrics", help="spectral errors of a sketch against its source")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--sketch", required=True)
    p.add_argument("--eps", type=float, help="CR accuracy; adds the 2*W*eps bound")
    p.add_argument("--report", required=True)
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("sweep", help="error and retained edges over several r")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--r-list", type=_int_list, required=True, help="comma-separated r values")
    p.add_argument("--methods", type=_method_list, default=list(METHODS))
    p.add_argument("--repeats", type=_positive_int, default=1)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--csv", required=True)
    p.add_argument("--timing", action="store_true",
                   help="record wall_ms (otherwise nan, keeping output reproducible)")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            args.func(args)
    except (CrsparseError, OSError) as exc:
        print(f"crsparse {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
