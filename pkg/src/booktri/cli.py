"""Command-line front end.

Subcommands map one-to-one onto library operations; outputs are the same
JSON/CSV the library serializes, so a subcommand never computes anything the
API would not.  Exit codes: 0 success, 1 usage, 2 parse, 3 hypothesis
violation or self-check failure, 4 resource guard.  Progress/summary chatter
goes to stderr, never into result files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .analytics import analyze_report
from .codec import from_edge_list_text, from_graph6, to_graph6
from .constructions import (
    as_alpha,
    edwards_generalized,
    predicted_vs_actual,
    rademacher_extremal,
    theorem1_sharp,
)
from .errors import (
    BooktriError,
    EdgeListParseError,
    ExplosionGuardError,
    Graph6ParseError,
    GraphSizeError,
    NotTriangleFreeError,
    ParameterError,
)
from .graph import Graph
from .partition import bipartize_rewire, stability_partition
from .search import (
    AnnealParams,
    alpha_sweep,
    anneal_min_triangles,
    extremal_scan,
    sweep_to_csv,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_HYPOTHESIS = 3
EXIT_GUARD = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we use 1
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _load_graph(path: str) -> Graph:
    if path.endswith(".g6"):
        with open(path, "rb") as fh:
            return from_graph6(fh.read())
    if path.endswith(".el"):
        with open(path, "r", encoding="ascii") as fh:
            return from_edge_list_text(fh.read())
    raise _UsageError(f"cannot detect format of {path!r}: expected .g6 or .el")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _kv_csv(d: dict) -> str:
    lines = []
    for k, v in d.items():
        if isinstance(v, dict):
            for kk, vv in v.items():
                lines.append(f"{k}_{kk},{vv}")
        elif isinstance(v, list):
            lines.append(f"{k},{' '.join(str(x) for x in v)}")
        else:
            lines.append(f"{k},{'' if v is None else v}")
    return "\n".join(lines) + "\n"


def _dump(d: dict, fmt: str, out: str | None) -> None:
    if fmt == "json":
        _emit(json.dumps(d, indent=2) + "\n", out)
    else:
        _emit(_kv_csv(d), out)


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("BOOKTRI_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise _UsageError(f"bad BOOKTRI_THREADS value {env!r}")
    return 1


def _cmd_analyze(args) -> int:
    g = _load_graph(args.input)
    _dump(analyze_report(g), args.format, args.out)
    return EXIT_OK


def _cmd_construct(args) -> int:
    if args.kind == "rademacher":
        report = rademacher_extremal(args.n)
    elif args.kind == "theorem1":
        if args.alpha is None:
            raise _UsageError("construct theorem1 requires --alpha p/q")
        report = theorem1_sharp(args.n, as_alpha(args.alpha))
    else:
        if args.alpha is None:
            raise _UsageError("construct edwards requires --alpha p/q")
        report = edwards_generalized(args.n, as_alpha(args.alpha))
    _dump(report.to_json_dict(), args.format, args.out)
    if args.graph_out:
        _emit(to_graph6(report.graph) + "\n", args.graph_out)
    if not predicted_vs_actual(report):
        print("self-check failed: predictions disagree with measurements", file=sys.stderr)
        return EXIT_HYPOTHESIS
    return EXIT_OK


def _cmd_frontier(args) -> int:
    if args.mode == "exhaustive":
        record = extremal_scan(args.n, args.e, threads=_threads(args))
    else:
        if args.seed is None:
            raise _UsageError("frontier --mode anneal requires --seed")
        if args.book_cap is None:
            raise _UsageError("frontier --mode anneal requires --book-cap")
        init = _load_graph(args.init) if args.init else None
        record = anneal_min_triangles(
            args.n,
            args.e,
            AnnealParams(
                book_cap=args.book_cap,
                budget=args.budget,
                seed=args.seed,
                init=init,
                t0=args.t0,
                decay=args.decay,
            ),
        )
    if args.format == "json":
        _emit(json.dumps(record.to_json_dict(), indent=2) + "\n", args.out)
    else:
        _emit(record.to_csv(), args.out)
    print(
        f"n={record.n} e={record.e} min_t={record.min_t} min_b={record.min_b} "
        f"scanned={record.scanned}",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_sweep(args) -> int:
    if args.seed is None:
        raise _UsageError("sweep requires --seed")
    alphas = [a for a in args.alphas.split(",") if a]
    entries = alpha_sweep(args.n, alphas, seed=args.seed, budget=args.budget)
    if args.format == "json":
        payload = [
            {
                "alpha": str(s.alpha),
                "b_cap": s.b_cap,
                "t": s.best_t,
                "source": s.source,
                "graph6": s.graph6,
            }
            for s in entries
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        _emit(sweep_to_csv(entries), args.out)
    return EXIT_OK


def _cmd_stability(args) -> int:
    g = _load_graph(args.input)
    report = stability_partition(g)
    _dump(report.to_json_dict(), args.format, args.out)
    if args.rewire:
        _emit(to_graph6(bipartize_rewire(g)) + "\n", args.rewire_out)
    return EXIT_OK


def _build_parser() -> _Parser:
    p = _Parser(prog="booktri", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--out", default=None, help="output path (default stdout)")

    sp = sub.add_parser("analyze", help="triangle/book report for a graph file")
    sp.add_argument("input", help="graph file (.g6 or .el)")
    common(sp)
    sp.set_defaults(fn=_cmd_analyze)

    sp = sub.add_parser("construct", help="generate an extremal construction")
    sp.add_argument("kind", choices=("rademacher", "theorem1", "edwards"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--alpha", default=None, help="rational p/q (never a decimal)")
    sp.add_argument("--graph-out", default=None, help="also write bare graph6 here")
    common(sp)
    sp.set_defaults(fn=_cmd_construct)

    sp = sub.add_parser("frontier", help="scan the (b, t) frontier at fixed edges")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--e", type=int, required=True)
    sp.add_argument("--mode", choices=("exhaustive", "anneal"), required=True)
    sp.add_argument("--threads", type=int, default=None,
                    help="workers for exhaustive scans (or BOOKTRI_THREADS)")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--book-cap", type=int, default=None,
                    help="strict upper bound on the largest book (anneal)")
    sp.add_argument("--budget", type=int, default=100000)
    sp.add_argument("--init", default=None, help="feasible starting graph file")
    sp.add_argument("--t0", type=float, default=2.0)
    sp.add_argument("--decay", type=float, default=0.9995)
    common(sp)
    sp.set_defaults(fn=_cmd_frontier)

    sp = sub.add_parser("sweep", help="best known t under caps alpha*n/2")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--alphas", required=True, help="comma-separated rationals p/q")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--budget", type=int, default=20000)
    common(sp)
    sp.set_defaults(fn=_cmd_sweep)

    sp = sub.add_parser("stability", help="max-degree split of a triangle-free graph")
    sp.add_argument("input", help="graph file (.g6 or .el)")
    sp.add_argument("--rewire", action="store_true",
                    help="also emit the bipartized graph as graph6")
    sp.add_argument("--rewire-out", default=None)
    common(sp)
    sp.set_defaults(fn=_cmd_stability)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Graph6ParseError, EdgeListParseError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotTriangleFreeError as exc:
        u, v, w = exc.witness
        print(f"hypothesis violation: not triangle-free, witness {u} {v} {w}",
              file=sys.stderr)
        return EXIT_HYPOTHESIS
    except ExplosionGuardError as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ParameterError, GraphSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BooktriError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
