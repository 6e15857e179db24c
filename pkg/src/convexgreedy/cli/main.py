"""Command-line front end.

Exit codes: 0 success/pass, 1 validation or routing failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from ..bounds import DEFAULT_DELTAS, certify_ratio, full_report
from ..experiments import CSV_COLUMNS, DEFAULT_OUTER, cube_sweep, geometric_sweep
from ..generators import FAMILIES, generate
from ..graph import GraphError, dump_graph, load_graph
from ..routing import beta_max, greedy_route, is_greedy_embedding, weak_route
from ..trees import embedding_metrics
from ..tutte import EPS_EQ, Embedding, EmbeddingInputError, tutte_embed, validate_embedding
from .svg import render_svg


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _load_embedding(path: str) -> Embedding:
    try:
        return Embedding.loads(_read(path))
    except (json.JSONDecodeError, KeyError) as exc:
        raise GraphError(f"cannot read embedding {path}: {exc}") from None


def _parse_cycle(text: str, vertex_ids):
    if text.lstrip("-").isdigit():
        return int(text)
    if "," in text:
        return tuple(s.strip() for s in text.split(","))
    if all(len(v) == 1 for v in vertex_ids):
        return tuple(text)
    raise UsageError(f"cannot split outer face {text!r}; separate vertex ids with commas")


def _parse_weight(text: str):
    try:
        edge, w = text.split("=")
        u, v = (s.strip() for s in edge.split(","))
        return (u, v), float(w)
    except ValueError:
        raise UsageError(f"bad weight override {text!r}; expected U,V=W") from None


def _parse_sweep(text: str) -> list[float]:
    try:
        lo, hi, steps = text.split(":")
        lo, hi, steps = float(lo), float(hi), int(steps)
    except ValueError:
        raise UsageError(f"bad sweep {text!r}; expected lo:hi:steps") from None
    if not (0 < lo <= hi) or steps < 1:
        raise UsageError("sweep needs 0 < lo <= hi and steps >= 1")
    return geometric_sweep(lo, hi, steps)


# --------------------------------------------------------------------------
# subcommands

def cmd_gen(args) -> int:
    g, f = generate(args.family, *args.params)
    _write(args.output, dump_graph(g, f, indent=2) + "\n")
    return 0


def cmd_embed(args) -> int:
    g, f = load_graph(_read(args.graph))
    if f is None:
        raise EmbeddingInputError("graph document has no faces; faces are required for embedding")
    if args.weight:
        g = g.with_weights(dict(_parse_weight(w) for w in args.weight))
    if args.outer is not None:
        try:
            f = f.with_outer(_parse_cycle(args.outer, g.vertex_ids))
        except KeyError as exc:
            raise EmbeddingInputError(str(exc.args[0])) from None
    e = tutte_embed(g, f, args.radius, start_angle=math.radians(args.start_angle))
    report = validate_embedding(e)
    _write(args.output, _json(e.to_dict()))
    print(f"equilibrium residual: {report.equilibrium_residual:.3e}", file=sys.stderr)
    print(f"planar: {report.planar}  crossings: {len(report.crossings)}  "
          f"nonconvex faces: {report.nonconvex_faces}", file=sys.stderr)
    if args.svg:
        _write(args.svg, render_svg(e))
    ok = report.convex and report.equilibrium_residual <= EPS_EQ
    return 0 if ok else 1


def cmd_route(args) -> int:
    e = _load_embedding(args.embedding)
    if args.beta is None:
        path = greedy_route(e, args.source, args.target)
    else:
        path = weak_route(e, args.source, args.target, args.beta)
    _write(args.output, _json(path.to_dict()))
    return 0 if path.success else 1


def cmd_beta(args) -> int:
    e = _load_embedding(args.embedding)
    _write(args.output, _json(beta_max(e, build_trees=False).to_dict()))
    return 0


def cmd_analyze(args) -> int:
    e = _load_embedding(args.embedding)
    report = full_report(e.graph, e.faces, e)
    _write(args.output, _json(report.to_dict()))
    if args.svg:
        route = None
        if args.route:
            s, t = (x.strip() for x in args.route.split(","))
            route = greedy_route(e, s, t).vertices
        _write(args.svg, render_svg(e, route))
    return 0


def cmd_certify(args) -> int:
    e = _load_embedding(args.embedding)
    summary = embedding_metrics(e)
    greedy = is_greedy_embedding(e)
    verdicts = [certify_ratio(summary, d, greedy) for d in (args.delta or DEFAULT_DELTAS)]
    first = verdicts[0]
    doc = {
        "ratio": first.ratio,
        "implied_delta": first.implied_delta,
        "greedy": greedy,
        "agrees": first.agrees,
        "deltas": [{"delta": v.delta, "threshold": v.threshold, "pass": v.passed} for v in verdicts],
    }
    _write(args.output, _json(doc))
    return 0 if all(v.passed for v in verdicts) else 1


def cmd_experiment(args) -> int:
    weights = _parse_sweep(args.sweep)
    outer = _parse_cycle(args.outer, "ABCDEFGH")
    if isinstance(outer, int) or len(outer) != 4:
        raise UsageError("cube experiment needs the outer face as four vertex ids, e.g. EFGH")
    rows = cube_sweep(weights, outer)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow([repr(r[c]) if isinstance(r[c], float) else str(r[c]).lower() for c in CSV_COLUMNS])
    _write(args.output, buf.getvalue())
    betas = [r["beta_max"] for r in rows]
    report = {
        "outer_face": list(outer),
        "rows": rows,
        "beta_max_non_decreasing": all(a <= b for a, b in zip(betas, betas[1:])),
        "greedy_BD_fails_at": [r["w"] for r in rows if not r["greedy_BD"]],
    }
    if args.report:
        _write(args.report, _json(report))
    return 0


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="convexgreedy", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="generate a graph family with faces")
    s.add_argument("family", choices=FAMILIES + ("grid",))
    s.add_argument("params", nargs="+", type=int)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("embed", help="Tutte-embed a graph document")
    s.add_argument("graph")
    s.add_argument("--outer", help="outer face: index, comma-separated ids, or ABCD for one-letter ids")
    s.add_argument("--radius", type=float, default=1.0)
    s.add_argument("--start-angle", type=float, default=90.0, help="angle of the first outer vertex, degrees")
    s.add_argument("--weight", action="append", metavar="U,V=W", help="spring weight override")
    s.add_argument("--svg")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("route", help="greedy route, or weak route with --beta")
    s.add_argument("embedding")
    s.add_argument("source")
    s.add_argument("target")
    s.add_argument("--beta", type=float)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_route)

    s = sub.add_parser("beta", help="per-source optimal weakness factors")
    s.add_argument("embedding")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_beta)

    s = sub.add_parser("analyze", help="evaluate every tree-weight and beta bound")
    s.add_argument("embedding")
    s.add_argument("--svg")
    s.add_argument("--route", metavar="S,T", help="highlight the greedy S->T route in the SVG")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("certify", help="ratio criterion WT(maxST)/WT(MST) <= (n-1)^(1-delta)")
    s.add_argument("embedding")
    s.add_argument("--delta", type=float, action="append")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("experiment", help="canned experiments")
    s.add_argument("name", choices=["cube"])
    s.add_argument("--sweep", default="0.001:1:13", metavar="LO:HI:STEPS")
    s.add_argument("--outer", default="".join(DEFAULT_OUTER))
    s.add_argument("-o", "--output", help="CSV path (default stdout)")
    s.add_argument("--report", help="JSON report path")
    s.set_defaults(func=cmd_experiment)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, EmbeddingInputError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 1
