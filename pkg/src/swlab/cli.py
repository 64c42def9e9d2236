"""Command-line front end: ``swlab generate|stats|oracle|majorize|classify``.

Exit codes: 0 success, 2 usage error or invalid parameters, 3 data error
(malformed input file), 4 oracle mismatch, 5 disconnected graph.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import classifier as clf
from . import closed_forms as cf
from . import generators as gen
from .formats import (
    FormatError,
    alpha_to_json,
    dumps,
    graph_to_json,
    load_alpha,
    load_graph,
    summary_to_json,
    to_csv,
)
from .graph import AlphaArray, DisconnectedGraphError, Graph, GraphError, alpha_array, summarize
from .majorization import Verdict, compare, lorenz_curve

EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_MISMATCH = 4
EXIT_DISCONNECTED = 5


class UsageError(Exception):
    pass


def _write(text: str, path: str | None) -> None:
    if path and path != "-":
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def parse_sequence(text: str, steps: int) -> gen.LayeredSpec:
    """``constant:2``, ``polynomial:2``, ``geometric:2`` or ``explicit:2,3,2``."""
    kind, _, arg = text.partition(":")
    if kind not in gen.SEQUENCE_KINDS:
        raise UsageError(f"unknown sequence kind {kind!r}")
    try:
        if kind == "explicit":
            values = tuple(int(x) for x in arg.split(",") if x)
            return gen.LayeredSpec(kind, steps, values=values)
        return gen.LayeredSpec(kind, steps, int(arg) if arg else 2)
    except ValueError as exc:
        raise UsageError(f"bad sequence {text!r}: {exc}") from exc


def parse_sizes(text: str) -> tuple[int, ...]:
    """``START x FACTOR ^ COUNT`` (e.g. ``1024x2^5``) or a comma list."""
    m = re.fullmatch(r"(\d+)x(\d+)\^(\d+)", text.strip())
    if m:
        start, factor, count = map(int, m.groups())
        return clf.geometric_sizes(start, count, factor)
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad size schedule {text!r}") from None


def parse_seeds(text: str) -> tuple[int, ...]:
    """A count (``8`` means seeds 0..7) or an explicit comma list."""
    try:
        if "," in text:
            return tuple(int(x) for x in text.split(","))
        return tuple(range(int(text)))
    except ValueError:
        raise UsageError(f"bad seeds {text!r}") from None


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--family {args.family} requires " + ", ".join("--" + n for n in missing))


def build_graph(args) -> Graph:
    f = args.family
    if f == "complete":
        _need(args, "n")
        return gen.complete(args.n)
    if f == "star":
        _need(args, "n")
        return gen.star(args.n)
    if f == "chain":
        _need(args, "n")
        return gen.chain(args.n)
    if f == "chain-star":
        _need(args, "p", "q")
        return gen.chain_star(args.p, args.q)
    if f == "er":
        _need(args, "n", "z")
        rg = gen.erdos_renyi(args.n, args.z, args.seed)
        if rg.realized_n != rg.requested_n:
            print(f"giant component: {rg.realized_n} of {rg.requested_n} nodes", file=sys.stderr)
        return rg.graph
    if f == "ba":
        _need(args, "steps")
        return gen.barabasi_albert(args.v, args.m, args.steps, args.seed)
    if f == "layered":
        _need(args, "seq", "steps")
        return gen.layered(parse_sequence(args.seq, args.steps))
    raise UsageError(f"unknown family {f!r}")


def cmd_generate(args) -> int:
    g = build_graph(args)
    _write(dumps(graph_to_json(g)), args.output)
    print(f"nodes={g.n} edges={g.num_edges}", file=sys.stderr)
    return 0


def cmd_stats(args) -> int:
    g = load_graph(args.graph)
    a = alpha_array(g)
    out = summary_to_json(summarize(a))
    out["alpha"] = alpha_to_json(a)["alpha"]
    _write(dumps(out), args.output)
    return 0


def _jsonable(x):
    if isinstance(x, Fraction):
        return {"num": x.numerator, "den": x.denominator}
    return x


def cmd_oracle(args) -> int:
    f = args.family
    if f == "star":
        _need(args, "n")
        g = gen.star(args.n)
        oracle = {"diameter": 1 if args.n == 2 else 2, "mean": cf.star_mean(args.n),
                  "median": cf.star_median(args.n)}
        params = {"n": args.n}
    elif f == "chain":
        _need(args, "n")
        g = gen.chain(args.n)
        cs = cf.chain_stats(args.n)
        oracle = {"diameter": cs.diameter, "mean": cs.mean, "median": cs.median_exact}
        params = {"n": args.n}
    elif f == "chain-star":
        _need(args, "p", "q")
        g = gen.chain_star(args.p, args.q)
        oracle = {"mean": cf.chain_star_mean(args.p, args.q)}
        params = {"p": args.p, "q": args.q}
    elif f == "layered":
        _need(args, "steps")
        spec = parse_sequence(args.seq or "constant:2", args.steps)
        g = gen.layered(spec)
        oracle = {"diameter": cf.layered_diameter(args.steps)}
        params = {"steps": args.steps, "seq": args.seq or "constant:2"}
    else:
        raise UsageError(f"no exact oracle for family {f!r}")

    s = summarize(alpha_array(g))
    computed = {"diameter": s.diameter, "mean": s.mean, "median": s.median}
    if args.stat != "all":
        if args.stat not in oracle:
            raise UsageError(f"family {f!r} has no {args.stat} oracle")
        oracle = {args.stat: oracle[args.stat]}
    match = all(oracle[k] == computed[k] for k in oracle)
    if args.stat == "all":
        o = {k: _jsonable(v) for k, v in oracle.items()}
        c = {k: _jsonable(computed[k]) for k in oracle}
    else:
        o = _jsonable(oracle[args.stat])
        c = _jsonable(computed[args.stat])
    report = {"family": f, "params": params, "stat": args.stat,
              "oracle": o, "computed": c, "match": match}
    _write(dumps(report), args.output)
    return 0 if match else EXIT_MISMATCH


def _as_alpha(x: AlphaArray | Graph) -> AlphaArray:
    return x if isinstance(x, AlphaArray) else alpha_array(x)


def cmd_majorize(args) -> int:
    a = _as_alpha(load_alpha(args.file_a))
    b = _as_alpha(load_alpha(args.file_b))
    if a.n != b.n:
        raise FormatError(f"node counts differ: {a.n} vs {b.n}")
    verdict = compare(a, b)
    la, lb = lorenz_curve(a), lorenz_curve(b)
    notes = {
        Verdict.LESS: "B is the smaller world",
        Verdict.GREATER: "A is the smaller world",
        Verdict.EQUAL: "same distance distribution",
        Verdict.INCOMPARABLE: "not comparable",
    }
    out = {
        "verdict": verdict.value,
        "note": notes[verdict],
        "lorenz_a": [[float(x), float(y)] for x, y in la],
        "lorenz_b": [[float(x), float(y)] for x, y in lb],
    }
    _write(dumps(out), args.output)
    if args.csv:
        rows = [(k, float(x), float(ya), float(yb))
                for k, ((x, ya), (_, yb)) in enumerate(zip(la, lb))]
        Path(args.csv).write_text(to_csv(["k", "x", "y_a", "y_b"], rows))
    print(f"{verdict.value}: {notes[verdict]}", file=sys.stderr)
    return 0


_CLI_FAMILIES = {
    "complete": "complete", "star": "star", "chain": "chain",
    "chain-star-sqrt": "chain_star_sqrt", "chain-star-quarter": "chain_star_quarter",
    "er": "erdos_renyi", "ba": "barabasi_albert", "layered": "layered",
}


def build_family(args) -> clf.FamilySpec:
    name = _CLI_FAMILIES.get(args.family)
    if name is None:
        raise UsageError(f"unknown family {args.family!r}")
    if name == "layered":
        layers = parse_sequence(args.seq or "geometric:2", 1)
        default = clf.default_layered(layers.kind)
        sizes = parse_sizes(args.sizes) if args.sizes else default.sizes
        return clf.FamilySpec(name, sizes, layers=layers)
    default = clf.default_family(name)
    sizes = parse_sizes(args.sizes) if args.sizes else default.sizes
    seeds = parse_seeds(args.seeds) if args.seeds else default.seeds
    return clf.FamilySpec(name, sizes, seeds, z=args.z or 6.0, v=args.v, m=args.m)


def cmd_classify(args) -> int:
    spec = build_family(args)
    stat = clf.Stat.parse(args.stat)
    policy = clf.Policy(
        window=args.window,
        zero_exponent=args.zero_exponent,
        small_exponent=(args.small_min, args.small_max),
        tol_conv=args.tol_conv,
        div_factor=args.div_factor,
    )
    if policy.window < 4 or len(spec.sizes) < policy.window:
        raise UsageError("window must be >= 4 and no longer than the size schedule")
    series = clf.ratio_series(spec, stat)
    result = clf.classify(series, policy)
    _write(dumps(clf.report(spec, stat, series, result, policy)), args.output)
    if args.csv:
        rows = [(p.n, p.stat, p.ratio) for p in series.points]
        Path(args.csv).write_text(to_csv(["n", "stat", "ratio"], rows))
    print(f"{spec.label} {stat.value}: {result.verdict.value}", file=sys.stderr)
    return 0


def _family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--z", type=float)
    p.add_argument("--v", type=int, default=3)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--steps", type=int)
    p.add_argument("--seq", help="layer sequence, e.g. geometric:2 or explicit:2,3,2")
    p.add_argument("--seed", type=int, default=0)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="swlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a generated graph as JSON")
    p.add_argument("--family", required=True,
                   choices=["complete", "star", "chain", "chain-star", "er", "ba", "layered"])
    _family_args(p)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("stats", help="distance summary and alpha-array of a graph file")
    p.add_argument("graph")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("oracle", help="compare BFS statistics with closed forms")
    p.add_argument("--family", required=True, choices=["star", "chain", "chain-star", "layered"])
    p.add_argument("--stat", default="all", choices=["all", "diameter", "mean", "median"])
    _family_args(p)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("majorize", help="majorization verdict for two alpha-array or graph files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--csv", help="write both Lorenz curves here")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_majorize)

    p = sub.add_parser("classify", help="small-world verdict for a growing family")
    p.add_argument("--family", required=True, choices=sorted(_CLI_FAMILIES))
    p.add_argument("--stat", required=True, help="diameter|average|median (diam, avg, med)")
    p.add_argument("--sizes", help="e.g. 1024x2^5 or 16,32,64,128 (layered: step counts)")
    p.add_argument("--seeds", help="seed count or comma list")
    p.add_argument("--z", type=float)
    p.add_argument("--v", type=int, default=3)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--seq", help="layer sequence for --family layered")
    defaults = clf.Policy()
    p.add_argument("--window", type=int, default=defaults.window)
    p.add_argument("--zero-exponent", type=float, default=defaults.zero_exponent)
    p.add_argument("--small-min", type=float, default=defaults.small_exponent[0])
    p.add_argument("--small-max", type=float, default=defaults.small_exponent[1])
    p.add_argument("--tol-conv", type=float, default=defaults.tol_conv)
    p.add_argument("--div-factor", type=float, default=defaults.div_factor)
    p.add_argument("--csv", help="write the (n, stat, ratio) series here")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"swlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FormatError as exc:
        print(f"swlab: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except DisconnectedGraphError as exc:
        print(f"swlab: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except GraphError as exc:
        # invalid generator/oracle parameters
        print(f"swlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
