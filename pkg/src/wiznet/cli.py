"""Command-line interface.

Every subcommand is a pure function of its input files and flags: running
twice produces byte-identical output. Exit codes: 0 success, 1 usage error,
2 data error. Errors print a single machine-parsable line `error: ...` on
stderr.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import IO, Iterator

from . import __version__
from .classify import (
    ClassificationConfig,
    classify_words,
    extract_buzznet,
    extract_wiznet,
    write_class_csv,
)
from .core import WordNet, load_wordnet, write_edge_csv, write_json_graph
from .errors import WizNetError
from .generate import GrowthParams, generate_wordnet, generation_metadata
from .hypotheses import degree_histogram, fit_power_law, pareto_share, reach_comparison
from .likelihood import global_wizword_likelihood, local_wizword_likelihood
from .paths import shortest_wizpath, widest_wizpath, wiznet_coverage
from .report import build_report
from .scores import (
    METHOD_BASIC,
    METHOD_FAIR_ITERATIVE,
    METHOD_FAIR_ONELEVEL,
    SolverConfig,
    compute_scores,
    write_score_csv,
)

_METHOD_FLAG = {
    "basic": METHOD_BASIC,
    "fair": METHOD_FAIR_ONELEVEL,
    "fair-iterative": METHOD_FAIR_ITERATIVE,
}


class _Parser(argparse.ArgumentParser):
    """argparse maps usage problems to exit code 2; this toolkit uses 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


@contextlib.contextmanager
def _open_out(path: str | None) -> Iterator[IO[str]]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _dump_json(obj, fh: IO[str]) -> None:
    json.dump(obj, fh, indent=2)
    fh.write("\n")


def _load_net(parser: _Parser, args: argparse.Namespace) -> WordNet:
    if (args.edges is None) == (args.graph is None):
        parser.error("exactly one of --edges or --graph is required")
    if args.graph is not None:
        return load_wordnet(args.graph, format="json", merge_duplicates=args.merge_duplicates)
    return load_wordnet(
        args.edges,
        format="csv",
        nodes_path=args.nodes,
        merge_duplicates=args.merge_duplicates,
    )


def _solver_config(args: argparse.Namespace) -> SolverConfig:
    return SolverConfig(
        damping=args.damping, tolerance=args.tol, max_iterations=args.max_iter
    )


def _class_config(args: argparse.Namespace, method: str) -> ClassificationConfig:
    return ClassificationConfig(
        tau=args.tau, buzz_quantile=args.buzz_quantile, score_method=method
    )


def _config_echo(args: argparse.Namespace, method: str) -> dict:
    echo = {"method": method}
    for flag in ("tau", "buzz_quantile", "damping", "tol", "max_iter", "top_fraction"):
        if hasattr(args, flag):
            echo[flag] = getattr(args, flag)
    return echo


def build_parser() -> _Parser:
    parser = _Parser(prog="wiznet", description=__doc__)
    parser.add_argument("--version", action="version", version=f"wiznet {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    inputs = _Parser(add_help=False)
    inputs.add_argument("--edges", help="edge CSV (header source,target[,weight])")
    inputs.add_argument("--nodes", help="optional node CSV (header id,label)")
    inputs.add_argument("--graph", help="JSON graph file (alternative to --edges)")
    inputs.add_argument(
        "--merge-duplicates",
        choices=["max"],
        default=None,
        help="merge repeated (source,target) pairs by maximum weight instead of failing",
    )

    method = _Parser(add_help=False)
    method.add_argument(
        "--method",
        choices=sorted(_METHOD_FLAG),
        default="fair",
        help="scoring method (default: fair, the one-level weighted score)",
    )
    method.add_argument("--damping", type=float, default=0.85, help="fixed-point damping")
    method.add_argument("--tol", type=float, default=1e-9, help="solver tolerance")
    method.add_argument("--max-iter", type=int, default=100, help="solver iteration cap")

    classes = _Parser(add_help=False)
    classes.add_argument("--tau", type=float, default=0.75, help="wizword score threshold")
    classes.add_argument(
        "--buzz-quantile", type=float, default=0.9, help="buzzword in-degree quantile"
    )

    out = _Parser(add_help=False)
    out.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("ingest", parents=[inputs, out], help="validate and normalize a wordnet")
    p.add_argument("--format", choices=["json", "csv"], default="json")

    sub.add_parser(
        "score", parents=[inputs, method, out], help="write the score table CSV"
    )

    sub.add_parser(
        "classify",
        parents=[inputs, method, classes, out],
        help="write the wizword/buzzword/plain class CSV",
    )

    p = sub.add_parser(
        "extract",
        parents=[inputs, method, classes, out],
        help="emit the wiznet or buzznet as a JSON graph",
    )
    p.add_argument("--subnet", choices=["wiz", "buzz"], required=True)

    p = sub.add_parser(
        "complexity",
        parents=[inputs, method, classes, out],
        help="wizword-generation likelihood (global, or local with --based-on)",
    )
    p.add_argument("--based-on", help="word id for the local likelihood")

    p = sub.add_parser(
        "path",
        parents=[inputs, method, classes, out],
        help="mine a wizpath between two wizwords",
    )
    p.add_argument("--from", dest="from_word", required=True)
    p.add_argument("--to", dest="to_word", required=True)
    p.add_argument("--mode", choices=["shortest", "widest"], default="shortest")

    p = sub.add_parser(
        "hypo",
        parents=[inputs, method, classes, out],
        help="distribution and reach diagnostics",
    )
    p.add_argument("--test", choices=["pareto", "powerlaw", "coverage", "reach"], required=True)
    p.add_argument("--top-fraction", type=float, default=0.2)
    p.add_argument(
        "--histogram-out",
        default="degree_histogram.csv",
        help="where `--test powerlaw` writes the value,count histogram",
    )

    p = sub.add_parser("generate", parents=[out], help="grow a synthetic wordnet")
    p.add_argument("--nodes", type=int, required=True, help="total node count")
    p.add_argument("--m", type=int, required=True, help="references added per arriving node")
    p.add_argument("--alpha", type=float, default=0.0, help="preferential-attachment probability")
    p.add_argument("--beta", type=float, default=0.0, help="flow-copying probability")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weight-mode", choices=["unit", "uniform_random"], default="unit")

    p = sub.add_parser(
        "report",
        parents=[inputs, method, classes, out],
        help="full JSON analysis report",
    )
    p.add_argument("--top-fraction", type=float, default=0.2)

    return parser


def _cmd_ingest(parser: _Parser, args) -> int:
    net = _load_net(parser, args)
    with _open_out(args.out) as fh:
        if args.format == "json":
            write_json_graph(net, fh)
        else:
            write_edge_csv(net, fh)
    return 0


def _cmd_score(parser: _Parser, args) -> int:
    net = _load_net(parser, args)
    table = compute_scores(net, _METHOD_FLAG[args.method], _solver_config(args))
    with _open_out(args.out) as fh:
        write_score_csv(net, table, fh)
    return 0


def _classified(parser: _Parser, args):
    net = _load_net(parser, args)
    method = _METHOD_FLAG[args.method]
    table = compute_scores(net, method, _solver_config(args))
    classification = classify_words(net, table, _class_config(args, method))
    return net, table, classification


def _cmd_classify(parser: _Parser, args) -> int:
    net, table, classification = _classified(parser, args)
    with _open_out(args.out) as fh:
        write_class_csv(net, classification, table, fh)
    return 0


def _cmd_extract(parser: _Parser, args) -> int:
    net, _, classification = _classified(parser, args)
    subnet = (
        extract_wiznet(net, classification)
        if args.subnet == "wiz"
        else extract_buzznet(net, classification)
    )
    with _open_out(args.out) as fh:
        write_json_graph(subnet, fh)
    return 0


def _cmd_complexity(parser: _Parser, args) -> int:
    net, _, classification = _classified(parser, args)
    if args.based_on is None:
        report = global_wizword_likelihood(classification)
    else:
        report = local_wizword_likelihood(net, classification, args.based_on)
    payload = report.as_dict()
    payload["config"] = _config_echo(args, _METHOD_FLAG[args.method])
    with _open_out(args.out) as fh:
        _dump_json(payload, fh)
    return 0


def _cmd_path(parser: _Parser, args) -> int:
    net, table, classification = _classified(parser, args)
    mine = shortest_wizpath if args.mode == "shortest" else widest_wizpath
    path = mine(net, table, classification, args.from_word, args.to_word)
    with _open_out(args.out) as fh:
        _dump_json(path.as_dict() if path is not None else None, fh)
    return 0


def _cmd_hypo(parser: _Parser, args) -> int:
    net, _, classification = _classified(parser, args)
    method = _METHOD_FLAG[args.method]
    if args.test == "pareto":
        result = pareto_share(net, args.top_fraction).as_dict()
    elif args.test == "powerlaw":
        positive = net.in_degrees[net.in_degrees > 0]
        result = fit_power_law(positive).as_dict()
        with open(args.histogram_out, "w", encoding="utf-8", newline="") as fh:
            fh.write("value,count\n")
            for value, count in degree_histogram(net):
                fh.write(f"{value},{count}\n")
    elif args.test == "coverage":
        result = {"coverage": wiznet_coverage(net, classification)}
    else:
        result = reach_comparison(net, classification).as_dict()
    payload = {"test": args.test, "result": result, "config": _config_echo(args, method)}
    with _open_out(args.out) as fh:
        _dump_json(payload, fh)
    return 0


def _cmd_generate(parser: _Parser, args) -> int:
    params = GrowthParams(
        n_nodes=args.nodes,
        m_edges_per_node=args.m,
        alpha=args.alpha,
        beta=args.beta,
        seed=args.seed,
        weight_mode=args.weight_mode,
    )
    net = generate_wordnet(params)
    with _open_out(args.out) as fh:
        write_edge_csv(net, fh)
    if args.out is not None:
        with open(f"{args.out}.meta.json", "w", encoding="utf-8") as fh:
            _dump_json(generation_metadata(params), fh)
    return 0


def _cmd_report(parser: _Parser, args) -> int:
    net = _load_net(parser, args)
    method = _METHOD_FLAG[args.method]
    report = build_report(
        net,
        method=method,
        solver_config=_solver_config(args),
        class_config=_class_config(args, method),
        top_fraction=args.top_fraction,
    )
    with _open_out(args.out) as fh:
        _dump_json(report, fh)
    return 0


_COMMANDS = {
    "ingest": _cmd_ingest,
    "score": _cmd_score,
    "classify": _cmd_classify,
    "extract": _cmd_extract,
    "complexity": _cmd_complexity,
    "path": _cmd_path,
    "hypo": _cmd_hypo,
    "generate": _cmd_generate,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](parser, args)
    except WizNetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # usage errors raised past parsing (e.g. input choice)
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
