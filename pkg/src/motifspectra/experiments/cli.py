"""Command-line interface.

Subcommands: `generate` (sample a graph to a JSON file), `cluster`
(spectral clustering of a dataset or generated graph), `evaluate`
(misclustering rate of estimated vs true labels), `experiment` (run a
scenario config).  Exit codes: 0 success, 1 invalid arguments, 2
runtime failure; diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from ..evaluation import misclustered_count, misclustering_rate
from ..generators import (
    gen_balanced_assignment,
    gen_hypergraph_3uniform,
    gen_nonuniform_hypergraph_sbm,
    gen_sbm,
    gen_supsbm,
)
from ..graph_model import (
    BlockParams,
    CommunityAssignment,
    InvalidInputError,
    InvalidParamsError,
    SuperimposedGraph,
)
from ..spectral import METHOD_NAMES, cluster, named_method
from .config import ScenarioConfig
from .datasets import bundled_dataset, graph_from_dataset, ingest_edge_list
from .runners import run_experiment

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad arguments; the contract here is exit 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


_GENERATORS = {
    "sbm": gen_sbm,
    "hypergraph": gen_hypergraph_3uniform,
    "supsbm": gen_supsbm,
    "nonuniform": gen_nonuniform_hypergraph_sbm,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="motifspectra")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="sample a graph and write it as JSON")
    g.add_argument("--model", choices=sorted(_GENERATORS), default="supsbm")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--a-e", type=float, default=0.0, dest="a_e")
    g.add_argument("--b-e", type=float, default=0.0, dest="b_e")
    g.add_argument("--a-t", type=float, default=0.0, dest="a_t")
    g.add_argument("--b-t", type=float, default=0.0, dest="b_t")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True, help="output JSON path")

    c = sub.add_parser("cluster", help="spectral clustering of a graph")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help="graph JSON file from `generate`")
    src.add_argument("--edges", help="edge-list file")
    src.add_argument("--dataset", help="bundled dataset name")
    c.add_argument("--labels", help="ground-truth labels file (vertex label)")
    c.add_argument("--no-symmetrize", action="store_true",
                   help="treat duplicate undirected pairs in --edges as errors")
    c.add_argument("--largest-component", action="store_true",
                   help="restrict --edges input to its largest connected component")
    c.add_argument("--method", choices=list(METHOD_NAMES), default="spA")
    c.add_argument("--k", type=int, help="number of clusters (default: from labels)")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--restarts", type=int, default=20)
    c.add_argument("--out", help="write labels here instead of stdout")

    e = sub.add_parser("evaluate", help="misclustering rate of labels vs truth")
    e.add_argument("--truth", required=True, help="true labels file (vertex label)")
    e.add_argument("--est", required=True, help="estimated labels file (vertex label)")

    x = sub.add_parser("experiment", help="run a scenario config")
    x.add_argument("--config", required=True, help="scenario config JSON file")
    x.add_argument("--out", help="override the config output path")
    x.add_argument("--format", choices=["csv", "json"], default="csv")
    x.add_argument("--seed", type=int, help="override the config master seed")
    x.add_argument("--trials", type=int, help="override the config trial count")
    return parser


# ---------------------------------------------------------- graph JSON

def _write_graph(g: SuperimposedGraph, path: str) -> None:
    payload = {
        "n": int(g.n),
        "dyadic_edges": g.dyadic_edges.tolist(),
        "hyperedges": g.hyperedges.tolist(),
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)
        fh.write("\n")


def _read_graph(path: str) -> SuperimposedGraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path}: not valid JSON: {exc}") from exc
    missing = {"n", "dyadic_edges", "hyperedges"} - set(payload)
    if missing:
        raise InvalidInputError(f"{path}: missing keys {sorted(missing)}")
    return SuperimposedGraph(
        payload["n"], payload["dyadic_edges"], payload["hyperedges"]
    )


def _read_labels(path: str) -> dict:
    """Parse a `vertex label` file into an id -> label dict."""
    out = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            parts = text.split()
            if len(parts) != 2:
                raise InvalidInputError(
                    f"{path}:{lineno}: expected `vertex label`, got {line!r}"
                )
            try:
                v, lab = int(parts[0]), int(parts[1])
            except ValueError:
                raise InvalidInputError(
                    f"{path}:{lineno}: non-integer field in {line!r}"
                ) from None
            if v in out and out[v] != lab:
                raise InvalidInputError(f"{path}:{lineno}: conflicting label for {v}")
            out[v] = lab
    if not out:
        raise InvalidInputError(f"{path}: no labels found")
    return out


def _assignment_from_dict(labels: dict, order: list) -> CommunityAssignment:
    raw = np.array([labels[v] for v in order], dtype=np.int64)
    _, compact = np.unique(raw, return_inverse=True)
    k = int(compact.max()) + 1 if compact.size else 1
    return CommunityAssignment(compact.astype(np.int64), max(k, 1))


# ---------------------------------------------------------- subcommands

def _cmd_generate(args) -> int:
    params = BlockParams(n=args.n, k=args.k, a_e=args.a_e, b_e=args.b_e,
                         a_t=args.a_t, b_t=args.b_t)
    assignment = gen_balanced_assignment(params.n, params.k)
    g = _GENERATORS[args.model](params, assignment, args.seed)
    _write_graph(g, args.out)
    print(f"wrote {args.out}: n={g.n} edges={len(g.dyadic_edges)} "
          f"hyperedges={len(g.hyperedges)}")
    return 0


def _cmd_cluster(args) -> int:
    truth = None
    original_ids = None
    if args.graph:
        g = _read_graph(args.graph)
        if args.labels:
            labels = _read_labels(args.labels)
            ids = sorted(labels)
            if ids != list(range(g.n)):
                raise InvalidInputError(
                    f"{args.labels}: label vertices must be exactly 0..{g.n - 1}"
                )
            truth = _assignment_from_dict(labels, ids)
    elif args.edges:
        ds = ingest_edge_list(
            args.edges, args.labels,
            symmetrize=not args.no_symmetrize,
            largest_component=args.largest_component,
        )
        g = graph_from_dataset(ds)
        original_ids = ds.original_ids
        if ds.labels is not None:
            truth = CommunityAssignment(ds.labels, ds.k)
    else:
        ds = bundled_dataset(args.dataset)
        g = graph_from_dataset(ds)
        original_ids = ds.original_ids
        if ds.labels is not None:
            truth = CommunityAssignment(ds.labels, ds.k)

    k = args.k if args.k is not None else (truth.k if truth is not None else None)
    if k is None:
        raise InvalidParamsError("--k is required when no ground-truth labels exist")
    est = cluster(g, named_method(args.method), k, args.seed, restarts=args.restarts)

    ids = original_ids if original_ids is not None else list(range(g.n))
    lines = [f"{ids[i]} {int(est.labels[i])}" for i in range(g.n)]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    else:
        print("\n".join(lines))
    if truth is not None:
        mc = misclustered_count(truth, est)
        rate = misclustering_rate(truth, est)
        print(f"# misclustered={mc} rate={rate:.6g}")
    return 0


def _cmd_evaluate(args) -> int:
    truth = _read_labels(args.truth)
    est = _read_labels(args.est)
    if set(truth) != set(est):
        raise InvalidInputError(
            f"vertex sets differ between {args.truth} and {args.est}"
        )
    order = sorted(truth)
    rate = misclustering_rate(
        _assignment_from_dict(truth, order), _assignment_from_dict(est, order)
    )
    print(f"R={rate:.6g}")
    return 0


def _cmd_experiment(args) -> int:
    overrides = {}
    if args.out is not None:
        overrides["output_path"] = args.out
    if args.seed is not None:
        overrides["master_seed"] = args.seed
    if args.trials is not None:
        overrides["trials"] = args.trials
    config = ScenarioConfig.from_json(args.config, **overrides)
    result = run_experiment(config, fmt=args.format)
    print(f"wrote {config.output_path}: {len(result.rows)} rows")
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "cluster": _cmd_cluster,
    "evaluate": _cmd_evaluate,
    "experiment": _cmd_experiment,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except InvalidParamsError as exc:
        # bad parameter values are argument errors, not runtime failures
        print(f"motifspectra {args.command}: error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:
        print(f"motifspectra {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
