"""Monte Carlo experiment runners.

Every trial seed is a pure function of (master seed, stream name, grid
indices, trial index), so any output row can be re-run in isolation and
re-running a config reproduces its files byte for byte.  Trial work is
dispatched through an order-preserving map that may use worker
processes; MOTIFSPECTRA_THREADS caps the worker count (default: machine
parallelism) and the results are identical at any worker count.
"""

from __future__ import annotations

import json
import math
import os
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import kendalltau

from ..estimators import estimate_block_params, estimate_delta, estimate_m
from ..evaluation import concentration_ratio, misclustered_count, misclustering_rate, normalizers
from ..generators import (
    check_growth_window,
    gen_balanced_assignment,
    gen_hypergraph_3uniform,
    gen_nonuniform_hypergraph_sbm,
    gen_sbm,
    gen_supsbm,
)
from ..graph_model import BlockParams, CommunityAssignment, InvalidParamsError
from ..motif import decompose_triangles, expected_AE3, expected_AT2, triangle_motif_observed
from ..spectral import METHOD_NAMES, cluster_matrix, embedding, kmeans, named_method
from .config import ScenarioConfig, write_rows
from .datasets import Dataset, bundled_dataset, graph_from_dataset, ingest_edge_list

__all__ = [
    "derive_trial_seed",
    "max_workers",
    "ExperimentResult",
    "run_table1",
    "run_concentration_scaling",
    "run_misclustering_vs_gap",
    "run_tradeoff_crossover",
    "run_weighted_sweep",
    "run_sbm_triangle_density",
    "run_experiment",
]


def derive_trial_seed(master_seed: int, stream: str, *indices: int) -> int:
    """Deterministic per-trial seed from the master seed, a stream name,
    and grid/trial indices."""
    tag = zlib.crc32(stream.encode("utf-8"))
    ss = np.random.SeedSequence([int(master_seed), tag, *(int(i) for i in indices)])
    return int(ss.generate_state(1, np.uint64)[0])


def max_workers() -> int:
    """Worker cap: MOTIFSPECTRA_THREADS when set, else machine parallelism."""
    env = os.environ.get("MOTIFSPECTRA_THREADS")
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise InvalidParamsError(
                f"MOTIFSPECTRA_THREADS must be an integer, got {env!r}"
            ) from None
        if value < 1:
            raise InvalidParamsError("MOTIFSPECTRA_THREADS must be at least 1")
        return value
    return os.cpu_count() or 1


def _map_trials(fn, tasks):
    """Order-preserving map over picklable trial tasks.

    Worker results depend only on the task tuple, so the output is the
    same sequentially or across any number of processes.
    """
    tasks = list(tasks)
    workers = max_workers()
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        return list(pool.map(fn, tasks))


@dataclass
class ExperimentResult:
    scenario: str
    fieldnames: list
    rows: list
    summary: dict = field(default_factory=dict)
    summary_fieldnames: list | None = None
    summary_rows: list | None = None


def _median(values) -> float:
    return float(np.median(np.asarray(values, dtype=np.float64)))


def _mean(values) -> float:
    return float(np.mean(np.asarray(values, dtype=np.float64)))


def _block_params(d: dict) -> BlockParams:
    return BlockParams(
        n=int(d["n"]), k=int(d["k"]), a_e=float(d["a_e"]), b_e=float(d["b_e"]),
        a_t=float(d["a_t"]), b_t=float(d["b_t"]),
    )


def _params_dict(p: BlockParams) -> dict:
    return {"n": p.n, "k": p.k, "a_e": p.a_e, "b_e": p.b_e, "a_t": p.a_t, "b_t": p.b_t}


# ---------------------------------------------------------------- table1

def _dataset_from_spec(spec) -> Dataset:
    if isinstance(spec, str):
        return bundled_dataset(spec)
    if "edges" not in spec:
        return bundled_dataset(spec["name"])
    return ingest_edge_list(
        spec["edges"],
        spec.get("labels"),
        symmetrize=bool(spec.get("symmetrize", True)),
        largest_component=bool(spec.get("largest_component", False)),
        name=spec.get("name"),
    )


_TABLE1_FIELDS = [
    "dataset", "n", "k", "method", "trial", "seed", "restarts",
    "misclustered", "rate",
]


def run_table1(config: ScenarioConfig) -> ExperimentResult:
    """Misclustered-vertex counts of the six named variants on labeled
    benchmark graphs; one row per (dataset, method, seed trial), with a
    min/median summary per cell.  `trials` is the number of seeds."""
    p = config.params
    specs = p.get("datasets")
    if not specs:
        raise InvalidParamsError("table1 needs a non-empty params.datasets list")
    methods = list(p.get("methods", METHOD_NAMES))
    restarts = int(p.get("restarts", 20))
    rows = []
    for di, spec in enumerate(specs):
        ds = _dataset_from_spec(spec)
        if ds.labels is None:
            raise InvalidParamsError(f"dataset {ds.name!r} has no ground-truth labels")
        truth = CommunityAssignment(ds.labels, ds.k)
        g = graph_from_dataset(ds)
        for mi, mname in enumerate(methods):
            method = named_method(mname)
            pts = embedding(g, method, truth.k)
            for t in range(config.trials):
                seed = derive_trial_seed(config.master_seed, "table1", di, mi, t)
                est = kmeans(pts, truth.k, restarts=restarts, seed=seed)
                mc = misclustered_count(truth, est)
                rows.append({
                    "dataset": ds.name, "n": int(ds.n), "k": int(truth.k),
                    "method": mname, "trial": t, "seed": seed,
                    "restarts": restarts, "misclustered": int(mc),
                    "rate": float(mc / ds.n),
                })
    summary_rows = []
    seen = []
    for row in rows:
        key = (row["dataset"], row["method"])
        if key not in seen:
            seen.append(key)
    for dataset, mname in seen:
        counts = [r["misclustered"] for r in rows
                  if r["dataset"] == dataset and r["method"] == mname]
        summary_rows.append({
            "dataset": dataset, "method": mname,
            "min_misclustered": int(min(counts)),
            "median_misclustered": _median(counts),
        })
    summary = {
        f"{r['dataset']}/{r['method']}": {
            "min": r["min_misclustered"], "median": r["median_misclustered"],
        }
        for r in summary_rows
    }
    return ExperimentResult(
        scenario="table1", fieldnames=_TABLE1_FIELDS, rows=rows, summary=summary,
        summary_fieldnames=["dataset", "method", "min_misclustered", "median_misclustered"],
        summary_rows=summary_rows,
    )


# ------------------------------------------------- concentration_scaling

# component -> (normalizer field, exponent)
_CONC_SPECS = {
    "a_t2": ("delta_t", "half"),
    "a_e3": ("d_e3", "half"),
    "a_t3": ("delta_t3", "one"),
    "a_t2e": ("delta_t2e", "one"),
    "a_te2": ("delta_te2", "one"),
    "a_t": ("delta_t", "half"),
}

_CONC_FIELDS = [
    "n", "k", "a_e", "b_e", "a_t", "b_t", "p_e_max", "p_t_max",
    "component", "trial", "seed", "ratio", "normalizer", "exponent",
    "mc_trials", "window_edge_lower", "window_edge_upper",
    "window_triangle_lower", "window_triangle_upper", "window_coupling",
]

_MC_COMPONENTS = ("a_t3", "a_t2e", "a_te2")


def _conc_mc_task(task):
    """Monte Carlo expectation batch member: the three overlap-category
    matrices of one independent draw."""
    params_d, seed = task
    params = _block_params(params_d)
    assignment = gen_balanced_assignment(params.n, params.k)
    d = decompose_triangles(gen_supsbm(params, assignment, seed))
    return d.a_t3, d.a_t2e, d.a_te2


def _conc_eval_task(task):
    """One evaluation draw: the requested component matrices."""
    params_d, seed, needs_decomp, components = task
    params = _block_params(params_d)
    assignment = gen_balanced_assignment(params.n, params.k)
    g = gen_supsbm(params, assignment, seed)
    if needs_decomp:
        d = decompose_triangles(g)
        mats = d.categories()
        mats["a_t"] = d.total()
    else:
        mats = {"a_t2": g.cover_matrix}
    return {c: mats[c] for c in components}


def run_concentration_scaling(config: ScenarioConfig) -> ExperimentResult:
    """Spectral deviation of motif matrices from their expectations,
    scaled by the theory normalizers, across a grid of sizes.

    Expectations of the hyperedge-cover and all-dyadic-triangle
    matrices use closed forms; the three overlap categories (and hence
    the total) use an independent Monte Carlo batch of `mc_trials`
    draws.
    """
    p = config.params
    grid = p.get("grid")
    if not grid:
        raise InvalidParamsError("concentration_scaling needs a non-empty params.grid")
    k = int(p.get("k", 2))
    components = list(p.get("components", _CONC_SPECS))
    unknown = [c for c in components if c not in _CONC_SPECS]
    if unknown:
        raise InvalidParamsError(f"unknown components {unknown}; have {list(_CONC_SPECS)}")
    mc_trials = int(p.get("mc_trials", 200))
    epsilon = float(p.get("epsilon", 0.05))
    needs_mc = any(c in _MC_COMPONENTS or c == "a_t" for c in components)
    needs_decomp = any(c != "a_t2" for c in components)

    rows = []
    for gi, point in enumerate(grid):
        params = _block_params({**point, "k": point.get("k", k)})
        pd = _params_dict(params)
        assignment = gen_balanced_assignment(params.n, params.k)
        window = check_growth_window(params, epsilon)
        norms = normalizers(params.n, params.p_e_within, params.p_t_within)

        expect = {"a_t2": expected_AT2(params, assignment)}
        if needs_decomp:
            expect["a_e3"] = expected_AE3(params, assignment)
        if needs_mc:
            tasks = [
                (pd, derive_trial_seed(config.master_seed, "concentration_scaling:mc", gi, b))
                for b in range(mc_trials)
            ]
            acc = {c: np.zeros((params.n, params.n)) for c in _MC_COMPONENTS}
            for t3, t2e, te2 in _map_trials(_conc_mc_task, tasks):
                acc["a_t3"] += t3
                acc["a_t2e"] += t2e
                acc["a_te2"] += te2
            for c, m in acc.items():
                expect[c] = m / mc_trials
            expect["a_t"] = (
                expect["a_t2"] + expect["a_e3"]
                + expect["a_t3"] + expect["a_t2e"] + expect["a_te2"]
            )

        tasks = [
            (
                pd,
                derive_trial_seed(config.master_seed, "concentration_scaling", gi, t),
                needs_decomp,
                tuple(components),
            )
            for t in range(config.trials)
        ]
        for t, mats in enumerate(_map_trials(_conc_eval_task, tasks)):
            seed = tasks[t][1]
            for comp in components:
                nfield, expo = _CONC_SPECS[comp]
                normalizer = float(getattr(norms, nfield))
                ratio = concentration_ratio(mats[comp], expect[comp], normalizer, expo)
                rows.append({
                    "n": params.n, "k": params.k,
                    "a_e": params.a_e, "b_e": params.b_e,
                    "a_t": params.a_t, "b_t": params.b_t,
                    "p_e_max": params.p_e_within, "p_t_max": params.p_t_within,
                    "component": comp, "trial": t, "seed": seed,
                    "ratio": float(ratio), "normalizer": normalizer,
                    "exponent": expo,
                    "mc_trials": mc_trials if needs_mc and comp != "a_t2" and comp != "a_e3" else 0,
                    "window_edge_lower": window.edge_lower,
                    "window_edge_upper": window.edge_upper,
                    "window_triangle_lower": window.triangle_lower,
                    "window_triangle_upper": window.triangle_upper,
                    "window_coupling": window.coupling,
                })

    summary = {}
    ns = sorted({int(r["n"]) for r in rows})
    for comp in components:
        medians, means, maxes = [], [], []
        for n in ns:
            vals = [r["ratio"] for r in rows if r["component"] == comp and r["n"] == n]
            medians.append(_median(vals))
            means.append(_mean(vals))
            maxes.append(float(max(vals)))
        tau = None
        if len(ns) > 1:
            stat = kendalltau(ns, medians).statistic
            tau = None if math.isnan(stat) else float(stat)
        summary[comp] = {
            "n": ns, "median_ratio": medians, "mean_ratio": means,
            "max_ratio": maxes, "kendall_tau": tau,
        }
    return ExperimentResult(
        scenario="concentration_scaling", fieldnames=_CONC_FIELDS,
        rows=rows, summary=summary,
    )


# ------------------------------------------------- misclustering_vs_gap

_GAP_FIELDS = [
    "model", "gap", "n", "k", "a_e", "b_e", "a_t", "b_t",
    "trial", "seed", "rate",
]


def _gap_trial(task):
    params_d, model, seed, row_norm, restarts = task
    params = _block_params(params_d)
    truth = gen_balanced_assignment(params.n, params.k)
    if model == "supsbm":
        g = gen_supsbm(params, truth, seed)
        matrix = decompose_triangles(g).total()
    else:
        g = gen_hypergraph_3uniform(params, truth, seed)
        matrix = g.cover_matrix
    est = cluster_matrix(
        matrix.astype(np.float64), params.k, seed,
        row_normalize_rows=row_norm, restarts=restarts,
    )
    return float(misclustering_rate(truth, est))


def run_misclustering_vs_gap(config: ScenarioConfig) -> ExperimentResult:
    """Misclustering of adjacency-spectral clustering on the generative
    triangle-motif matrix (superimposed model) and on the hyperedge-cover
    matrix (pure 3-uniform model), across a triangle-signal grid."""
    p = config.params
    n = int(p["n"])
    k = int(p.get("k", 2))
    a_t = float(p["a_t"])
    gaps = [float(x) for x in p.get("gap_grid", [])]
    if not gaps:
        raise InvalidParamsError("misclustering_vs_gap needs a non-empty params.gap_grid")
    a_e = float(p.get("a_e", 0.0))
    b_e = float(p.get("b_e", 0.0))
    restarts = int(p.get("restarts", 20))
    row_norm = bool(p.get("row_normalize", False))
    models = tuple(p.get("models", ("supsbm", "hypergraph")))
    unknown = [m for m in models if m not in ("supsbm", "hypergraph")]
    if unknown or not models:
        raise InvalidParamsError(
            f"models must be a non-empty subset of ('supsbm', 'hypergraph'), got {models}"
        )

    tasks, meta = [], []
    for gi, gap in enumerate(gaps):
        b_t = a_t - gap
        params = BlockParams(n=n, k=k, a_e=a_e, b_e=b_e, a_t=a_t, b_t=b_t)
        pd = _params_dict(params)
        for mi, model in enumerate(models):
            for t in range(config.trials):
                seed = derive_trial_seed(
                    config.master_seed, "misclustering_vs_gap", gi, mi, t
                )
                tasks.append((pd, model, seed, row_norm, restarts))
                meta.append((gap, params, model, t, seed))
    rates = _map_trials(_gap_trial, tasks)
    rows = [
        {
            "model": model, "gap": gap, "n": n, "k": k,
            "a_e": a_e, "b_e": b_e, "a_t": a_t, "b_t": params.b_t,
            "trial": t, "seed": seed, "rate": rate,
        }
        for (gap, params, model, t, seed), rate in zip(meta, rates)
    ]
    summary = {}
    for model in models:
        curve = []
        for gap in gaps:
            vals = [r["rate"] for r in rows if r["model"] == model and r["gap"] == gap]
            curve.append({"gap": gap, "mean_rate": _mean(vals), "median_rate": _median(vals)})
        summary[model] = curve
    return ExperimentResult(
        scenario="misclustering_vs_gap", fieldnames=_GAP_FIELDS,
        rows=rows, summary=summary,
    )


# -------------------------------------------------- tradeoff_crossover

_TRADEOFF_FIELDS = [
    "delta", "n", "k", "m", "a_e", "b_e", "a_t", "b_t", "weight",
    "trial", "seed", "rate_edge", "rate_triangle", "rate_weighted",
    "delta_hat", "m_hat",
]


def _tradeoff_trial(task):
    params_d, seed, weight, row_norm, restarts = task
    params = _block_params(params_d)
    truth = gen_balanced_assignment(params.n, params.k)
    g = gen_nonuniform_hypergraph_sbm(params, truth, seed)
    edge_m = g.dyadic_matrix.astype(np.float64)
    tri_m = g.cover_matrix.astype(np.float64)
    rates = {}
    for key, mat in (
        ("edge", edge_m),
        ("triangle", tri_m),
        ("weighted", edge_m + weight * tri_m),
    ):
        est = cluster_matrix(
            mat, params.k, seed, row_normalize_rows=row_norm, restarts=restarts,
        )
        rates[key] = float(misclustering_rate(truth, est))
    try:
        d_hat = estimate_delta(g)
        m_hat = estimate_m(d_hat, estimate_block_params(g, truth))
    except Exception:
        d_hat, m_hat = float("nan"), float("nan")
    return rates["edge"], rates["triangle"], rates["weighted"], d_hat, m_hat


def _crossover(deltas, diffs):
    """First sign change of rate_triangle - rate_edge along the grid,
    interpolated in log(delta); None when the curves never cross."""
    for i in range(len(deltas) - 1):
        d0, d1 = diffs[i], diffs[i + 1]
        if d0 == 0.0:
            return float(deltas[i])
        if (d0 < 0.0 < d1) or (d0 > 0.0 > d1):
            x0, x1 = math.log(deltas[i]), math.log(deltas[i + 1])
            frac = -d0 / (d1 - d0)
            return float(math.exp(x0 + frac * (x1 - x0)))
    if diffs and diffs[-1] == 0.0:
        return float(deltas[-1])
    return None


def run_tradeoff_crossover(config: ScenarioConfig) -> ExperimentResult:
    """Edge-only vs triangle-only vs weighted clustering error across a
    grid of relative densities delta, under the planted coupling
    a_t = a_e/delta, a_t - b_t = m (a_e - b_e)/delta."""
    p = config.params
    n = int(p["n"])
    k = int(p.get("k", 2))
    m_signal = float(p.get("m", 1.0))
    a_e = float(p["a_e"])
    b_e = float(p["b_e"])
    weight = float(p.get("weight", 1.0))
    restarts = int(p.get("restarts", 20))
    row_norm = bool(p.get("row_normalize", False))
    deltas = [float(x) for x in p.get("delta_grid", [])]
    if not deltas or sorted(deltas) != deltas:
        raise InvalidParamsError("tradeoff_crossover needs an ascending params.delta_grid")

    tasks, meta = [], []
    for gi, delta in enumerate(deltas):
        if delta <= 0:
            raise InvalidParamsError("delta values must be positive")
        a_t = a_e / delta
        b_t = a_t - m_signal * (a_e - b_e) / delta
        params = BlockParams(n=n, k=k, a_e=a_e, b_e=b_e, a_t=a_t, b_t=b_t)
        pd = _params_dict(params)
        for t in range(config.trials):
            seed = derive_trial_seed(config.master_seed, "tradeoff_crossover", gi, t)
            tasks.append((pd, seed, weight, row_norm, restarts))
            meta.append((delta, params, t, seed))
    results = _map_trials(_tradeoff_trial, tasks)
    rows = [
        {
            "delta": delta, "n": n, "k": k, "m": m_signal,
            "a_e": a_e, "b_e": b_e, "a_t": params.a_t, "b_t": params.b_t,
            "weight": weight, "trial": t, "seed": seed,
            "rate_edge": r_e, "rate_triangle": r_t, "rate_weighted": r_w,
            "delta_hat": d_hat, "m_hat": m_hat,
        }
        for (delta, params, t, seed), (r_e, r_t, r_w, d_hat, m_hat)
        in zip(meta, results)
    ]

    curves = {"mean": {}, "median": {}}
    for stat, fn in (("mean", _mean), ("median", _median)):
        for key in ("rate_edge", "rate_triangle", "rate_weighted"):
            curves[stat][key] = [
                fn([r[key] for r in rows if r["delta"] == d]) for d in deltas
            ]
    summary = {"delta_grid": deltas, "curves": curves}
    for stat in ("mean", "median"):
        diffs = [
            t - e for t, e in zip(curves[stat]["rate_triangle"], curves[stat]["rate_edge"])
        ]
        star = _crossover(deltas, diffs)
        summary[f"crossover_delta_{stat}"] = star
        summary[f"criterion_{stat}"] = (
            None if star is None else star / (m_signal**2 * n)
        )
    return ExperimentResult(
        scenario="tradeoff_crossover", fieldnames=_TRADEOFF_FIELDS,
        rows=rows, summary=summary,
    )


# ------------------------------------------------------ weighted_sweep

_WEIGHTED_FIELDS = [
    "weight", "n", "k", "m", "a_e", "b_e", "a_t", "b_t",
    "trial", "seed", "rate",
]


def _weighted_trial(task):
    params_d, seed, weight, row_norm, restarts = task
    params = _block_params(params_d)
    truth = gen_balanced_assignment(params.n, params.k)
    g = gen_nonuniform_hypergraph_sbm(params, truth, seed)
    mat = g.dyadic_matrix.astype(np.float64) + weight * g.cover_matrix
    est = cluster_matrix(
        mat, params.k, seed, row_normalize_rows=row_norm, restarts=restarts,
    )
    return float(misclustering_rate(truth, est))


def run_weighted_sweep(config: ScenarioConfig) -> ExperimentResult:
    """Clustering error of the weighted edge + w x hyperedge-cover matrix
    across a grid of weights w, at fixed model parameters."""
    p = config.params
    params = _block_params({
        "n": p["n"], "k": p.get("k", 2), "a_e": p["a_e"], "b_e": p["b_e"],
        "a_t": p["a_t"], "b_t": p["b_t"],
    })
    pd = _params_dict(params)
    restarts = int(p.get("restarts", 20))
    row_norm = bool(p.get("row_normalize", False))
    weights = [float(x) for x in p.get("weight_grid", [])]
    if not weights:
        raise InvalidParamsError("weighted_sweep needs a non-empty params.weight_grid")
    m_signal = float(p.get("m", 1.0))

    tasks, meta = [], []
    for wi, w in enumerate(weights):
        if w < 0:
            raise InvalidParamsError("weights must be non-negative")
        for t in range(config.trials):
            seed = derive_trial_seed(config.master_seed, "weighted_sweep", wi, t)
            tasks.append((pd, seed, w, row_norm, restarts))
            meta.append((w, t, seed))
    rates = _map_trials(_weighted_trial, tasks)
    rows = [
        {
            "weight": w, "n": params.n, "k": params.k, "m": m_signal,
            "a_e": params.a_e, "b_e": params.b_e,
            "a_t": params.a_t, "b_t": params.b_t,
            "trial": t, "seed": seed, "rate": rate,
        }
        for (w, t, seed), rate in zip(meta, rates)
    ]
    summary = {
        str(w): {
            "mean_rate": _mean([r["rate"] for r in rows if r["weight"] == w]),
            "median_rate": _median([r["rate"] for r in rows if r["weight"] == w]),
        }
        for w in weights
    }
    return ExperimentResult(
        scenario="weighted_sweep", fieldnames=_WEIGHTED_FIELDS,
        rows=rows, summary=summary,
    )


# ---------------------------------------------- sbm_triangle_density

_SBM_FIELDS = [
    "a_e", "b_e", "n", "k", "trial", "seed", "rate_edge", "rate_triangle",
]


def _sbm_density_trial(task):
    params_d, seed, row_norm, restarts = task
    params = _block_params(params_d)
    truth = gen_balanced_assignment(params.n, params.k)
    g = gen_sbm(params, truth, seed)
    adj = g.dyadic_matrix
    tri = triangle_motif_observed(adj)
    out = {}
    for key, mat in (("edge", adj), ("triangle", tri)):
        est = cluster_matrix(
            mat.astype(np.float64), params.k, seed,
            row_normalize_rows=row_norm, restarts=restarts,
        )
        out[key] = float(misclustering_rate(truth, est))
    return out["edge"], out["triangle"]


def run_sbm_triangle_density(config: ScenarioConfig) -> ExperimentResult:
    """Edge-adjacency vs observed-triangle-motif clustering on the plain
    dyadic block model, across an edge-density grid."""
    p = config.params
    n = int(p["n"])
    k = int(p.get("k", 2))
    restarts = int(p.get("restarts", 20))
    row_norm = bool(p.get("row_normalize", False))
    a_grid = [float(x) for x in p.get("a_e_grid", [])]
    if not a_grid:
        raise InvalidParamsError("sbm_triangle_density needs a non-empty params.a_e_grid")
    ratio = float(p.get("b_e_ratio", 0.25))

    tasks, meta = [], []
    for gi, a_e in enumerate(a_grid):
        b_e = ratio * a_e
        params = BlockParams(n=n, k=k, a_e=a_e, b_e=b_e, a_t=0.0, b_t=0.0)
        pd = _params_dict(params)
        for t in range(config.trials):
            seed = derive_trial_seed(config.master_seed, "sbm_triangle_density", gi, t)
            tasks.append((pd, seed, row_norm, restarts))
            meta.append((a_e, b_e, t, seed))
    results = _map_trials(_sbm_density_trial, tasks)
    rows = [
        {
            "a_e": a_e, "b_e": b_e, "n": n, "k": k, "trial": t,
            "seed": seed, "rate_edge": r_e, "rate_triangle": r_t,
        }
        for (a_e, b_e, t, seed), (r_e, r_t) in zip(meta, results)
    ]
    summary = {}
    for a_e in a_grid:
        sel = [r for r in rows if r["a_e"] == a_e]
        summary[str(a_e)] = {
            "median_rate_edge": _median([r["rate_edge"] for r in sel]),
            "median_rate_triangle": _median([r["rate_triangle"] for r in sel]),
        }
    return ExperimentResult(
        scenario="sbm_triangle_density", fieldnames=_SBM_FIELDS,
        rows=rows, summary=summary,
    )


# ----------------------------------------------------------- dispatch

_RUNNERS = {
    "table1": run_table1,
    "concentration_scaling": run_concentration_scaling,
    "misclustering_vs_gap": run_misclustering_vs_gap,
    "tradeoff_crossover": run_tradeoff_crossover,
    "weighted_sweep": run_weighted_sweep,
    "sbm_triangle_density": run_sbm_triangle_density,
}


def _sidecar(path: str, suffix: str) -> str:
    stem, dot, _ext = str(path).rpartition(".")
    return (stem if dot else str(path)) + suffix


def run_experiment(config: ScenarioConfig, fmt: str = "csv") -> ExperimentResult:
    """Run a scenario and write its row table (plus sidecar summaries)."""
    result = _RUNNERS[config.scenario](config)
    write_rows(config.output_path, result.fieldnames, result.rows, fmt)
    if config.scenario == "table1":
        other = "json" if fmt == "csv" else "csv"
        write_rows(_sidecar(config.output_path, f".{other}"), result.fieldnames,
                   result.rows, other)
        write_rows(_sidecar(config.output_path, ".summary.csv"),
                   result.summary_fieldnames, result.summary_rows, "csv")
    if result.summary:
        with open(_sidecar(config.output_path, ".summary.json"), "w",
                  encoding="utf-8") as fh:
            json.dump(result.summary, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return result
