"""Experiment harness: configs, dataset ingestion, runners, CLI."""

from .config import SCENARIOS, ScenarioConfig, write_rows
from .datasets import (
    BUNDLED_DATASETS,
    Dataset,
    bundled_dataset,
    graph_from_dataset,
    ingest_edge_list,
)
from .runners import (
    ExperimentResult,
    derive_trial_seed,
    max_workers,
    run_concentration_scaling,
    run_experiment,
    run_misclustering_vs_gap,
    run_sbm_triangle_density,
    run_table1,
    run_tradeoff_crossover,
    run_weighted_sweep,
)

__all__ = [
    "SCENARIOS",
    "ScenarioConfig",
    "write_rows",
    "Dataset",
    "BUNDLED_DATASETS",
    "bundled_dataset",
    "graph_from_dataset",
    "ingest_edge_list",
    "ExperimentResult",
    "derive_trial_seed",
    "max_workers",
    "run_experiment",
    "run_table1",
    "run_concentration_scaling",
    "run_misclustering_vs_gap",
    "run_tradeoff_crossover",
    "run_weighted_sweep",
    "run_sbm_triangle_density",
]
