"""Experiment scenario configuration and tabular output helpers."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

from ..graph_model import InvalidInputError, InvalidParamsError

__all__ = ["SCENARIOS", "ScenarioConfig", "write_rows"]

SCENARIOS = (
    "table1",
    "concentration_scaling",
    "misclustering_vs_gap",
    "tradeoff_crossover",
    "weighted_sweep",
    "sbm_triangle_density",
)


@dataclass(frozen=True)
class ScenarioConfig:
    """One experiment run: scenario name, its parameter dict, trial
    count, master seed, and where the row table goes."""

    scenario: str
    params: dict
    trials: int
    master_seed: int
    output_path: str

    def __post_init__(self):
        if self.scenario not in SCENARIOS:
            raise InvalidParamsError(
                f"unknown scenario {self.scenario!r}; choose from {SCENARIOS}"
            )
        if not isinstance(self.params, dict):
            raise InvalidParamsError("params must be a mapping")
        if int(self.trials) < 1:
            raise InvalidParamsError("trials must be at least 1")
        if int(self.master_seed) < 0:
            raise InvalidParamsError("master_seed must be non-negative")
        if not self.output_path:
            raise InvalidParamsError("output_path must be a non-empty path")

    @classmethod
    def from_dict(cls, d: dict, **overrides) -> "ScenarioConfig":
        known = {"scenario", "params", "trials", "master_seed", "output_path"}
        unknown = set(d) - known
        if unknown:
            raise InvalidParamsError(f"unknown config keys: {sorted(unknown)}")
        merged = {
            "scenario": d.get("scenario"),
            "params": d.get("params", {}),
            "trials": d.get("trials", 1),
            "master_seed": d.get("master_seed", 0),
            "output_path": d.get("output_path", ""),
        }
        merged.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return cls(
                scenario=str(merged["scenario"]),
                params=dict(merged["params"]),
                trials=int(merged["trials"]),
                master_seed=int(merged["master_seed"]),
                output_path=str(merged["output_path"]),
            )
        except (TypeError, ValueError) as exc:
            raise InvalidParamsError(f"malformed config: {exc}") from exc

    @classmethod
    def from_json(cls, path, **overrides) -> "ScenarioConfig":
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"{path}: invalid JSON ({exc})") from exc
        if not isinstance(data, dict):
            raise InvalidInputError(f"{path}: config must be a JSON object")
        return cls.from_dict(data, **overrides)


def write_rows(path, fieldnames, rows, fmt: str = "csv") -> None:
    """Write result rows deterministically.

    CSV uses minimal RFC-4180-style quoting with `\\n` line endings and
    `str()` number formatting, so identical rows are byte-identical.
    JSON mirrors the same rows as an array of objects.
    """
    if fmt not in ("csv", "json"):
        raise InvalidParamsError("format must be 'csv' or 'json'")
    out = Path(path)
    if out.parent != Path(""):
        out.parent.mkdir(parents=True, exist_ok=True)
    if fmt == "csv":
        with open(out, "w", encoding="utf-8", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=fieldnames, lineterminator="\n")
            writer.writeheader()
            for row in rows:
                writer.writerow(row)
    else:
        shaped = [{k: row.get(k) for k in fieldnames} for row in rows]
        with open(out, "w", encoding="utf-8", newline="") as fh:
            json.dump(shaped, fh, indent=2)
            fh.write("\n")
