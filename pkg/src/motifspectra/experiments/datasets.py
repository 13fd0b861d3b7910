"""Edge-list ingestion and benchmark dataset handling.

Files are whitespace-separated integer pairs, one edge per line, with
`#` starting a comment.  Vertex ids are remapped to a dense 0-based
range (sorted by original id); self-loops are dropped and duplicate
edges collapse.  Ground-truth label files hold `vertex label` pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from ..graph_model import InvalidInputError, SuperimposedGraph

__all__ = [
    "Dataset",
    "ingest_edge_list",
    "graph_from_dataset",
    "bundled_dataset",
    "BUNDLED_DATASETS",
]

BUNDLED_DATASETS = ("karate",)


@dataclass(frozen=True, eq=False)
class Dataset:
    name: str
    n: int
    edges: np.ndarray              # (m, 2), remapped dense ids
    labels: np.ndarray | None      # ground truth per remapped vertex
    k: int | None                  # number of ground-truth communities
    original_ids: np.ndarray       # new id -> original id


def _parse_int_rows(path, width: int):
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            body = line.split("#", 1)[0].strip()
            if not body:
                continue
            parts = body.split()
            if len(parts) != width:
                raise InvalidInputError(
                    f"{path}:{lineno}: expected {width} integers, got {len(parts)}"
                )
            try:
                rows.append([int(p) for p in parts])
            except ValueError:
                raise InvalidInputError(
                    f"{path}:{lineno}: fields must be integers"
                ) from None
    return rows


def _largest_component(n: int, edges: np.ndarray) -> np.ndarray:
    """Vertex mask of the largest connected component (BFS)."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    comp = np.full(n, -1, dtype=np.int64)
    sizes = []
    for start in range(n):
        if comp[start] >= 0:
            continue
        cid = len(sizes)
        stack = [start]
        comp[start] = cid
        count = 1
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if comp[v] < 0:
                    comp[v] = cid
                    stack.append(v)
                    count += 1
        sizes.append(count)
    return comp == int(np.argmax(sizes))


def ingest_edge_list(path, labels_path=None, *, symmetrize: bool = True,
                     largest_component: bool = False, name: str | None = None) -> Dataset:
    """Load an undirected graph from a plain edge list.

    symmetrize=True treats each line as a possibly directed arc and
    keeps the undirected union.  symmetrize=False asserts the file is
    already undirected and raises when a pair appears in both
    orientations (or twice).
    """
    raw = _parse_int_rows(path, 2)
    pairs = []
    seen = set()
    for u, v in raw:
        if u == v:
            continue  # self-loops carry no pair information here
        key = (u, v) if u < v else (v, u)
        if key in seen:
            if not symmetrize:
                raise InvalidInputError(
                    f"{path}: duplicate undirected edge {key} with symmetrize=False"
                )
            continue
        seen.add(key)
        pairs.append(key)
    if not pairs:
        raise InvalidInputError(f"{path}: no edges after cleaning")

    ids = np.unique(np.asarray(pairs, dtype=np.int64))
    remap = {int(orig): i for i, orig in enumerate(ids)}
    edges = np.asarray([[remap[u], remap[v]] for u, v in pairs], dtype=np.int64)
    n = ids.size

    if largest_component:
        keep = _largest_component(n, edges)
        new_index = np.full(n, -1, dtype=np.int64)
        new_index[keep] = np.arange(int(keep.sum()))
        edges = edges[keep[edges[:, 0]] & keep[edges[:, 1]]]
        edges = new_index[edges]
        ids = ids[keep]
        n = ids.size

    labels = None
    k = None
    if labels_path is not None:
        rows = _parse_int_rows(labels_path, 2)
        by_orig = {}
        for vert, lab in rows:
            if vert in by_orig and by_orig[vert] != lab:
                raise InvalidInputError(
                    f"{labels_path}: conflicting labels for vertex {vert}"
                )
            by_orig[vert] = lab
        missing = [int(orig) for orig in ids if int(orig) not in by_orig]
        if missing:
            raise InvalidInputError(
                f"{labels_path}: missing labels for {len(missing)} vertices "
                f"(first: {missing[:5]})"
            )
        raw_labels = np.asarray([by_orig[int(orig)] for orig in ids], dtype=np.int64)
        values = np.unique(raw_labels)
        compact = {int(val): i for i, val in enumerate(values)}
        labels = np.asarray([compact[int(v)] for v in raw_labels], dtype=np.int64)
        k = values.size

    return Dataset(
        name=name or Path(path).stem,
        n=n,
        edges=edges,
        labels=labels,
        k=k,
        original_ids=ids,
    )


def graph_from_dataset(ds: Dataset) -> SuperimposedGraph:
    """Dataset as a superimposed graph with an empty hyperedge set."""
    return SuperimposedGraph(ds.n, ds.edges, ())


def bundled_dataset(name: str) -> Dataset:
    """Load a dataset shipped with the package."""
    if name not in BUNDLED_DATASETS:
        raise InvalidInputError(f"no bundled dataset {name!r}; have {BUNDLED_DATASETS}")
    root = resources.files("motifspectra") / "data"
    return ingest_edge_list(
        str(root / f"{name}_edges.txt"),
        str(root / f"{name}_labels.txt"),
        symmetrize=True,
        largest_component=False,
        name=name,
    )
