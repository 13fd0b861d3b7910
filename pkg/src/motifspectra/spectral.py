"""Spectral embedding and k-means clustering pipelines.

The pipeline is: build a base matrix from the graph (superimposed
adjacency, optionally plus a weighted observed triangle-motif matrix),
apply an optional degree normalization, embed with the k eigenvectors
of largest absolute eigenvalue, optionally normalize embedding rows,
and cluster with restarted k-means.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph_model import (
    CommunityAssignment,
    InvalidInputError,
    InvalidParamsError,
    SolverFailureError,
    SuperimposedGraph,
    multiplicity_matrix,
    simple_projection,
)
from .motif import triangle_motif_observed

__all__ = [
    "EigenResult",
    "top_k_abs_eigenpairs",
    "normalized_laplacian",
    "regularized_laplacian",
    "row_normalize",
    "weighted_hyperedge_matrix",
    "kmeans",
    "ClusterMethod",
    "METHOD_NAMES",
    "named_method",
    "base_matrix",
    "embedding_from_matrix",
    "embedding",
    "cluster_matrix",
    "cluster",
]

_KMEANS_TAG = 0x36A5


def _as_symmetric(m, what: str) -> np.ndarray:
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidInputError(f"{what} must be a square matrix")
    if not np.allclose(a, a.T, rtol=1e-12, atol=1e-12):
        raise InvalidInputError(f"{what} must be symmetric")
    return a


@dataclass(frozen=True, eq=False)
class EigenResult:
    """Eigenpairs ordered by descending absolute eigenvalue."""

    values: np.ndarray   # (k,)
    vectors: np.ndarray  # (n, k), orthonormal columns


def top_k_abs_eigenpairs(m, k: int, tol: float = 1e-10) -> EigenResult:
    """The k eigenpairs of largest |eigenvalue| of a symmetric matrix.

    Ties in |value| are broken toward the larger signed value, then by
    the solver's deterministic ascending order.  Each eigenvector's
    largest-magnitude component is made positive so the embedding is
    reproducible.  Residuals are checked against tol * ||m||.
    """
    a = _as_symmetric(m, "eigen input")
    n = a.shape[0]
    if not 1 <= k <= n:
        raise InvalidParamsError(f"k must lie in [1, {n}]")
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise SolverFailureError(f"eigendecomposition failed: {exc}") from exc
    order = np.lexsort((-w, -np.abs(w)))[:k]
    values = w[order]
    vectors = v[:, order].copy()
    for c in range(k):
        col = vectors[:, c]
        top = np.abs(col).argmax()
        if col[top] < 0:
            vectors[:, c] = -col
    scale = float(np.abs(w).max()) if n else 0.0
    if scale > 0.0:
        residual = np.linalg.norm(a @ vectors - vectors * values, axis=0)
        worst = float(residual.max())
        if worst > tol * scale:
            raise SolverFailureError(
                f"eigenpair residual {worst:.3e} exceeds {tol:.1e} * ||m||"
            )
    return EigenResult(values=values, vectors=vectors)


def normalized_laplacian(m) -> np.ndarray:
    """Degree-normalized adjacency a_ij / sqrt(d_i d_j).

    Rows and columns of zero-degree vertices stay zero.
    """
    a = _as_symmetric(m, "normalized_laplacian input")
    if a.size and a.min() < 0:
        raise InvalidInputError("normalized_laplacian requires non-negative entries")
    d = a.sum(axis=1)
    inv = np.zeros_like(d)
    pos = d > 0
    inv[pos] = 1.0 / np.sqrt(d[pos])
    return a * inv[:, None] * inv[None, :]


def regularized_laplacian(m, tau: float | None = None) -> np.ndarray:
    """Degree-normalized adjacency with regularized degrees d_i + tau.

    tau=None picks the mean degree of the input matrix.
    """
    a = _as_symmetric(m, "regularized_laplacian input")
    if a.size and a.min() < 0:
        raise InvalidInputError("regularized_laplacian requires non-negative entries")
    d = a.sum(axis=1)
    if tau is None:
        tau = float(d.mean())
    if tau < 0:
        raise InvalidParamsError("tau must be non-negative")
    dr = d + tau
    inv = np.zeros_like(dr)
    pos = dr > 0
    inv[pos] = 1.0 / np.sqrt(dr[pos])
    return a * inv[:, None] * inv[None, :]


def row_normalize(v) -> np.ndarray:
    """Scale each row to unit Euclidean norm; zero rows are left alone."""
    a = np.asarray(v, dtype=np.float64)
    if a.ndim != 2:
        raise InvalidInputError("row_normalize expects a 2-d array")
    norms = np.linalg.norm(a, axis=1)
    out = a.copy()
    pos = norms > 0
    out[pos] /= norms[pos, None]
    return out


def weighted_hyperedge_matrix(a_edge, a_tri, weight: float = 1.0) -> np.ndarray:
    """Edge matrix plus `weight` times the triangle-motif matrix."""
    ae = np.asarray(a_edge, dtype=np.float64)
    at = np.asarray(a_tri, dtype=np.float64)
    if ae.shape != at.shape:
        raise InvalidInputError("matrices must have identical shapes")
    if weight < 0:
        raise InvalidParamsError("weight must be non-negative")
    return ae + weight * at


def _kmeans_single(rng: np.random.Generator, pts: np.ndarray, k: int,
                   max_iter: int, rel_tol: float):
    n = pts.shape[0]
    centers = np.empty((k, pts.shape[1]))
    centers[0] = pts[rng.integers(n)]
    d2 = ((pts - centers[0]) ** 2).sum(axis=1)
    for c in range(1, k):
        total = d2.sum()
        if total > 0:
            idx = rng.choice(n, p=d2 / total)
        else:
            idx = int(rng.integers(n))
        centers[c] = pts[idx]
        d2 = np.minimum(d2, ((pts - centers[c]) ** 2).sum(axis=1))

    labels = np.zeros(n, dtype=np.int64)
    obj = np.inf
    for _ in range(max_iter):
        dist = ((pts[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
        labels = dist.argmin(axis=1)
        own = dist[np.arange(n), labels]
        occupied = np.bincount(labels, minlength=k)
        for c in np.flatnonzero(occupied == 0):
            idx = own.argmax()  # farthest point from its center fills the hole
            labels[idx] = c
            own[idx] = 0.0
        for c in range(k):
            centers[c] = pts[labels == c].mean(axis=0)
        new_obj = float(((pts - centers[labels]) ** 2).sum())
        if obj - new_obj <= rel_tol * max(obj, 1e-300) and np.isfinite(obj):
            obj = new_obj
            break
        obj = new_obj
    return labels, obj


def kmeans(points, k: int, *, restarts: int = 20, seed: int = 0,
           max_iter: int = 300, rel_tol: float = 1e-9) -> CommunityAssignment:
    """Restarted Lloyd k-means with k-means++ seeding.

    Each restart draws from its own sub-seed; the lowest-objective
    restart wins, ties going to the lowest restart index.  Empty
    clusters are repaired by reassigning the point farthest from its
    center.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[0] == 0:
        raise InvalidInputError("points must be a non-empty 2-d array")
    if not np.isfinite(pts).all():
        raise InvalidInputError("points must be finite")
    if not 1 <= k <= pts.shape[0]:
        raise InvalidParamsError(f"k must lie in [1, {pts.shape[0]}]")
    if restarts < 1:
        raise InvalidParamsError("restarts must be at least 1")
    best_labels, best_obj = None, np.inf
    for r in range(restarts):
        rng = np.random.default_rng(np.random.SeedSequence([int(seed), _KMEANS_TAG, r]))
        labels, obj = _kmeans_single(rng, pts, k, max_iter, rel_tol)
        if obj < best_obj:
            best_labels, best_obj = labels, obj
    return CommunityAssignment(best_labels, k)


_BASES = ("edge_adjacency", "weighted_edge_triangle")
_TRANSFORMS = ("none", "normalized_laplacian", "regularized_laplacian")


@dataclass(frozen=True)
class ClusterMethod:
    """A spectral clustering variant.

    base: which matrix seeds the pipeline - the superimposed adjacency
      alone, or adjacency plus `weight` times the observed
      triangle-motif matrix of the simple projection.
    transform: optional degree normalization of the base matrix.
    row_normalize: normalize embedding rows before k-means.
    """

    base: str = "edge_adjacency"
    transform: str = "none"
    weight: float = 1.0
    row_normalize: bool = False

    def __post_init__(self):
        if self.base not in _BASES:
            raise InvalidParamsError(f"base must be one of {_BASES}")
        if self.transform not in _TRANSFORMS:
            raise InvalidParamsError(f"transform must be one of {_TRANSFORMS}")
        if self.weight < 0:
            raise InvalidParamsError("weight must be non-negative")


_NAMED = {
    "spA": ClusterMethod("edge_adjacency", "none", 1.0, True),
    "hospA": ClusterMethod("weighted_edge_triangle", "none", 1.0, True),
    "spL": ClusterMethod("edge_adjacency", "normalized_laplacian", 1.0, True),
    "hospL": ClusterMethod("weighted_edge_triangle", "normalized_laplacian", 1.0, True),
    "rspL": ClusterMethod("edge_adjacency", "regularized_laplacian", 1.0, True),
    "horspL": ClusterMethod("weighted_edge_triangle", "regularized_laplacian", 1.0, True),
}

METHOD_NAMES = tuple(_NAMED)


def named_method(name: str) -> ClusterMethod:
    """The six replication variants (all row-normalized)."""
    try:
        return _NAMED[name]
    except KeyError:
        raise InvalidParamsError(
            f"unknown method {name!r}; choose from {METHOD_NAMES}"
        ) from None


def embedding_from_matrix(m, k: int, *, transform: str = "none",
                          row_normalize_rows: bool = False,
                          tau: float | None = None, tol: float = 1e-10) -> np.ndarray:
    """Spectral embedding points for an explicit symmetric matrix."""
    if transform == "none":
        base = _as_symmetric(m, "cluster input")
    elif transform == "normalized_laplacian":
        base = normalized_laplacian(m)
    elif transform == "regularized_laplacian":
        base = regularized_laplacian(m, tau)
    else:
        raise InvalidParamsError(f"transform must be one of {_TRANSFORMS}")
    pts = top_k_abs_eigenpairs(base, k, tol).vectors
    if row_normalize_rows:
        pts = row_normalize(pts)
    return pts


def cluster_matrix(m, k: int, seed: int, *, transform: str = "none",
                   row_normalize_rows: bool = False, restarts: int = 20,
                   tau: float | None = None, tol: float = 1e-10) -> CommunityAssignment:
    """Spectral clustering of an explicit symmetric matrix."""
    pts = embedding_from_matrix(
        m, k, transform=transform, row_normalize_rows=row_normalize_rows,
        tau=tau, tol=tol,
    )
    return kmeans(pts, k, restarts=restarts, seed=seed)


def base_matrix(g: SuperimposedGraph, method: ClusterMethod) -> np.ndarray:
    """The matrix a pipeline variant starts from.

    The triangle-motif part always uses observed counts on the simple
    projection; generative decompositions are for theory experiments
    and are fed through `cluster_matrix` directly.
    """
    base = multiplicity_matrix(g).astype(np.float64)
    if method.base == "weighted_edge_triangle":
        tri = triangle_motif_observed(simple_projection(g))
        base = weighted_hyperedge_matrix(base, tri, method.weight)
    return base


def embedding(g: SuperimposedGraph, method: ClusterMethod, k: int,
              tol: float = 1e-10) -> np.ndarray:
    """Embedding points for a graph under a pipeline variant."""
    return embedding_from_matrix(
        base_matrix(g, method), k,
        transform=method.transform,
        row_normalize_rows=method.row_normalize,
        tol=tol,
    )


def cluster(g: SuperimposedGraph, method: ClusterMethod, k: int, seed: int,
            *, restarts: int = 20) -> CommunityAssignment:
    """Spectral clustering of a graph under one of the pipeline variants."""
    return kmeans(embedding(g, method, k), k, restarts=restarts, seed=seed)
