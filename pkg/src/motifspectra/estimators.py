"""Estimators for the relative edge/triangle density and the planted
signal ratio, plus the regime decision they feed.

The dyadic and hyperedge processes of a superimposed graph stay
distinguishable, so the degree-based estimators read each part
directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .graph_model import (
    CommunityAssignment,
    InvalidParamsError,
    SuperimposedGraph,
    UndefinedEstimateError,
)

__all__ = [
    "estimate_delta",
    "BlockRateEstimates",
    "estimate_block_params",
    "estimate_m",
    "TradeoffReport",
    "tradeoff_decision",
]


def estimate_delta(g: SuperimposedGraph) -> float:
    """Relative density of edges to triangles:
    n * (mean dyadic degree) / (mean hyperedge-cover degree)."""
    tri_total = float(g.cover_matrix.sum())
    if tri_total == 0:
        raise UndefinedEstimateError("graph has no hyperedges; triangle degree is zero")
    edge_total = float(g.dyadic_matrix.sum())
    return g.n * edge_total / tri_total


class BlockRateEstimates(NamedTuple):
    a_e: float
    b_e: float
    a_t: float
    b_t: float


def estimate_block_params(
    g: SuperimposedGraph, assignment: CommunityAssignment
) -> BlockRateEstimates:
    """Plug-in block rates from empirical within/across densities.

    Each rate is n times the empirical probability of the corresponding
    cell: within-community pairs/triples for the a's, the rest for the
    b's.  The labeling can come from any pipeline (or ground truth for
    calibration).
    """
    if assignment.n != g.n:
        raise InvalidParamsError("assignment must cover the graph's vertex set")
    if assignment.k < 2:
        raise InvalidParamsError("need at least 2 communities")
    labels = assignment.labels
    sizes = assignment.sizes().astype(np.int64)
    n = g.n

    within_pairs = int((sizes * (sizes - 1) // 2).sum())
    total_pairs = n * (n - 1) // 2
    across_pairs = total_pairs - within_pairs
    within_triples = int((sizes * (sizes - 1) * (sizes - 2) // 6).sum())
    total_triples = n * (n - 1) * (n - 2) // 6
    across_triples = total_triples - within_triples
    for denom, what in (
        (within_pairs, "within-community pairs"),
        (across_pairs, "across-community pairs"),
        (within_triples, "within-community triples"),
        (across_triples, "across-community triples"),
    ):
        if denom == 0:
            raise UndefinedEstimateError(f"no {what} under this labeling")

    e = g.dyadic_edges
    within_edges = int((labels[e[:, 0]] == labels[e[:, 1]]).sum()) if e.size else 0
    across_edges = g.num_dyadic_edges - within_edges
    h = g.hyperedges
    if h.size:
        lh = labels[h]
        within_h = int(((lh[:, 0] == lh[:, 1]) & (lh[:, 1] == lh[:, 2])).sum())
    else:
        within_h = 0
    across_h = g.num_hyperedges - within_h

    return BlockRateEstimates(
        a_e=n * within_edges / within_pairs,
        b_e=n * across_edges / across_pairs,
        a_t=n * within_h / within_triples,
        b_t=n * across_h / across_triples,
    )


def estimate_m(delta_hat: float, rates: BlockRateEstimates) -> float:
    """Signal ratio estimate: delta_hat * (a_t - b_t) / (a_e - b_e)."""
    gap_e = rates.a_e - rates.b_e
    if gap_e == 0:
        raise UndefinedEstimateError("edge gap estimate is zero")
    return delta_hat * (rates.a_t - rates.b_t) / gap_e


@dataclass(frozen=True)
class TradeoffReport:
    """Which process carries more usable signal at this density.

    criterion is delta_hat / (m_hat^2 n): well below 1 favors the
    triangle matrix, well above 1 favors the edge matrix, and a band of
    half-width `margin` around 1 is called indeterminate.
    """

    delta_hat: float
    m_hat: float
    n: int
    criterion: float
    recommendation: str  # "triangles" | "edges" | "indeterminate"
    margin: float
    degenerate: bool = False


def tradeoff_decision(delta_hat: float, m_hat: float, n: int,
                      margin: float = 0.1) -> TradeoffReport:
    if n < 1:
        raise InvalidParamsError("n must be positive")
    if not 0.0 <= margin < 1.0:
        raise InvalidParamsError("margin must lie in [0, 1)")
    if m_hat == 0:
        return TradeoffReport(
            delta_hat=delta_hat, m_hat=m_hat, n=n, criterion=math.inf,
            recommendation="indeterminate", margin=margin, degenerate=True,
        )
    criterion = delta_hat / (m_hat**2 * n)
    if criterion < 1.0 - margin:
        rec = "triangles"
    elif criterion > 1.0 + margin:
        rec = "edges"
    else:
        rec = "indeterminate"
    return TradeoffReport(
        delta_hat=delta_hat, m_hat=m_hat, n=n, criterion=criterion,
        recommendation=rec, margin=margin,
    )
