"""Triangle-motif adjacency matrices: observed counts, the generative
five-way decomposition, and closed-form expectations for balanced
block models.

The generative decomposition classifies each fully connected triple by
the mechanism that produced its three sides:

* ``a_t2``  - triples that are a sampled hyperedge (the pair entry is
  the hyperedge cover count);
* ``a_e3``  - all three sides are dyadic edges;
* ``a_t3``  - not a hyperedge, all three sides covered by *other*
  hyperedges;
* ``a_t2e`` - not a hyperedge, two sides covered by other hyperedges
  and carrying no dyadic edge, third side an uncovered dyadic edge;
* ``a_te2`` - not a hyperedge, one covered edge-free side, two
  uncovered dyadic sides.

The two mixed categories are symmetrized over the three possible role
assignments; at most one assignment can fire per triple.  A triple can
be counted by both ``a_e3`` and one hyperedge-driven category only when
every side independently carries both mechanisms, which is the
double-counting the sum semantics require.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .graph_model import (
    BlockParams,
    CommunityAssignment,
    InvalidInputError,
    InvalidParamsError,
    SuperimposedGraph,
    simple_projection,
)
from .generators import gen_balanced_assignment

__all__ = [
    "triangle_motif_observed",
    "TriangleDecomposition",
    "decompose_triangles",
    "triangle_motif_generative",
    "TriangleDiscrepancy",
    "triangle_count_discrepancy",
    "expected_AE2",
    "expected_AT2",
    "expected_AE3",
    "ClosedForm",
    "lambda_min_AT2",
    "lambda_min_AE3",
]


def _validate_binary_adjacency(adj) -> np.ndarray:
    a = np.asarray(adj)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidInputError("adjacency must be square")
    if not np.array_equal(a, a.T):
        raise InvalidInputError("adjacency must be symmetric")
    if np.diagonal(a).any():
        raise InvalidInputError("adjacency diagonal must be zero")
    if not (((a == 0) | (a == 1)).all()):
        raise InvalidInputError("adjacency entries must be 0 or 1")
    return a.astype(bool)


def triangle_motif_observed(adj) -> np.ndarray:
    """Per-pair triangle counts of a simple graph.

    Entry (i, j) is the number of common neighbours of an adjacent pair
    {i, j}; non-adjacent pairs are 0.  Counting walks sorted neighbour
    lists per edge, so the cost is sum over edges of (deg i + deg j)
    rather than n^3.
    """
    a = _validate_binary_adjacency(adj)
    n = a.shape[0]
    nbrs = [np.flatnonzero(a[i]) for i in range(n)]
    out = np.zeros((n, n), dtype=np.int64)
    ei, ej = np.nonzero(np.triu(a, 1))
    for i, j in zip(ei, ej):
        c = np.intersect1d(nbrs[i], nbrs[j], assume_unique=True).size
        out[i, j] = c
        out[j, i] = c
    return out


@dataclass(frozen=True, eq=False)
class TriangleDecomposition:
    """The five generative category matrices for one graph.

    All entries are non-negative integer counts; every matrix is
    symmetric with zero diagonal.
    """

    n: int
    a_t2: np.ndarray
    a_e3: np.ndarray
    a_t3: np.ndarray
    a_t2e: np.ndarray
    a_te2: np.ndarray

    def categories(self) -> dict:
        return {
            "a_t2": self.a_t2,
            "a_e3": self.a_e3,
            "a_t3": self.a_t3,
            "a_t2e": self.a_t2e,
            "a_te2": self.a_te2,
        }

    def total(self) -> np.ndarray:
        """Generative triangle-motif matrix: sum of the five categories."""
        return self.a_t2 + self.a_e3 + self.a_t3 + self.a_t2e + self.a_te2


def decompose_triangles(g: SuperimposedGraph) -> TriangleDecomposition:
    """Classify every connected triple by generating mechanism.

    Each firing category adds 1 to all three pair entries of the
    triple.  Per-pair category counts are entrywise products of matrix
    products of the side-role indicators (exact: 0/1 float matrices,
    integer counts < 2^53), so the cost is a few dense multiplies
    rather than a per-triple scan.
    """
    n = g.n
    dyadic = g.dyadic_matrix.astype(bool)
    covered = g.cover_matrix > 0

    e = dyadic.astype(np.float64)
    c = covered.astype(np.float64)
    # side roles: cov = covered and edge-free, ded = uncovered dyadic
    cov = (covered & ~dyadic).astype(np.float64)
    ded = (dyadic & ~covered).astype(np.float64)

    a_t2 = g.cover_matrix.copy()
    a_e3 = (e * (e @ e)).astype(np.int64)

    # all three sides covered; hyperedge triples always match (covered
    # by themselves) but are excluded by the not-a-hyperedge condition,
    # so subtract one per pair per sampled hyperedge.
    a_t3 = (c * (c @ c)).astype(np.int64)
    if g.num_hyperedges:
        h = g.hyperedges
        for x, y in ((0, 1), (0, 2), (1, 2)):
            np.add.at(a_t3, (h[:, x], h[:, y]), -1)
            np.add.at(a_t3, (h[:, y], h[:, x]), -1)

    # mixed categories: one role pattern per triple can fire (a side is
    # never both cov and ded), and a hyperedge triple has no ded side,
    # so no hyperedge correction is needed.
    cross = cov @ ded
    cross = cross + cross.T
    a_t2e = (ded * (cov @ cov) + cov * cross).astype(np.int64)
    a_te2 = (cov * (ded @ ded) + ded * cross).astype(np.int64)

    return TriangleDecomposition(n, a_t2, a_e3, a_t3, a_t2e, a_te2)


def triangle_motif_generative(d: TriangleDecomposition) -> np.ndarray:
    """Sum of the five category matrices, with shape validation."""
    mats = list(d.categories().values())
    shape = (d.n, d.n)
    for m in mats:
        if m.shape != shape:
            raise InvalidInputError("decomposition matrices disagree on shape")
    return d.total()


@dataclass(frozen=True, eq=False)
class TriangleDiscrepancy:
    """Observed vs generative per-pair triangle counts.

    The two countings legitimately disagree: observed counting sees one
    triangle per connected triple, while the generative matrix can count
    a triple twice (hyperedge plus full dyadic triangle) or zero times
    (mixed-coverage triples that fire no category).  The difference is
    reported as-is.
    """

    observed: np.ndarray
    generative: np.ndarray

    @property
    def difference(self) -> np.ndarray:
        return self.generative - self.observed

    @property
    def max_abs_difference(self) -> int:
        return int(np.abs(self.difference).max()) if self.observed.size else 0


def triangle_count_discrepancy(g: SuperimposedGraph) -> TriangleDiscrepancy:
    obs = triangle_motif_observed(simple_projection(g))
    gen = decompose_triangles(g).total()
    return TriangleDiscrepancy(observed=obs, generative=gen)


def _balanced_labels(params: BlockParams, assignment) -> np.ndarray:
    if assignment is None:
        assignment = gen_balanced_assignment(params.n, params.k)
    if assignment.n != params.n or assignment.k != params.k:
        raise InvalidParamsError("assignment shape does not match params")
    if not assignment.is_balanced():
        raise InvalidParamsError("expected-matrix formulas require balanced blocks")
    return assignment.labels


def _two_value_matrix(labels: np.ndarray, within: float, across: float,
                      zero_diagonal: bool) -> np.ndarray:
    same = labels[:, None] == labels[None, :]
    m = np.where(same, float(within), float(across))
    if zero_diagonal:
        np.fill_diagonal(m, 0.0)
    return m


def expected_AE2(params: BlockParams, assignment: CommunityAssignment | None = None,
                 *, zero_diagonal: bool = True) -> np.ndarray:
    """Expected dyadic adjacency under balanced blocks.

    ``zero_diagonal=False`` keeps the within-value on the diagonal,
    giving the rank-k block form whose spectrum the closed-form
    eigenvalue helpers describe.
    """
    labels = _balanced_labels(params, assignment)
    return _two_value_matrix(
        labels, params.p_e_within, params.p_e_across, zero_diagonal
    )


def expected_AT2(params: BlockParams, assignment: CommunityAssignment | None = None,
                 *, zero_diagonal: bool = True) -> np.ndarray:
    """Expected hyperedge-cover matrix under balanced blocks."""
    labels = _balanced_labels(params, assignment)
    n, k = params.n, params.k
    s = n // k
    within = (s - 2) * params.a_t / n + (k - 1) * s * params.b_t / n
    across = (n - 2) * params.b_t / n
    return _two_value_matrix(labels, within, across, zero_diagonal)


def expected_AE3(params: BlockParams, assignment: CommunityAssignment | None = None,
                 *, zero_diagonal: bool = True) -> np.ndarray:
    """Expected all-dyadic triangle-count matrix under balanced blocks."""
    labels = _balanced_labels(params, assignment)
    n, k = params.n, params.k
    s = n // k
    ae, be = params.a_e, params.b_e
    within = (ae / n) * ((s - 2) * ae**2 / n**2 + (k - 1) * s * be**2 / n**2)
    across = (be / n) * (2 * (s - 1) * ae * be / n**2 + (k - 2) * s * be**2 / n**2)
    return _two_value_matrix(labels, within, across, zero_diagonal)


class ClosedForm(NamedTuple):
    """A closed-form eigenvalue with a degeneracy marker."""

    value: float
    degenerate: bool


def lambda_min_AT2(params: BlockParams) -> ClosedForm:
    """Smallest nonzero eigenvalue (in absolute value) of the expected
    hyperedge-cover block form."""
    s = params.block_size
    if params.a_t == params.b_t or s <= 2:
        return ClosedForm(0.0, True)
    return ClosedForm((s - 2) * (params.a_t - params.b_t) / params.k, False)


def lambda_min_AE3(params: BlockParams) -> ClosedForm:
    """Smallest nonzero eigenvalue (in absolute value) of the expected
    all-dyadic triangle block form."""
    if params.a_e == params.b_e:
        return ClosedForm(0.0, True)
    n, k = params.n, params.k
    a, b = params.a_e, params.b_e
    value = (k * b**2 + a**2 + a * b - 2 * b**2) * (a - b) / (k**2 * n) \
        - 2 * a * (a + b) * (a - b) / (k * n**2)
    return ClosedForm(value, False)
