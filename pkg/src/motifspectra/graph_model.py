"""Core graph, parameter, and labeling types shared across the package.

Vertices are dense 0-based integers.  Matrices are plain dense numpy
arrays: count matrices are int64, real-valued matrices float64.  At the
scales this package targets (n up to a few thousand) dense symmetric
storage keeps every linear-algebra call simple and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

__all__ = [
    "InvalidParamsError",
    "InvalidInputError",
    "UndefinedEstimateError",
    "SolverFailureError",
    "SuperimposedGraph",
    "CommunityAssignment",
    "BlockParams",
    "multiplicity_matrix",
    "simple_projection",
    "degree_vector",
]


class InvalidParamsError(ValueError):
    """Model or operation parameters violate a documented precondition."""


class InvalidInputError(ValueError):
    """An input matrix, graph, or file fails validation."""


class UndefinedEstimateError(ValueError):
    """An estimator's denominator is empty or zero."""


class SolverFailureError(RuntimeError):
    """An iterative numerical routine failed to converge to tolerance."""


def _canonical_rows(rows, width: int, n: int, what: str) -> np.ndarray:
    """Validate and canonicalize vertex tuples.

    Vertices are sorted ascending within each row, duplicate rows are
    dropped, and rows are stored in lexicographic order, so two graphs
    with the same edge sets compare equal regardless of input order.
    """
    arr = np.asarray(rows, dtype=np.int64)
    if arr.size == 0:
        return np.empty((0, width), dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != width:
        raise InvalidParamsError(f"{what} rows must have {width} vertices")
    if arr.min() < 0 or arr.max() >= n:
        raise InvalidParamsError(f"{what} vertex out of range [0, {n})")
    arr = np.sort(arr, axis=1)
    if not (np.diff(arr, axis=1) > 0).all():
        raise InvalidParamsError(f"{what} vertices must be distinct")
    return np.unique(arr, axis=0)


class SuperimposedGraph:
    """An undirected dyadic edge set superimposed on 3-vertex hyperedges.

    The two edge processes are kept distinguishable.  A vertex pair that
    is both a dyadic edge and covered by at least one hyperedge has
    multiplicity 2; any other present pair has multiplicity 1.  Edge
    arrays are canonical (sorted rows, lexicographic order, no
    duplicates) and read-only, so graphs are value-comparable.
    """

    def __init__(self, n: int, dyadic_edges=(), hyperedges=()):
        if int(n) <= 0:
            raise InvalidParamsError("n must be a positive integer")
        self.n = int(n)
        self.dyadic_edges = _canonical_rows(dyadic_edges, 2, self.n, "edge")
        self.hyperedges = _canonical_rows(hyperedges, 3, self.n, "hyperedge")
        self.dyadic_edges.flags.writeable = False
        self.hyperedges.flags.writeable = False

    @classmethod
    def _from_canonical(cls, n: int, dyadic_edges: np.ndarray,
                        hyperedges: np.ndarray) -> "SuperimposedGraph":
        # internal: rows already sorted/unique/in-range (generator output),
        # so skip the O(m log m) canonicalization pass
        g = object.__new__(cls)
        g.n = int(n)
        g.dyadic_edges = dyadic_edges
        g.hyperedges = hyperedges
        g.dyadic_edges.flags.writeable = False
        g.hyperedges.flags.writeable = False
        return g

    @property
    def num_dyadic_edges(self) -> int:
        return self.dyadic_edges.shape[0]

    @property
    def num_hyperedges(self) -> int:
        return self.hyperedges.shape[0]

    @cached_property
    def dyadic_matrix(self) -> np.ndarray:
        """0/1 adjacency matrix of the dyadic edges only."""
        m = np.zeros((self.n, self.n), dtype=np.int64)
        if self.num_dyadic_edges:
            i, j = self.dyadic_edges.T
            m[i, j] = 1
            m[j, i] = 1
        m.flags.writeable = False
        return m

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        """Entry (i, j) counts the hyperedges covering the pair {i, j}."""
        m = np.zeros((self.n, self.n), dtype=np.int64)
        if self.num_hyperedges:
            pairs = self.hyperedges[:, [0, 1, 0, 2, 1, 2]].reshape(-1, 2)
            np.add.at(m, (pairs[:, 0], pairs[:, 1]), 1)
            np.add.at(m, (pairs[:, 1], pairs[:, 0]), 1)
        m.flags.writeable = False
        return m

    def triangle_cover_count(self, i: int, j: int) -> int:
        if i == j:
            raise InvalidParamsError("pair vertices must be distinct")
        return int(self.cover_matrix[i, j])

    def __eq__(self, other):
        if not isinstance(other, SuperimposedGraph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.dyadic_edges, other.dyadic_edges)
            and np.array_equal(self.hyperedges, other.hyperedges)
        )

    __hash__ = None

    def __repr__(self):
        return (
            f"SuperimposedGraph(n={self.n}, dyadic_edges={self.num_dyadic_edges}, "
            f"hyperedges={self.num_hyperedges})"
        )


class CommunityAssignment:
    """A labeling of n vertices into k communities (labels 0..k-1)."""

    def __init__(self, labels, k: int):
        self.labels = np.asarray(labels, dtype=np.int64).copy()
        self.k = int(k)
        if self.labels.ndim != 1 or self.labels.size == 0:
            raise InvalidParamsError("labels must be a non-empty 1-d sequence")
        if self.k < 1:
            raise InvalidParamsError("k must be at least 1")
        if self.labels.min() < 0 or self.labels.max() >= self.k:
            raise InvalidParamsError(f"labels must lie in [0, {self.k})")
        self.labels.flags.writeable = False

    @property
    def n(self) -> int:
        return self.labels.size

    def sizes(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.k)

    def is_balanced(self) -> bool:
        s = self.sizes()
        return bool((s == s[0]).all())

    def one_hot(self) -> np.ndarray:
        m = np.zeros((self.n, self.k), dtype=np.float64)
        m[np.arange(self.n), self.labels] = 1.0
        return m

    def __eq__(self, other):
        if not isinstance(other, CommunityAssignment):
            return NotImplemented
        return self.k == other.k and np.array_equal(self.labels, other.labels)

    __hash__ = None

    def __repr__(self):
        return f"CommunityAssignment(n={self.n}, k={self.k})"


@dataclass(frozen=True)
class BlockParams:
    """Balanced block-model rates.

    Within-community probabilities are a_e/n (dyadic edges) and a_t/n
    (3-vertex hyperedges); across-community probabilities use b_e and
    b_t.  Rates are assortative (a >= b) and scaled so all
    probabilities land in [0, 1].
    """

    n: int
    k: int
    a_e: float
    b_e: float
    a_t: float
    b_t: float

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise InvalidParamsError("n and k must be positive")
        if self.n % self.k != 0:
            raise InvalidParamsError("k must divide n for balanced blocks")
        for lo, hi, name in (
            (self.b_e, self.a_e, "edge"),
            (self.b_t, self.a_t, "triangle"),
        ):
            if not (0.0 <= lo <= hi <= self.n):
                raise InvalidParamsError(
                    f"{name} rates must satisfy 0 <= b <= a <= n"
                )

    @property
    def block_size(self) -> int:
        return self.n // self.k

    @property
    def p_e_within(self) -> float:
        return self.a_e / self.n

    @property
    def p_e_across(self) -> float:
        return self.b_e / self.n

    @property
    def p_t_within(self) -> float:
        return self.a_t / self.n

    @property
    def p_t_across(self) -> float:
        return self.b_t / self.n


def multiplicity_matrix(g: SuperimposedGraph) -> np.ndarray:
    """Superimposed adjacency with entries in {0, 1, 2}.

    Entry 2 marks pairs that are simultaneously a dyadic edge and
    covered by at least one hyperedge.
    """
    return g.dyadic_matrix + (g.cover_matrix > 0).astype(np.int64)


def simple_projection(g: SuperimposedGraph) -> np.ndarray:
    """0/1 adjacency of the superimposition with multiplicity collapsed."""
    return ((g.dyadic_matrix + g.cover_matrix) > 0).astype(np.int64)


def degree_vector(m: np.ndarray) -> np.ndarray:
    """Row sums of a symmetric matrix, as floats."""
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidInputError("degree_vector expects a square matrix")
    return a.sum(axis=1).astype(np.float64)
