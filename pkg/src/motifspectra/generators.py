"""Samplers for the block-model graph families.

Every sampler is a pure function of (parameters, seed).  The dyadic and
triadic processes draw from disjoint sub-streams derived
deterministically from the seed, so the superimposed sampler has
exactly the same marginal law per process as the standalone samplers
called with the same seed.

Block-constant probabilities use a count-then-place fast path: the
number of present items in each homogeneous cell is Binomial(N, p),
and that many distinct items are then placed uniformly at random.
Taking the first m distinct values of an iid uniform item stream is
uniform over m-subsets, so the joint law is identical to independent
per-item Bernoulli draws.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .graph_model import (
    BlockParams,
    CommunityAssignment,
    InvalidParamsError,
    SuperimposedGraph,
)

__all__ = [
    "gen_balanced_assignment",
    "gen_sbm",
    "gen_hypergraph_3uniform",
    "gen_supsbm",
    "gen_nonuniform_hypergraph_sbm",
    "gen_inhomogeneous",
    "ProbabilityProvider",
    "block_provider",
    "constant_provider",
    "GrowthWindowReport",
    "growth_window_report",
    "check_growth_window",
]

# Fixed tags for deriving per-process sub-streams from one user seed.
_EDGE_TAG = 0xE59E
_TRI_TAG = 0x7A17


def _substream(seed: int, tag: int) -> np.random.Generator:
    seed = int(seed)
    if seed < 0:
        raise InvalidParamsError("seed must be a non-negative integer")
    return np.random.default_rng(np.random.SeedSequence([seed, tag]))


def gen_balanced_assignment(n: int, k: int) -> CommunityAssignment:
    """Deterministic balanced labeling: community i gets vertices
    [i*n/k, (i+1)*n/k)."""
    if n < 1 or k < 1 or n % k != 0:
        raise InvalidParamsError("k must divide n")
    return CommunityAssignment(np.repeat(np.arange(k), n // k), k)


def _distinct_keys(rng: np.random.Generator, count: int, draw: Callable) -> np.ndarray:
    """`count` distinct keys from an iid uniform key stream.

    `draw(m)` returns at most m iid uniform keys from the item space.
    Each round requests exactly the current deficit, so the running
    union never exceeds `count`; the whole procedure is symmetric under
    permutations of the key space, making the final set uniform over
    all `count`-subsets (= the product-Bernoulli law given the count).
    """
    if count <= 0:
        return np.empty(0, dtype=np.int64)
    keys = np.unique(draw(count))
    while keys.size < count:
        batch = draw(count - keys.size)
        keys = np.unique(np.concatenate([keys, batch]))
    return keys


def _sample_block_pairs(rng, n, blocks, p_within, p_across) -> np.ndarray:
    """Distinct vertex pairs under block-constant probabilities.

    Returns canonical rows: sorted within each pair, lexicographic
    order, no duplicates (key spaces of the groups are disjoint).
    """
    group_keys = []
    for vs in blocks:
        s = vs.size
        total = s * (s - 1) // 2
        if total == 0:
            continue
        count = int(rng.binomial(total, p_within))

        def draw(m, s=s, vs=vs):
            u = rng.integers(0, s, m + m // 8 + 16)
            v = rng.integers(0, s, u.size)
            keep = u != v
            u, v = vs[u[keep]], vs[v[keep]]
            return (np.minimum(u, v) * n + np.maximum(u, v))[:m]

        group_keys.append(_distinct_keys(rng, count, draw))
    for ai in range(len(blocks)):
        for bi in range(ai + 1, len(blocks)):
            va, vb = blocks[ai], blocks[bi]
            total = va.size * vb.size
            if total == 0:
                continue
            count = int(rng.binomial(total, p_across))

            def draw(m, va=va, vb=vb):
                u = va[rng.integers(0, va.size, m)]
                v = vb[rng.integers(0, vb.size, m)]
                return np.minimum(u, v) * n + np.maximum(u, v)

            group_keys.append(_distinct_keys(rng, count, draw))
    if not group_keys:
        return np.empty((0, 2), dtype=np.int64)
    keys = np.sort(np.concatenate(group_keys))
    lo, hi = np.divmod(keys, n)
    return np.stack([lo, hi], axis=1)


def _sample_block_triples(rng, n, labels, blocks, p_within, p_across) -> np.ndarray:
    """Distinct vertex triples: `p_within` when all three vertices share a
    block, `p_across` otherwise.  Returns canonical rows."""
    group_keys = []
    same_total = 0
    for vs in blocks:
        s = vs.size
        total = s * (s - 1) * (s - 2) // 6
        same_total += total
        if total == 0:
            continue
        count = int(rng.binomial(total, p_within))

        def draw(m, s=s, vs=vs):
            xyz = rng.integers(0, s, (m + m // 8 + 16, 3))
            xyz = xyz[
                (xyz[:, 0] != xyz[:, 1])
                & (xyz[:, 0] != xyz[:, 2])
                & (xyz[:, 1] != xyz[:, 2])
            ]
            xyz = np.sort(vs[xyz], axis=1)[:m]
            return (xyz[:, 0] * n + xyz[:, 1]) * n + xyz[:, 2]

        group_keys.append(_distinct_keys(rng, count, draw))

    total_other = n * (n - 1) * (n - 2) // 6 - same_total
    if total_other > 0:
        count = int(rng.binomial(total_other, p_across))

        def draw(m):
            xyz = rng.integers(0, n, (m + m // 4 + 16, 3))
            xyz = xyz[
                (xyz[:, 0] != xyz[:, 1])
                & (xyz[:, 0] != xyz[:, 2])
                & (xyz[:, 1] != xyz[:, 2])
            ]
            labs = labels[xyz]
            xyz = xyz[~((labs[:, 0] == labs[:, 1]) & (labs[:, 1] == labs[:, 2]))]
            xyz = np.sort(xyz, axis=1)[:m]
            return (xyz[:, 0] * n + xyz[:, 1]) * n + xyz[:, 2]

        group_keys.append(_distinct_keys(rng, count, draw))
    if not group_keys:
        return np.empty((0, 3), dtype=np.int64)
    keys = np.sort(np.concatenate(group_keys))
    xy, z = np.divmod(keys, n)
    x, y = np.divmod(xy, n)
    return np.stack([x, y, z], axis=1)


def _check_model_inputs(params: BlockParams, assignment: CommunityAssignment):
    if assignment.n != params.n or assignment.k != params.k:
        raise InvalidParamsError("assignment shape does not match params")


def _blocks(assignment: CommunityAssignment):
    return [np.flatnonzero(assignment.labels == b) for b in range(assignment.k)]


def gen_sbm(params: BlockParams, assignment: CommunityAssignment, seed: int) -> SuperimposedGraph:
    """Dyadic-only block model: edge probability a_e/n within a
    community, b_e/n across."""
    _check_model_inputs(params, assignment)
    rng = _substream(seed, _EDGE_TAG)
    edges = _sample_block_pairs(
        rng, params.n, _blocks(assignment), params.p_e_within, params.p_e_across
    )
    return SuperimposedGraph._from_canonical(
        params.n, edges, np.empty((0, 3), dtype=np.int64)
    )


def gen_hypergraph_3uniform(
    params: BlockParams, assignment: CommunityAssignment, seed: int
) -> SuperimposedGraph:
    """3-uniform hypergraph block model: hyperedge probability a_t/n when
    all three vertices share a community, b_t/n otherwise.  Projected
    pair multiplicities are collapsed by construction."""
    _check_model_inputs(params, assignment)
    rng = _substream(seed, _TRI_TAG)
    triples = _sample_block_triples(
        rng, params.n, assignment.labels, _blocks(assignment),
        params.p_t_within, params.p_t_across,
    )
    return SuperimposedGraph._from_canonical(
        params.n, np.empty((0, 2), dtype=np.int64), triples
    )


def gen_supsbm(
    params: BlockParams, assignment: CommunityAssignment, seed: int
) -> SuperimposedGraph:
    """Superimposition of the dyadic and 3-uniform block models.

    The two processes are sampled independently from sub-streams of
    `seed`, so each marginal matches the standalone sampler exactly.
    """
    _check_model_inputs(params, assignment)
    rng_e = _substream(seed, _EDGE_TAG)
    rng_t = _substream(seed, _TRI_TAG)
    blocks = _blocks(assignment)
    edges = _sample_block_pairs(
        rng_e, params.n, blocks, params.p_e_within, params.p_e_across
    )
    triples = _sample_block_triples(
        rng_t, params.n, assignment.labels, blocks,
        params.p_t_within, params.p_t_across,
    )
    return SuperimposedGraph._from_canonical(params.n, edges, triples)


def gen_nonuniform_hypergraph_sbm(
    params: BlockParams, assignment: CommunityAssignment, seed: int
) -> SuperimposedGraph:
    """Mixed 2-edge/3-edge hypergraph block model.

    Identical sampling law to `gen_supsbm`; the dyadic and triadic parts
    stay distinguishable on the returned graph, which is what the
    relative-density estimators consume.
    """
    return gen_supsbm(params, assignment, seed)


@dataclass(frozen=True)
class ProbabilityProvider:
    """Per-pair and per-triple probabilities for the general sampler.

    Both callables must be symmetric in their arguments; the sampler
    only evaluates them with i < j (< k).
    """

    edge_prob: Callable[[int, int], float]
    triangle_prob: Callable[[int, int, int], float]


def constant_provider(p_e: float, p_t: float) -> ProbabilityProvider:
    return ProbabilityProvider(lambda i, j: p_e, lambda i, j, k: p_t)


def block_provider(params: BlockParams, assignment: CommunityAssignment) -> ProbabilityProvider:
    """Block-constant probabilities matching the block-model samplers."""
    _check_model_inputs(params, assignment)
    labs = assignment.labels

    def edge_prob(i, j):
        return params.p_e_within if labs[i] == labs[j] else params.p_e_across

    def triangle_prob(i, j, k):
        if labs[i] == labs[j] == labs[k]:
            return params.p_t_within
        return params.p_t_across

    return ProbabilityProvider(edge_prob, triangle_prob)


def gen_inhomogeneous(n: int, provider: ProbabilityProvider, seed: int) -> SuperimposedGraph:
    """Independent per-pair and per-triple Bernoulli draws.

    Literal O(n^3) scan; intended for small n (tests, spot checks).
    """
    if n < 1:
        raise InvalidParamsError("n must be positive")
    rng_e = _substream(seed, _EDGE_TAG)
    rng_t = _substream(seed, _TRI_TAG)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            p = float(provider.edge_prob(i, j))
            if not 0.0 <= p <= 1.0:
                raise InvalidParamsError(f"edge_prob({i},{j})={p} outside [0, 1]")
            if rng_e.random() < p:
                edges.append((i, j))
    triples = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                p = float(provider.triangle_prob(i, j, k))
                if not 0.0 <= p <= 1.0:
                    raise InvalidParamsError(
                        f"triangle_prob({i},{j},{k})={p} outside [0, 1]"
                    )
                if rng_t.random() < p:
                    triples.append((i, j, k))
    return SuperimposedGraph(n, edges, triples)


@dataclass(frozen=True)
class GrowthWindowReport:
    """Truth values of the sparsity-window inequalities (constants 1,
    natural log).  Advisory: samplers never consult it."""

    n: int
    p_e_max: float
    p_t_max: float
    epsilon: float
    edge_lower: bool
    edge_upper: bool
    triangle_lower: bool
    triangle_upper: bool
    coupling: bool

    @property
    def all_within(self) -> bool:
        return (
            self.edge_lower
            and self.edge_upper
            and self.triangle_lower
            and self.triangle_upper
            and self.coupling
        )


def growth_window_report(
    n: int, p_e_max: float, p_t_max: float, epsilon: float = 0.05
) -> GrowthWindowReport:
    if n < 2:
        raise InvalidParamsError("n must be at least 2")
    if not 0.0 < epsilon < 0.4:
        raise InvalidParamsError("epsilon must lie in (0, 0.4)")
    for p in (p_e_max, p_t_max):
        if not 0.0 <= p <= 1.0:
            raise InvalidParamsError("probabilities must lie in [0, 1]")
    ln = math.log(n)
    return GrowthWindowReport(
        n=n,
        p_e_max=p_e_max,
        p_t_max=p_t_max,
        epsilon=epsilon,
        edge_lower=ln / n <= p_e_max,
        edge_upper=p_e_max < n ** (0.4 - epsilon) / n,
        triangle_lower=ln**8 / n**2 < p_t_max,
        triangle_upper=p_t_max < n ** (0.4 - epsilon) / n**2,
        coupling=p_t_max > p_e_max * ln / n,
    )


def check_growth_window(params: BlockParams, epsilon: float = 0.05) -> GrowthWindowReport:
    """Window report for block params; maxima are the within-community
    rates because the models are assortative."""
    return growth_window_report(
        params.n, params.p_e_within, params.p_t_within, epsilon
    )
