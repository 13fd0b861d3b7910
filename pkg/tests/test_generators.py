"""Samplers: determinism, canonical output, exact marginal laws, and the
sparsity-window advisory report."""

import math

import numpy as np
import pytest

from motifspectra import (
    BlockParams,
    InvalidParamsError,
    block_provider,
    check_growth_window,
    constant_provider,
    gen_balanced_assignment,
    gen_hypergraph_3uniform,
    gen_inhomogeneous,
    gen_nonuniform_hypergraph_sbm,
    gen_sbm,
    gen_supsbm,
    growth_window_report,
)


def comb(n, r):
    return math.comb(n, r)


# ------------------------------------------------------------ assignment


def test_balanced_assignment_layout():
    assert gen_balanced_assignment(4, 2).labels.tolist() == [0, 0, 1, 1]
    assert gen_balanced_assignment(6, 3).labels.tolist() == [0, 0, 1, 1, 2, 2]
    with pytest.raises(InvalidParamsError):
        gen_balanced_assignment(5, 2)


# ------------------------------------------------------- degenerate laws


def test_sbm_zero_and_complete():
    c = gen_balanced_assignment(12, 2)
    empty = gen_sbm(BlockParams(12, 2, 0.0, 0.0, 0.0, 0.0), c, seed=1)
    assert empty.num_dyadic_edges == 0
    assert empty.num_hyperedges == 0
    full = gen_sbm(BlockParams(12, 2, 12.0, 12.0, 0.0, 0.0), c, seed=1)
    assert full.num_dyadic_edges == comb(12, 2)


def test_hypergraph_zero_and_complete():
    c = gen_balanced_assignment(12, 2)
    empty = gen_hypergraph_3uniform(BlockParams(12, 2, 0.0, 0.0, 0.0, 0.0), c, 1)
    assert empty.num_hyperedges == 0
    assert empty.num_dyadic_edges == 0
    full = gen_hypergraph_3uniform(BlockParams(12, 2, 0.0, 0.0, 12.0, 12.0), c, 1)
    assert full.num_hyperedges == comb(12, 3)


def test_supsbm_reduces_to_each_process():
    c = gen_balanced_assignment(20, 2)
    p_edge_only = BlockParams(20, 2, 8.0, 3.0, 0.0, 0.0)
    sup = gen_supsbm(p_edge_only, c, seed=9)
    sbm = gen_sbm(p_edge_only, c, seed=9)
    assert sup == sbm
    p_tri_only = BlockParams(20, 2, 0.0, 0.0, 8.0, 3.0)
    sup = gen_supsbm(p_tri_only, c, seed=9)
    hyp = gen_hypergraph_3uniform(p_tri_only, c, seed=9)
    assert sup == hyp


def test_supsbm_marginals_match_standalone_generators():
    # the two sub-processes use disjoint seed streams, so the dyadic part
    # of a superimposed draw equals the standalone SBM draw exactly
    c = gen_balanced_assignment(30, 2)
    p = BlockParams(30, 2, 10.0, 4.0, 8.0, 2.0)
    sup = gen_supsbm(p, c, seed=42)
    assert np.array_equal(sup.dyadic_edges, gen_sbm(p, c, 42).dyadic_edges)
    assert np.array_equal(
        sup.hyperedges, gen_hypergraph_3uniform(p, c, 42).hyperedges
    )


def test_nonuniform_shares_sampling_law_with_supsbm():
    c = gen_balanced_assignment(24, 2)
    p = BlockParams(24, 2, 9.0, 3.0, 7.0, 2.0)
    assert gen_nonuniform_hypergraph_sbm(p, c, 7) == gen_supsbm(p, c, 7)


def test_double_cover_pair_has_multiplicity_two():
    from motifspectra import multiplicity_matrix

    c = gen_balanced_assignment(30, 2)
    g = gen_supsbm(BlockParams(30, 2, 15.0, 8.0, 15.0, 8.0), c, seed=2)
    m = multiplicity_matrix(g)
    both = g.dyadic_matrix.astype(bool) & (g.cover_matrix > 0)
    assert both.any()  # dense enough that a double cover occurs
    assert (m[both] == 2).all()


# ------------------------------------------------------------ invariants


def test_determinism_and_seed_sensitivity():
    c = gen_balanced_assignment(40, 2)
    p = BlockParams(40, 2, 10.0, 4.0, 6.0, 2.0)
    assert gen_supsbm(p, c, 5) == gen_supsbm(p, c, 5)
    assert gen_supsbm(p, c, 5) != gen_supsbm(p, c, 6)


def test_generator_output_is_canonical():
    c = gen_balanced_assignment(60, 3)
    p = BlockParams(60, 3, 14.0, 5.0, 12.0, 3.0)
    for seed in range(5):
        g = gen_supsbm(p, c, seed)
        for arr in (g.dyadic_edges, g.hyperedges):
            assert (np.diff(arr, axis=1) > 0).all()       # sorted rows
            if arr.shape[0] > 1:                          # lexicographic order
                keys = arr[:, 0]
                for col in range(1, arr.shape[1]):
                    keys = keys * g.n + arr[:, col]
                assert (np.diff(keys) > 0).all()          # strict: no dups
            assert arr.min(initial=0) >= 0
            assert arr.max(initial=0) < g.n


def test_mismatched_assignment_rejected():
    p = BlockParams(12, 2, 4.0, 1.0, 2.0, 1.0)
    with pytest.raises(InvalidParamsError):
        gen_sbm(p, gen_balanced_assignment(10, 2), 0)


# ------------------------------------------------- Monte Carlo marginals


def test_sbm_mean_edge_count():
    p = BlockParams(1000, 2, 20.0, 5.0, 0.0, 0.0)
    c = gen_balanced_assignment(1000, 2)
    counts = [gen_sbm(p, c, s).num_dyadic_edges for s in range(100)]
    expect = 2 * comb(500, 2) * 0.02 + 500 * 500 * 0.005
    # per-draw variance of a sum of independent Bernoullis
    var = 2 * comb(500, 2) * 0.02 * 0.98 + 500 * 500 * 0.005 * 0.995
    se_mean = math.sqrt(var / len(counts))
    assert abs(np.mean(counts) - expect) < 3 * se_mean


def test_hypergraph_mean_hyperedge_count():
    p = BlockParams(300, 2, 0.0, 0.0, 6.0, 1.0)
    c = gen_balanced_assignment(300, 2)
    counts = [gen_hypergraph_3uniform(p, c, s).num_hyperedges
              for s in range(100)]
    within = 2 * comb(150, 3)
    across = comb(300, 3) - within
    expect = within * 0.02 + across * (1 / 300)
    var = within * 0.02 * 0.98 + across * (1 / 300) * (299 / 300)
    se_mean = math.sqrt(var / len(counts))
    assert abs(np.mean(counts) - expect) < 3 * se_mean


def test_disjoint_pair_indicators_uncorrelated():
    # empirical covariance of disjoint pair indicators over many seeds
    p = BlockParams(8, 2, 4.0, 2.0, 0.0, 0.0)
    c = gen_balanced_assignment(8, 2)
    n_seeds = 10_000
    pairs = [((0, 1), (2, 3)), ((0, 5), (1, 6)), ((4, 5), (6, 7))]
    hits = np.zeros((n_seeds, 6), dtype=np.float64)
    for s in range(n_seeds):
        m = gen_sbm(p, c, s).dyadic_matrix
        for col, (x, y) in enumerate(p for pr in pairs for p in pr):
            hits[s, col] = m[x][y]
    for a in range(3):
        x, y = hits[:, 2 * a], hits[:, 2 * a + 1]
        xc, yc = x - x.mean(), y - y.mean()
        cov = float((xc * yc).mean())
        se = float(np.std(xc * yc) / math.sqrt(n_seeds))
        assert abs(cov) < 4 * max(se, 1e-12)


# --------------------------------------------------- inhomogeneous model


def test_inhomogeneous_constant_provider_degenerate_laws():
    assert gen_inhomogeneous(10, constant_provider(0.0, 0.0), 3).num_dyadic_edges == 0
    g = gen_inhomogeneous(10, constant_provider(1.0, 1.0), 3)
    assert g.num_dyadic_edges == comb(10, 2)
    assert g.num_hyperedges == comb(10, 3)


def test_inhomogeneous_provider_range_validated():
    with pytest.raises(InvalidParamsError):
        gen_inhomogeneous(6, constant_provider(1.5, 0.0), 0)
    with pytest.raises(InvalidParamsError):
        gen_inhomogeneous(6, constant_provider(0.5, -0.1), 0)


def test_block_provider_matches_supsbm_distribution():
    # mean edge / hyperedge counts agree between the literal per-tuple
    # sampler and the block sampler, 3 sigma over 100 seeds
    n, k = 30, 2
    p = BlockParams(n, k, 10.0, 4.0, 9.0, 3.0)
    c = gen_balanced_assignment(n, k)
    provider = block_provider(p, c)
    fast_e, fast_h, slow_e, slow_h = [], [], [], []
    for s in range(100):
        fast = gen_supsbm(p, c, s)
        slow = gen_inhomogeneous(n, provider, s)
        fast_e.append(fast.num_dyadic_edges)
        fast_h.append(fast.num_hyperedges)
        slow_e.append(slow.num_dyadic_edges)
        slow_h.append(slow.num_hyperedges)
    for fast, slow in ((fast_e, slow_e), (fast_h, slow_h)):
        se = math.sqrt((np.var(fast) + np.var(slow)) / len(fast))
        assert abs(np.mean(fast) - np.mean(slow)) < 3 * max(se, 1e-9)


# ----------------------------------------------------- growth-window report


def test_window_edge_lower_boundary_true():
    r = growth_window_report(1000, math.log(1000) / 1000, 1e-6, epsilon=0.05)
    assert r.edge_lower


def test_window_triangle_upper_false_at_one():
    r = growth_window_report(1000, 0.01, 1.0, epsilon=0.05)
    assert not r.triangle_upper


def test_window_typical_sparse_point_booleans():
    # log-power lower bounds dominate at this size: the triangle lower
    # bound and the coupling fail even though both upper bounds hold
    n = 10_000
    p_e = math.log(n) / n
    p_t = n**0.25 / n**2
    r = growth_window_report(n, p_e, p_t, epsilon=0.1)
    assert r.edge_lower
    assert r.edge_upper
    assert not r.triangle_lower
    assert r.triangle_upper
    assert not r.coupling
    assert not r.all_within


def test_window_validation():
    with pytest.raises(InvalidParamsError):
        growth_window_report(1, 0.1, 0.1)
    with pytest.raises(InvalidParamsError):
        growth_window_report(100, 1.5, 0.1)
    with pytest.raises(InvalidParamsError):
        growth_window_report(100, 0.1, 0.1, epsilon=0.8)


def test_check_growth_window_uses_within_rates():
    p = BlockParams(1000, 2, math.log(1000), 1.0, 2.0, 1.0)
    r = check_growth_window(p, epsilon=0.05)
    assert r.p_e_max == pytest.approx(p.p_e_within)
    assert r.p_t_max == pytest.approx(p.p_t_within)
    assert r.edge_lower
