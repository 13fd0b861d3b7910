"""Core graph/label/parameter types: canonical storage, multiplicity
semantics, and validation."""

from itertools import combinations

import numpy as np
import pytest

from motifspectra import (
    BlockParams,
    CommunityAssignment,
    InvalidInputError,
    InvalidParamsError,
    SuperimposedGraph,
    degree_vector,
    gen_supsbm,
    gen_balanced_assignment,
    multiplicity_matrix,
    simple_projection,
)


# ---------------------------------------------------------- construction


def test_rows_are_canonicalized():
    g = SuperimposedGraph(5, [[3, 1], [1, 3], [0, 2]], [[4, 2, 0], [0, 2, 4]])
    assert g.dyadic_edges.tolist() == [[0, 2], [1, 3]]
    assert g.hyperedges.tolist() == [[0, 2, 4]]


def test_equality_ignores_input_order():
    a = SuperimposedGraph(4, [[0, 1], [2, 3]], [[0, 1, 2]])
    b = SuperimposedGraph(4, [[3, 2], [1, 0]], [[2, 0, 1]])
    assert a == b
    assert a != SuperimposedGraph(4, [[0, 1]], [[0, 1, 2]])


def test_edge_arrays_are_read_only():
    g = SuperimposedGraph(4, [[0, 1]], [[0, 1, 2]])
    with pytest.raises(ValueError):
        g.dyadic_edges[0, 0] = 3
    with pytest.raises(ValueError):
        g.hyperedges[0, 0] = 3


@pytest.mark.parametrize("bad", [
    dict(n=0),
    dict(n=3, dyadic_edges=[[0, 3]]),           # vertex out of range
    dict(n=3, dyadic_edges=[[0, 0]]),           # repeated vertex
    dict(n=4, dyadic_edges=[[0, 1, 2]]),        # wrong width
    dict(n=4, hyperedges=[[0, 1]]),             # wrong width
    dict(n=4, hyperedges=[[0, 1, 4]]),          # out of range
    dict(n=4, hyperedges=[[0, 1, 1]]),          # repeated vertex
])
def test_invalid_construction_rejected(bad):
    with pytest.raises(InvalidParamsError):
        SuperimposedGraph(**bad)


def test_counts_and_repr():
    g = SuperimposedGraph(6, [[0, 1], [2, 3]], [[0, 1, 2]])
    assert g.num_dyadic_edges == 2
    assert g.num_hyperedges == 1
    assert "n=6" in repr(g)


# ---------------------------------------------------- matrices and views


def test_multiplicity_double_edge_rule():
    g = SuperimposedGraph(4, [[0, 1]], [[0, 1, 2]])
    m = multiplicity_matrix(g)
    assert m[0, 1] == m[1, 0] == 2
    assert m[0, 2] == m[1, 2] == 1
    assert m[0, 3] == 0


def test_multiplicity_hyperedge_multi_cover_collapses():
    g = SuperimposedGraph(4, [], [[0, 1, 2], [0, 1, 3]])
    assert multiplicity_matrix(g)[0, 1] == 1
    assert g.cover_matrix[0, 1] == 2


def test_multiplicity_empty_graph():
    g = SuperimposedGraph(3)
    assert not multiplicity_matrix(g).any()


def test_simple_projection_examples():
    assert not simple_projection(SuperimposedGraph(3)).any()
    g = SuperimposedGraph(4, [], [[0, 1, 2]])
    p = simple_projection(g)
    assert p[0, 1] == p[1, 2] == p[0, 2] == 1
    assert p[0, 3] == 0
    both = SuperimposedGraph(3, [[0, 1]], [[0, 1, 2]])
    assert simple_projection(both)[0, 1] == 1


def test_multiplicity_minus_projection_marks_double_cover():
    g = gen_supsbm(BlockParams(30, 2, 12.0, 6.0, 9.0, 3.0),
                   gen_balanced_assignment(30, 2), seed=11)
    diff = multiplicity_matrix(g) - simple_projection(g)
    assert set(np.unique(diff)) <= {0, 1}
    dyadic = g.dyadic_matrix.astype(bool)
    covered = g.cover_matrix > 0
    assert np.array_equal(diff == 1, dyadic & covered)


def test_triangle_cover_count_matches_brute_force():
    g = gen_supsbm(BlockParams(20, 2, 8.0, 4.0, 10.0, 4.0),
                   gen_balanced_assignment(20, 2), seed=3)
    hyper = g.hyperedges.tolist()
    for i, j in combinations(range(g.n), 2):
        expect = sum(1 for h in hyper if i in h and j in h)
        assert g.triangle_cover_count(i, j) == expect
    with pytest.raises(InvalidParamsError):
        g.triangle_cover_count(2, 2)


def test_degree_vector_examples():
    assert degree_vector(np.array([[0, 1], [1, 0]])).tolist() == [1.0, 1.0]
    assert not degree_vector(np.zeros((3, 3))).any()
    k4 = np.ones((4, 4)) - np.eye(4)
    assert degree_vector(k4).tolist() == [3.0] * 4
    with pytest.raises(InvalidInputError):
        degree_vector(np.zeros((2, 3)))


# --------------------------------------------------- community assignment


def test_assignment_basics():
    c = CommunityAssignment([0, 0, 1, 1, 2, 2], 3)
    assert c.n == 6
    assert c.sizes().tolist() == [2, 2, 2]
    assert c.is_balanced()
    oh = c.one_hot()
    assert oh.shape == (6, 3)
    assert (oh.sum(axis=1) == 1).all()
    assert (oh.argmax(axis=1) == c.labels).all()
    assert not CommunityAssignment([0, 0, 0, 1], 2).is_balanced()


def test_assignment_validation():
    with pytest.raises(InvalidParamsError):
        CommunityAssignment([], 2)
    with pytest.raises(InvalidParamsError):
        CommunityAssignment([0, 2], 2)
    with pytest.raises(InvalidParamsError):
        CommunityAssignment([0, -1], 2)
    with pytest.raises(InvalidParamsError):
        CommunityAssignment([0, 1], 0)


def test_assignment_labels_read_only_and_equality():
    c = CommunityAssignment([0, 1], 2)
    with pytest.raises(ValueError):
        c.labels[0] = 1
    assert c == CommunityAssignment([0, 1], 2)
    assert c != CommunityAssignment([0, 1], 3)


# ---------------------------------------------------------- block params


def test_block_params_probabilities():
    p = BlockParams(100, 2, 20.0, 5.0, 8.0, 2.0)
    assert p.block_size == 50
    assert p.p_e_within == pytest.approx(0.2)
    assert p.p_e_across == pytest.approx(0.05)
    assert p.p_t_within == pytest.approx(0.08)
    assert p.p_t_across == pytest.approx(0.02)


@pytest.mark.parametrize("kwargs", [
    dict(n=5, k=2, a_e=1, b_e=0, a_t=1, b_t=0),     # k does not divide n
    dict(n=4, k=2, a_e=1, b_e=2, a_t=1, b_t=0),     # b_e > a_e
    dict(n=4, k=2, a_e=5, b_e=1, a_t=1, b_t=0),     # a_e > n
    dict(n=4, k=2, a_e=1, b_e=0, a_t=1, b_t=-1),    # negative rate
    dict(n=0, k=1, a_e=0, b_e=0, a_t=0, b_t=0),
])
def test_block_params_validation(kwargs):
    with pytest.raises(InvalidParamsError):
        BlockParams(**kwargs)
