"""Tests for labeling-tree enumeration and the mod-2 cohomological dimension."""

import pytest

from configtop.labeling_trees import (
    LabelTree,
    TreeCollection,
    alpha,
    cell_dim_range,
    chain_tree,
    cohdim_mod2,
    min_edges,
    minimal_tree,
)


@pytest.mark.parametrize("k,expected", [(6, 2), (8, 1), (7, 3), (1, 1), (12, 2)])
def test_alpha(k, expected):
    assert alpha(k) == expected


def test_alpha_rejects_nonpositive():
    with pytest.raises(ValueError):
        alpha(0)


def test_label_tree_invariants():
    t = LabelTree((1, 1, 2, 4))
    assert t.edges == 7
    assert t.leaves == 4
    with pytest.raises(ValueError):
        LabelTree((2, 2, 2))  # top line must be a single vertex
    with pytest.raises(ValueError):
        LabelTree((1, 3))  # not a power of two
    with pytest.raises(ValueError):
        LabelTree((1, 4, 2))  # not monotone


def test_minimal_and_chain_shapes():
    t = minimal_tree(3, 4)
    assert t.line_counts == (1, 1, 1, 4)
    assert t.edges == 3 - 1 + 4
    assert chain_tree(4).line_counts == (1,) * 5
    assert chain_tree(4).edges == 4


def test_depth_bookkeeping():
    assert chain_tree(3).depth == 0
    assert minimal_tree(3, 4).depth == 3
    assert LabelTree((1, 2, 2, 2)).depth == 1


def test_collection_leaf_sum_checked():
    with pytest.raises(ValueError):
        TreeCollection((minimal_tree(2, 4),), n=2, k=6)


@pytest.mark.parametrize(
    "n,k,expected",
    [(2, 6, 8), (3, 4, 6), (4, 1, 4)],
)
def test_min_edges_closed_form(n, k, expected):
    value, coll = min_edges(n, k, "closed_form")
    assert value == expected
    assert coll.total_edges == expected
    assert sum(t.leaves for t in coll.trees) == k


def test_min_edges_witness_shape():
    _value, coll = min_edges(3, 4, "closed_form")
    assert [t.line_counts for t in coll.trees] == [(1, 1, 1, 4)]
    _value, coll = min_edges(4, 1, "closed_form")
    assert coll.trees == (chain_tree(4),)


@pytest.mark.parametrize("n", range(2, 6))
@pytest.mark.parametrize("k", range(1, 17))
def test_search_matches_closed_form(n, k):
    closed, _ = min_edges(n, k, "closed_form")
    searched, witness = min_edges(n, k, "search")
    assert closed == searched
    assert len(witness.trees) >= alpha(k)
    for tree in witness.trees:
        assert tree.edges >= n - 1 + tree.leaves


def test_min_edges_rejects():
    with pytest.raises(ValueError):
        min_edges(1, 3)
    with pytest.raises(ValueError):
        min_edges(2, 3, "guess")


@pytest.mark.parametrize(
    "n,k,expected",
    [(2, 6, 4), (3, 2, 2), (5, 8, 28), (2, 1, 0)],
)
def test_cohdim_mod2(n, k, expected):
    assert cohdim_mod2(n, k) == expected


def test_cohdim_both_routes_agree():
    for n in range(2, 6):
        for k in range(2, 17):
            assert cohdim_mod2(n, k) == n * k - min_edges(n, k, "search")[0]
            assert cohdim_mod2(n, k) <= n * k - (k + n - 1)


@pytest.mark.parametrize(
    "n,k,expected",
    [(2, 3, (4, 6)), (3, 1, (3, 3)), (4, 5, (8, 20))],
)
def test_cell_dim_range(n, k, expected):
    assert cell_dim_range(n, k) == expected


def test_dot_output():
    dot = minimal_tree(2, 2).to_dot("t")
    assert dot.startswith("digraph t {")
    assert '"2_1" -> "1_0";' in dot
    assert dot.count("->") == minimal_tree(2, 2).edges
    coll_dot = min_edges(2, 3, "closed_form")[1].to_dot()
    assert coll_dot.count("digraph") == 2
