import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import cut_rank as cut_rank_oracle
from oracles import rankwidth_brute, to_nx, treewidth_by_eliminated_sets
from twdecomp.budget import Budget, BudgetExhausted
from twdecomp.families import PETERSEN
from twdecomp.generators import random_connected
from twdecomp.graph import (complete_bipartite, complete_graph, cycle_graph, disjoint_union, induced_subgraph,
                            path_graph, remove_edge)
from twdecomp.width import (TreeDecomposition, cut_rank, decomposition_from_order, elimination_width,
                            rankwidth, rankwidth_exact, treewidth, treewidth_exact,
                            validate_tree_decomposition)


@pytest.mark.parametrize("g, k", [(complete_graph(5), 4), (cycle_graph(7), 2), (path_graph(6), 1),
                                  (complete_bipartite(3, 3), 3), (PETERSEN, 4), (complete_graph(1), 0)])
def test_treewidth_small_values(g, k):
    res = treewidth_exact(g)
    assert res.width == k
    rep = validate_tree_decomposition(g, res.decomposition)
    assert rep.valid and rep.width == k
    assert elimination_width(g, res.order) == k


@given(graphs(max_n=8))
def test_treewidth_matches_set_oracle(g):
    assert treewidth(g) == treewidth_by_eliminated_sets(to_nx(g))


@given(graphs(max_n=9))
def test_witness_decomposition_is_valid(g):
    res = treewidth_exact(g)
    rep = validate_tree_decomposition(g, res.decomposition)
    assert rep.valid and rep.width == res.width


@given(graphs(min_n=2, max_n=8), st.data())
def test_treewidth_monotone_under_subgraphs(g, data):
    k = treewidth(g)
    if g.m:
        u, v = data.draw(st.sampled_from(g.edges()))
        assert treewidth(remove_edge(g, u, v)) <= k
    keep = data.draw(st.lists(st.sampled_from(list(g.vertices)), unique=True))
    assert treewidth(induced_subgraph(g, keep)[0]) <= k


def test_validator_reports_each_defect():
    g = cycle_graph(4)
    good = decomposition_from_order(g, [0, 1, 2, 3])
    assert validate_tree_decomposition(g, good).valid
    no_edge = TreeDecomposition((frozenset({0, 1, 2}), frozenset({0, 3})), ((0, 1),))
    rep = validate_tree_decomposition(g, no_edge)
    assert not rep.covers_edges and rep.missing_edge == (2, 3)
    broken = TreeDecomposition((frozenset({0, 1, 3}), frozenset({1, 2}), frozenset({2, 3})), ((0, 1), (1, 2)))
    rep = validate_tree_decomposition(g, broken)
    assert not rep.subtrees_connected and rep.broken_vertex == 3
    cyclic = TreeDecomposition((frozenset({0, 1, 2, 3}), frozenset({0})), ((0, 1), (1, 0)))
    assert not validate_tree_decomposition(g, cyclic).is_tree


def test_budget_exhaustion_keeps_bounds():
    with pytest.raises(BudgetExhausted) as info:
        rankwidth_exact(cycle_graph(12), Budget(nodes=10))
    assert info.value.lower <= info.value.upper


def test_treewidth_budget_bounds_cover_every_component():
    g = random_connected(11, 0.5, random.Random(3))
    # K16 comes after the component that runs out, so only its size bounds it
    u = disjoint_union(disjoint_union(complete_graph(3), g), complete_graph(16))
    with pytest.raises(BudgetExhausted) as info:
        treewidth_exact(u, Budget(nodes=10))
    # solved afterwards: a cached width would skip the budgeted search
    k = treewidth(g)
    assert info.value.lower <= max(k, 15) <= info.value.upper


def test_cut_rank_c5_adjacent_pair():
    assert cut_rank(cycle_graph(5), [0, 1]) == 2


@given(graphs(min_n=1, max_n=8), st.data())
def test_cut_rank_symmetric_and_matches_oracle(g, data):
    s = data.draw(st.lists(st.sampled_from(list(g.vertices)), unique=True))
    rest = [v for v in g.vertices if v not in s]
    assert cut_rank(g, s) == cut_rank(g, rest) == cut_rank_oracle(to_nx(g), s)


@given(graphs(min_n=1, max_n=8), st.data())
def test_cut_rank_submodular(g, data):
    vs = st.lists(st.sampled_from(list(g.vertices)), unique=True)
    a, b = set(data.draw(vs)), set(data.draw(vs))
    assert cut_rank(g, a) + cut_rank(g, b) >= cut_rank(g, a | b) + cut_rank(g, a & b)


@pytest.mark.parametrize("g, k", [(complete_graph(4), 1), (cycle_graph(5), 2), (cycle_graph(4), 1),
                                  (path_graph(5), 1), (PETERSEN, 3)])
def test_rankwidth_small_values(g, k):
    res = rankwidth_exact(g)
    assert res.width == k
    res.decomposition.check(g)
    assert res.decomposition.width(g) == k


@settings(max_examples=30)
@given(graphs(max_n=7))
def test_rankwidth_matches_brute_force(g):
    res = rankwidth_exact(g)
    res.decomposition.check(g)
    assert res.width == res.decomposition.width(g) == rankwidth_brute(to_nx(g))


@settings(max_examples=30)
@given(graphs(max_n=8))
def test_rankwidth_at_most_treewidth_plus_one(g):
    assert rankwidth(g) <= max(treewidth(g), 0) + 1


def test_treewidth_of_grid():
    g = nx.convert_node_labels_to_integers(nx.grid_2d_graph(3, 4))
    from twdecomp.graph import Graph
    assert treewidth(Graph.from_edges(12, g.edges())) == 3
