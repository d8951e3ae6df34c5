import math

import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import small_graphs

from graver_forge.depth import cdd_depth, contraction_depth, cstar_depth, deletion_depth
from graver_forge.errors import BadParams, NotBipartition
from graver_forge.fields import GF, QQ
from graver_forge.forge import (HARDNESS_KINDS, balanced_independent_set, bipartite_completion, bipartite_graphs,
                                gn_family, hardness_instance, matroid_from_graph, nontrivial_components,
                                quotient_graph)
from graver_forge.graphs import Graph


def test_single_edge_matroid():
    lab = matroid_from_graph(Graph("uv", [("u", "v")]))
    M = lab.matroid
    assert len(M) == 3 and M.rank() == 2 and M.circuits() == [frozenset({0, 1, 2})]
    assert lab.labels == [("vertex", "u"), ("vertex", "v"), ("edge", "u", "v")]


def test_edgeless_graph_gives_free_matroid():
    M = matroid_from_graph(Graph(range(4), [])).matroid
    assert M.rank() == 4 and M.circuits() == []


@given(small_graphs(max_vertices=5))
def test_element_count(g):
    vertices, edges = g
    G = Graph(vertices, edges)
    assert len(matroid_from_graph(G).matroid) == len(G) + G.num_edges


def test_bipartite_completion():
    G = Graph(["a", "b", "c"], [("a", "c")])
    H = bipartite_completion(G, ["a", "b"], ["c"])
    assert H.has_edge("a", "b") and H.num_edges == 2
    with pytest.raises(NotBipartition):
        bipartite_completion(Graph("ab", [("a", "b")]), ["a", "b"], [])


def test_balanced_independent_set():
    G = Graph(["x0", "x1", "y0", "y1"], [("x0", "y0"), ("x1", "y1")])
    assert balanced_independent_set(G, ["x0", "x1"], ["y0", "y1"], 1)
    assert not balanced_independent_set(G, ["x0", "x1"], ["y0", "y1"], 2)
    assert balanced_independent_set(G, ["x0", "x1"], ["y0", "y1"], 0)


def test_quotient_of_zero_subspace():
    G = Graph(range(3), [(0, 1), (1, 2)])
    assert quotient_graph(G, []) == G


def test_quotient_by_unit_vector_deletes_vertex():
    G = Graph(range(3), [(0, 1), (1, 2)])
    assert quotient_graph(G, [[0, 1, 0]]) == G.subgraph([0, 2])


def test_quotient_by_edge_contracts_it():
    G = Graph(range(3), [(0, 1), (1, 2)])
    H = quotient_graph(G, [[1, -1, 0]])
    assert H == Graph([0, 2], [(0, 2)])


def test_quotient_uses_general_directions():
    # (1, 2, 0) meets span(e_0, e_1) but contains no unit vector
    G = Graph(range(3), [(0, 1), (1, 2)])
    assert quotient_graph(G, [[1, 2, 0]]) == Graph([0, 2], [(0, 2)])


def test_hardness_isolated_pair():
    G = Graph(["x", "y"], [])
    M, s = hardness_instance(G, ["x"], ["y"], 1, QQ, "cstar")
    assert s == 1 and cstar_depth(M).value == 1
    M2, s2 = hardness_instance(G, ["x"], ["y"], 1, QQ, "cd2M")
    assert s2 == 2 and contraction_depth(M2).value == 2


def test_hardness_single_edge():
    G = Graph(["x", "y"], [("x", "y")])
    assert not balanced_independent_set(G, ["x"], ["y"], 1)
    M, s = hardness_instance(G, ["x"], ["y"], 1, QQ, "cstar")
    assert cstar_depth(M).value > s


@pytest.mark.parametrize("edges", [[], [("x", "y")]])
def test_other_hardness_kinds_agree(edges):
    G = Graph(["x", "y"], edges)
    has = balanced_independent_set(G, ["x"], ["y"], 1)
    M, s = hardness_instance(G, ["x"], ["y"], 1, GF(3), "cdd-clone")
    assert (cdd_depth(M).value <= s) == has
    M, s = hardness_instance(G, ["x"], ["y"], 1, GF(3), "dd-dual")
    assert (deletion_depth(M).value <= s) == has


def test_hardness_kind_checked():
    with pytest.raises(BadParams):
        hardness_instance(Graph(["x", "y"], []), ["x"], ["y"], 1, QQ, "nope")
    assert len(HARDNESS_KINDS) == 5


def test_all_small_bipartite_graphs():
    assert sum(1 for _ in bipartite_graphs(2, 2)) == 16


@pytest.mark.parametrize("n, edges", [(1, 2), (2, 12), (3, 48)])
def test_gn_edge_counts(n, edges):
    assert len(gn_family(n).edges) == edges


def test_g1_is_a_parallel_pair():
    g = gn_family(1)
    M = g.matroid()
    assert M.circuits() == [frozenset({0, 1})]
    assert contraction_depth(M).value == 2


@pytest.mark.parametrize("n", [1, 2, 3])
def test_gn_paths_and_circuits(n):
    g = gn_family(n)
    assert all(n <= x <= 2 * n for x in g.simple_paths(g.r, g.b))
    assert max(len(c) for c in g.cycles()) <= 4 * n


def test_gn_contraction_depth_lower_bound():
    for n in (1, 2):
        assert contraction_depth(gn_family(n).matroid()).value >= math.comb(n, 2)


def test_gn_cycles_are_matroid_circuits():
    g = gn_family(2)
    assert set(g.matroid().circuits()) == set(g.cycles())


def test_gn_needs_positive_n():
    with pytest.raises(BadParams):
        gn_family(0)


@given(small_graphs(max_vertices=5), st.lists(st.lists(st.integers(-2, 2), min_size=5, max_size=5), max_size=3))
def test_contraction_components_bounded_by_quotient(g, gens):
    vertices, edges = g
    if not vertices:
        return
    G = Graph(vertices, edges)
    gens = [v[:len(vertices)] for v in gens]
    M = matroid_from_graph(G).matroid.contract_subspace(gens)
    assert nontrivial_components(M) <= len(quotient_graph(G, gens).components())
