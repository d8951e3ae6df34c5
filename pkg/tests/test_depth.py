import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import cd_oracle, cdd_oracle, dd_oracle
from strategies import int_matrices

from graver_forge.depth import (CSTAR_GENERAL, DELETION, DecompositionTree, TreeNode, cdd_depth,
                                contraction_depth, cstar_depth, cstar_depth_by_trees, csdd_depth,
                                deletion_depth, principal_cstar_tree, principal_depth, verify_cstar_tree,
                                verify_deletion_tree)
from graver_forge.errors import BadParams, EmptyMatroid, InvalidTree, LabelMismatch
from graver_forge.fields import GF, QQ
from graver_forge.forge import gn_family, hardness_instance
from graver_forge.graphs import Graph
from graver_forge.linalg import RatMatrix
from graver_forge.matroid import matroid_of

U23 = [[1, 0, 1], [0, 1, 1]]


def _cols(rows):
    return [tuple(r[j] for r in rows) for j in range(len(rows[0]))]


# ---------------------------------------------------------------- fixed values

def test_identity_parameters():
    M = matroid_of(RatMatrix.identity(3))
    for fn in (deletion_depth, contraction_depth, cdd_depth, cstar_depth, csdd_depth):
        assert fn(M).value == 1


def test_uniform_rank_two_parameters():
    M = matroid_of(U23)
    assert deletion_depth(M).value == 2
    assert contraction_depth(M).value == 3
    assert cdd_depth(M).value == 2
    assert cstar_depth(M).value == 2
    assert csdd_depth(M).value == 2
    assert cstar_depth_by_trees(M) == 2


def test_band_deletion_depth(band):
    assert deletion_depth(matroid_of(band)).value == dd_oracle(_cols(band)) == 2


def test_single_loop():
    M = matroid_of([[0]])
    assert contraction_depth(M).value == 1
    assert cstar_depth(M).value == 0
    assert csdd_depth(M).value == 0


def test_two_parallel_edges_contraction_depth():
    assert contraction_depth(gn_family(1).matroid()).value == 2


def test_rank_zero_cstar_depth():
    assert cstar_depth(matroid_of(RatMatrix.zeros(2, 3))).value == 0
    assert csdd_depth(matroid_of(RatMatrix.zeros(2, 3))).value == 0


def test_single_nonzero_column_csdd():
    assert csdd_depth(matroid_of([[1], [2]])).value == 1


def test_dense_example_cstar_depth(left):
    rep = cstar_depth(matroid_of(left))
    assert rep.value == 2 and rep.exactness == "exact"
    assert verify_cstar_tree(matroid_of(left), rep.witness)


def test_star_matrix_csdd(star5):
    # the incidence-optimal value is csdd + 1 = 3 (see also the precondition tests)
    rep = csdd_depth(matroid_of(star5))
    assert rep.value == 2
    assert verify_cstar_tree(matroid_of(star5), rep.witness)


def test_empty_matroid_rejected():
    with pytest.raises(EmptyMatroid):
        deletion_depth(matroid_of(RatMatrix.zeros(2, 0)))


def test_budget_reports_exceeded():
    rep = cstar_depth(matroid_of(U23), budget=1)
    assert rep.exceeded and rep.witness is None
    assert not contraction_depth(matroid_of(U23), budget=2).value
    assert contraction_depth(matroid_of(U23), budget=3).value == 3


def test_methods():
    M = matroid_of(U23)
    assert cstar_depth(M, method="bounded").exactness == "upper-bound"
    with pytest.raises(BadParams):
        cstar_depth(M, method="directions")
    with pytest.raises(BadParams):
        cstar_depth(M, method="magic")
    assert cstar_depth(matroid_of(U23, GF(3)), method="directions").value == 2


# ---------------------------------------------------------------- principal trees

def test_principal_tree_on_uniform_rank_two():
    M = matroid_of(U23)
    T = principal_cstar_tree(M)
    assert verify_cstar_tree(M, T)
    assert T.depth() == 2 <= 9
    assert math.log2(M.largest_circuit()) <= cstar_depth(M).value


def test_principal_tree_on_band(band):
    M = matroid_of(band)
    T = principal_cstar_tree(M)
    assert verify_cstar_tree(M, T) and T.depth() <= 9


def test_principal_tree_on_free_matroid_is_a_star():
    M = matroid_of(RatMatrix.identity(3))
    T = principal_cstar_tree(M)
    assert verify_cstar_tree(M, T) and T.depth() == 1


def test_principal_depth_bounds_cstar_depth(left):
    M = matroid_of(left)
    assert principal_depth(M).value >= cstar_depth(M).value


# ---------------------------------------------------------------- verifiers

def test_deletion_witness_verifies(left):
    M = matroid_of(left)
    for fn in (deletion_depth, contraction_depth, cdd_depth):
        rep = fn(M)
        assert verify_deletion_tree(M, rep.witness)
        assert rep.witness.height() == rep.value


def test_split_circuit_rejected():
    M = matroid_of(U23)
    # 0 and 2 share the circuit {0, 1, 2} but end up below different edges
    root = TreeNode(frozenset({0, 1, 2}), frozenset(),
                    [(0, TreeNode(frozenset({1}), frozenset({1}))), (2, TreeNode(frozenset()))])
    assert not verify_deletion_tree(M, DecompositionTree(DELETION, root))


def test_free_matroid_single_node_tree():
    M = matroid_of(RatMatrix.identity(3))
    T = DecompositionTree(DELETION, TreeNode(frozenset({0, 1, 2}), frozenset({0, 1, 2})))
    assert verify_deletion_tree(M, T)


def test_deletion_tree_label_cover_checked():
    M = matroid_of(RatMatrix.identity(3))
    T = DecompositionTree(DELETION, TreeNode(frozenset({0, 1, 2}), frozenset({0, 1})))
    with pytest.raises(LabelMismatch):
        verify_deletion_tree(M, T)


def _path_tree(second):
    # each edge's child holds the component it acts on, before its contraction
    leaf = TreeNode(frozenset(second))
    mid = TreeNode(frozenset({0, 1, 2}), edges=[((0, 1), leaf)])
    return DecompositionTree(CSTAR_GENERAL, TreeNode(frozenset({0, 1, 2}), edges=[((1, 0), mid)]))


def test_cstar_wrong_leaf_assignment_rejected():
    M = matroid_of(U23)
    assert verify_cstar_tree(M, _path_tree({1, 2}))
    # after contracting (1, 0) element 0 is a loop, so it cannot sit below the second edge
    assert not verify_cstar_tree(M, _path_tree({0, 1}))


def test_verifier_kind_checks():
    M = matroid_of(U23)
    with pytest.raises(InvalidTree):
        verify_cstar_tree(M, deletion_depth(M).witness)
    with pytest.raises(InvalidTree):
        verify_deletion_tree(M, cstar_depth(M).witness)


def test_tree_json_is_serializable(left):
    T = cstar_depth(matroid_of(left)).witness
    data = json.loads(T.to_json())
    assert data["kind"] == CSTAR_GENERAL and data["value"] == 2


# ---------------------------------------------------------------- clone neutrality

@pytest.mark.parametrize("edges", [[], [("x0", "y0")]])
def test_clone_neutrality(edges):
    G = Graph(["x0", "y0"], edges)
    M, _ = hardness_instance(G, ["x0"], ["y0"], 1, QQ, "cdd-clone")
    assert cdd_depth(M).value == contraction_depth(M).value
    M2, _ = hardness_instance(G, ["x0"], ["y0"], 1, QQ, "csdd-clone")
    assert csdd_depth(M2).value == cstar_depth(M2).value


# ---------------------------------------------------------------- oracle agreement

small = int_matrices(max_rows=3, max_cols=5, lo=-2, hi=2)


@settings(max_examples=150)
@given(small)
def test_element_depths_match_recursive_oracle(rows):
    M = matroid_of(rows)
    cols = _cols(rows)
    assert deletion_depth(M).value == dd_oracle(cols)
    assert contraction_depth(M).value == cd_oracle(cols)
    assert cdd_depth(M).value == cdd_oracle(cols)


@settings(max_examples=150)
@given(int_matrices(max_rows=3, max_cols=6, lo=-2, hi=2))
def test_cstar_depth_matches_tree_enumeration(rows):
    M = matroid_of(rows)
    assert cstar_depth(M).value == cstar_depth_by_trees(M)


@settings(max_examples=150)
@given(int_matrices(max_rows=3, max_cols=5, lo=0, hi=2), st.sampled_from([2, 3]))
def test_separation_matches_all_directions_over_prime_fields(rows, p):
    M = matroid_of(rows, GF(p))
    assert cstar_depth(M).value == cstar_depth(M, method="directions").value
    assert csdd_depth(M).value == csdd_depth(M, method="directions").value


@given(int_matrices(max_rows=3, max_cols=5, lo=-2, hi=2))
def test_bounded_generators_give_upper_bounds(rows):
    M = matroid_of(rows)
    assert cstar_depth(M, method="bounded", gen_bound=1).value >= cstar_depth(M).value


@given(int_matrices(max_rows=3, max_cols=6, lo=-2, hi=2))
def test_witnesses_verify_and_realize_value(rows):
    M = matroid_of(rows)
    for fn in (deletion_depth, contraction_depth, cdd_depth):
        rep = fn(M)
        assert verify_deletion_tree(M, rep.witness) and rep.witness.height() == rep.value
    for fn in (cstar_depth, csdd_depth):
        rep = fn(M)
        assert verify_cstar_tree(M, rep.witness) and rep.witness.depth() == rep.value


@given(int_matrices(max_rows=3, max_cols=6, lo=-2, hi=2))
def test_parameter_inequalities(rows):
    M = matroid_of(rows)
    dd, cd, cdd = deletion_depth(M).value, contraction_depth(M).value, cdd_depth(M).value
    csd, csdd = cstar_depth(M).value, csdd_depth(M).value
    assert cdd <= dd and cdd <= cd
    assert csd <= cd
    assert csdd <= cdd and csdd <= csd
    assert cdd_depth(M.dual()).value == cdd
    k = M.largest_circuit()
    if k:
        assert math.log2(k) <= csd <= k * k
        assert cd <= k * k + 1


@given(int_matrices(max_rows=3, max_cols=5, lo=-2, hi=2), st.integers(0, 10 ** 6))
def test_parameters_invariant_under_row_operations(rows, seed):
    from graver_forge.linalg import random_row_ops
    A = RatMatrix(rows)
    B = random_row_ops(A, seed, 5)
    MA, MB = matroid_of(A), matroid_of(B)
    for fn in (deletion_depth, contraction_depth, cstar_depth, csdd_depth):
        assert fn(MA).value == fn(MB).value
