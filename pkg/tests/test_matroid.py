import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import RankMatroid
from strategies import int_matrices

from graver_forge.errors import NotIntegral, OverlapError, TooLarge, UnknownElement
from graver_forge.fields import GF, QQ
from graver_forge.forge import matroid_from_graph
from graver_forge.graphs import Graph
from graver_forge.linalg import RatMatrix
from graver_forge.matroid import (clone_k, components, contract_subspace, dualize, matroid_circuits, matroid_equal,
                                  matroid_of, minor, parse_matroid, rank)

U23 = [[1, 0, 1], [0, 1, 1]]


def _subsets(ground):
    g = sorted(ground)
    for k in range(len(g) + 1):
        yield from itertools.combinations(g, k)


def test_identity_matroid():
    M = matroid_of(RatMatrix.identity(2))
    assert len(M) == 2 and rank(M) == 2 and len(components(M)) == 2


def test_uniform_rank_two():
    M = matroid_of(U23)
    assert all(M.is_independent(S) for S in itertools.combinations(range(3), 2))
    assert matroid_circuits(M) == [frozenset({0, 1, 2})]


def test_identity_has_no_circuits():
    assert matroid_circuits(matroid_of(RatMatrix.identity(3))) == []


def test_single_edge_vertex_edge_matroid():
    M = matroid_from_graph(Graph("uv", [("u", "v")])).matroid
    assert len(M) == 3 and rank(M) == 2
    assert matroid_circuits(M) == [frozenset({0, 1, 2})]


def test_components():
    assert sorted(map(sorted, components(matroid_of(RatMatrix.identity(3))))) == [[0], [1], [2]]
    assert components(matroid_of([[1, 1]])) == [[0, 1]]
    M = matroid_of([[1, 0, 1], [0, 0, 1]])
    assert [1] in components(M) and M.is_loop(1)


def test_dual_of_identity_is_all_loops():
    D = dualize(matroid_of(RatMatrix.identity(3)))
    assert all(D.is_loop(e) for e in D.ground)


def test_dual_of_parallel_pair():
    D = dualize(matroid_of([[1, 1]]))
    assert rank(D) == 1 and all(D.rank([e]) == 1 for e in D.ground)


def test_contract_loop_is_deletion():
    M = matroid_of([[1, 0, 1], [0, 0, 1]])
    assert matroid_equal(minor(M, contract=[1]), minor(M, delete=[1]))


def test_contract_element_makes_parallel_pair():
    N = minor(matroid_of(U23), contract=[0])
    assert rank(N) == 1 and not N.is_independent([1, 2])


def test_delete_everything():
    assert len(minor(matroid_of(U23), delete=[0, 1, 2])) == 0


def test_minor_overlap_rejected():
    with pytest.raises(OverlapError):
        minor(matroid_of(U23), delete=[0], contract=[0])


def test_unknown_element():
    with pytest.raises(UnknownElement):
        matroid_of(U23).rank([7])


def test_contract_subspace_cases():
    M = matroid_of(U23)
    assert matroid_equal(contract_subspace(M, []), M)
    N = contract_subspace(M, [[1, 0], [0, 1]])
    assert all(N.is_loop(e) for e in N.ground)
    lab = matroid_from_graph(Graph("uv", [("u", "v")]))
    w = lab.element_of(("vertex", "u"))
    Q = contract_subspace(lab.matroid, [[1, 0]])
    assert Q.is_loop(w)


def test_clone_makes_parallel_classes():
    M = clone_k(matroid_of(U23), 2)
    assert len(M) == 6 and rank(M) == 2
    assert sum(1 for C in M.circuits() if len(C) == 2) == 3


def test_prime_field_needs_integral_entries():
    with pytest.raises(NotIntegral):
        matroid_of(RatMatrix([["1/2", 1]]), GF(5))


def test_same_matroid_over_large_prime():
    A = [[1, 2, 0, 3], [0, 1, 2, 1]]
    assert matroid_equal(matroid_of(A, QQ), matroid_of(A, GF(101)))
    # over GF(2) the column (0, 2) becomes a loop
    assert not matroid_equal(matroid_of(A, QQ), matroid_of(A, GF(2)))


def test_matroid_equal_size_guard():
    M = matroid_of(RatMatrix.identity(17))
    with pytest.raises(TooLarge):
        matroid_equal(M, M)


def test_rmx_field_round_trip():
    M = matroid_of([[1, 1, 0], [0, 1, 1]], GF(3))
    N = parse_matroid(M.to_rmx())
    assert N.field == GF(3) and matroid_equal(M, N)


# ---------------------------------------------------------------- properties

def _cols(rows):
    return [tuple(r[j] for r in rows) for j in range(len(rows[0]))]


@given(int_matrices(max_rows=3, max_cols=5))
def test_rank_function_matches_oracle(rows):
    M = matroid_of(rows)
    O = RankMatroid(_cols(rows))
    for S in _subsets(M.ground):
        assert M.rank(S) == O.rank(S)


@given(int_matrices(max_rows=3, max_cols=5))
def test_circuits_and_components_match_oracle(rows):
    M = matroid_of(rows)
    O = RankMatroid(_cols(rows))
    assert set(M.circuits()) == set(O.circuits())
    assert {frozenset(c) for c in M.components()} == set(O.components())


@given(int_matrices(max_rows=3, max_cols=5))
def test_dual_rank_formula(rows):
    M = matroid_of(rows)
    D = M.dual()
    E = set(M.ground)
    for S in _subsets(E):
        assert D.rank(S) == len(S) - M.rank(E) + M.rank(E - set(S))


@given(int_matrices(max_rows=3, max_cols=5))
def test_double_dual_is_identity(rows):
    M = matroid_of(rows)
    assert matroid_equal(M.dual().dual(), M)


@given(int_matrices(max_rows=3, max_cols=5), st.data())
def test_minor_rank_matches_oracle(rows, data):
    M = matroid_of(rows)
    ground = sorted(M.ground)
    C = data.draw(st.sets(st.sampled_from(ground)))
    D = data.draw(st.sets(st.sampled_from([e for e in ground if e not in C] or ground)).filter(lambda s: not s & C))
    N = M.minor(delete=D, contract=C)
    O = RankMatroid(_cols(rows), set(ground) - C - D, C)
    for S in _subsets(N.ground):
        assert N.rank(S) == O.rank(S)


@given(int_matrices(max_rows=3, max_cols=4), st.integers(2, 3))
def test_clone_keeps_rank(rows, k):
    M = matroid_of(rows)
    K = M.clone(k)
    assert len(K) == k * len(M) and K.rank() == M.rank()
