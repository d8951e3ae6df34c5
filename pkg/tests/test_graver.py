import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import circuits_brute, graver_brute, matvec, sym_kernel_dim
from strategies import int_matrices

from graver_forge.errors import BoxTooSmall, BudgetExceeded, DimensionMismatch, GraverMismatch
from graver_forge.graver import (canonical, conformal_leq, g1_table, graver_basis, graver_by_box,
                                 graver_completion, kernel_points_in_box, lattice_kernel_basis, matrix_circuits)
from graver_forge.linalg import RatMatrix, random_row_ops


def test_band_circuits(band):
    C = matrix_circuits(band)
    assert C.vectors == [(4, -2, 1)]
    assert (C.c1, C.c_inf, C.kappa_dot) == (7, 4, 4)


def test_identity_has_no_circuits():
    C = matrix_circuits(RatMatrix.identity(3))
    assert C.vectors == [] and C.c1 is None and C.c_inf is None


def test_star_circuit(star5):
    C = matrix_circuits(star5)
    assert C.vectors == [(4, 1, 1, 1, 1)] and C.c1 == 8


def test_ones_row_graver():
    G = graver_basis([[1, 1, 1]])
    assert G.signed() == {(1, -1, 0), (-1, 1, 0), (1, 0, -1), (-1, 0, 1), (0, 1, -1), (0, -1, 1)}
    assert G.g1 == 2 and G.certified


def test_band_graver(band):
    G = graver_basis(band)
    assert (4, -2, 1) in G.vectors and G.certified
    assert G.signed() == graver_brute(band, 5)


def test_star_graver(star5):
    G = graver_basis(star5)
    assert G.signed() == {(4, 1, 1, 1, 1), (-4, -1, -1, -1, -1)}
    assert G.g1 == 8 and G.certified


def test_full_column_rank_has_empty_graver():
    G = graver_basis(RatMatrix.identity(2))
    assert G.vectors == [] and G.g1 is None


def test_conformal_order():
    assert conformal_leq((1, 0, -1), (2, 0, -1))
    assert not conformal_leq((1, 0, -1), (2, 0, 1))
    assert not conformal_leq((2, 0), (1, 0))
    with pytest.raises(DimensionMismatch):
        conformal_leq((1,), (1, 2))


def test_canonical_sign():
    assert canonical((0, -2, 1)) == (0, 2, -1)
    assert canonical((0, 0)) == (0, 0)


def test_box_too_small_is_reported():
    with pytest.raises(BoxTooSmall):
        graver_by_box([[1, 2, 0], [0, 1, 2]], 4)
    assert graver_by_box([[1, 2, 0], [0, 1, 2]], 5) == [(4, -2, 1)]


def test_box_only_mode_is_uncertified():
    G = graver_basis([[1, 1, 1]], box_bound=3, method="box")
    assert not G.certified and G.g1 == 2


def test_box_point_cap():
    assert kernel_points_in_box([[1, 1, 1, 1, 1, 1]], 10, max_points=1000) is None
    G = graver_basis([[1, 1, 1, 1, 1, 1]], max_box_points=1000)
    assert not G.certified and G.notes


def test_completion_step_budget():
    with pytest.raises(BudgetExceeded):
        graver_completion([[1, 2, 3, 5]], max_steps=3)


def test_mismatch_is_raised(monkeypatch):
    import graver_forge.graver as gv
    monkeypatch.setattr(gv, "graver_completion", lambda A, max_steps=0: [(1, -1, 0)])
    with pytest.raises(GraverMismatch):
        gv.graver_basis([[1, 1, 1]])


def test_g1_table_is_monotone():
    assert g1_table([(3, 4), (2, 5), (3, 3), (7, 7)]) == [(2, 5), (3, 5), (7, 7)]


# ---------------------------------------------------------------- properties

small = int_matrices(max_rows=2, max_cols=4, lo=-2, hi=2)


@given(int_matrices(max_rows=4, max_cols=6))
def test_lattice_basis_spans_kernel(rows):
    B = lattice_kernel_basis(rows)
    assert len(B) == sym_kernel_dim(rows, len(rows[0]))
    for v in B:
        assert all(x == 0 for x in matvec(rows, v))


@settings(max_examples=60)
@given(small)
def test_completion_matches_brute_force(rows):
    G = graver_completion(rows)
    bound = max((max(abs(x) for x in v) for v in G), default=0) + 1
    brute = graver_brute(rows, bound)
    assert {v for g in G for v in (g, tuple(-x for x in g))} == brute


@given(small)
def test_circuits_match_brute_force_and_lie_in_graver(rows):
    C = matrix_circuits(rows)
    signed = {v for c in C.vectors for v in (c, tuple(-x for x in c))}
    assert signed == circuits_brute(rows)
    assert set(C.vectors) <= set(graver_completion(rows))


@given(int_matrices(max_rows=3, max_cols=5), st.integers(0, 10 ** 6))
def test_graver_invariant_under_row_operations(rows, seed):
    B = random_row_ops(RatMatrix(rows), seed, 6)
    assert graver_completion(rows) == graver_completion(B)
    assert matrix_circuits(rows).vectors == matrix_circuits(B).vectors


@given(int_matrices(max_rows=3, max_cols=5))
def test_graver_elements_are_minimal(rows):
    G = graver_completion(rows)
    signed = [v for g in G for v in (g, tuple(-x for x in g))]
    for v in signed:
        assert all(x == 0 for x in matvec(rows, v))
        assert not any(w != v and conformal_leq(w, v) for w in signed)
