"""scikit-learn style wrappers around the sparsification routines.

``fit(A)`` finds an equivalent sparse matrix ``A' = P A`` together with the
decomposition certificate; ``transform(X)`` applies the same row operation
``P`` to any matrix or right-hand side with ``A.nrows`` rows.  Everything
stays in exact rationals, so floats are rejected.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .depth import csdd_depth, cstar_depth, deletion_depth
from .errors import ShapeMismatch
from .fields import QQ, rref
from .graphs import dual_graph, incidence_graph, primal_graph, td
from .linalg import RatMatrix, as_matrix
from .matroid import matroid_of
from .precondition import dual_sparsify_from_tree, incidence_sparsify, primal_sparsify


def check_matrix(X, *, min_cols: int = 1) -> RatMatrix:
    """Validate input as an exact rational matrix (floats raise TypeError)."""
    A = as_matrix(X)
    if A.ncols < min_cols:
        raise ShapeMismatch(f"expected at least {min_cols} column(s), got shape {A.shape}")
    return A


def left_factor(A: RatMatrix, B: RatMatrix) -> RatMatrix:
    """Some ``P`` with ``P A = B``; raises ShapeMismatch if the row spaces differ.

    Only a row basis of A gets non-zero coefficients, so P is unique when A
    has independent rows.
    """
    basis = []
    for i in range(A.nrows):
        if len(rref([A.rows[j] for j in basis + [i]], QQ, A.ncols)[1]) > len(basis):
            basis.append(i)
    r = len(basis)
    # solve A_R^T c = b^T for every row b of B at once
    aug = [[A.rows[i][j] for i in basis] + [B.rows[k][j] for k in range(B.nrows)] for j in range(A.ncols)]
    R, piv = rref(aug, QQ, r + B.nrows)
    if any(p >= r for p in piv):
        raise ShapeMismatch("the target rows are not combinations of the source rows")
    P = [[0] * A.nrows for _ in range(B.nrows)]
    for row, p in zip(R, piv):
        for k in range(B.nrows):
            P[k][basis[p]] = row[r + k]
    return RatMatrix(P, ncols=A.nrows)


class _Sparsifier(TransformerMixin, BaseEstimator):
    _graph = None

    def _tree(self, M):
        raise NotImplementedError

    def _sparsify(self, A, tree):
        raise NotImplementedError

    def fit(self, X, y=None):
        A = check_matrix(X)
        rep = self._tree(matroid_of(A))
        self.depth_ = rep.value
        self.exactness_ = rep.exactness
        self.certificate_ = rep.witness
        self.matrix_ = self._sparsify(A, rep.witness)
        self.transform_matrix_ = left_factor(A, self.matrix_)
        self.tree_depth_ = td(type(self)._graph(self.matrix_))
        self.n_rows_in_ = A.nrows
        return self

    def transform(self, X):
        if not hasattr(self, "transform_matrix_"):
            raise NotFittedError(f"{type(self).__name__} is not fitted yet")
        X = check_matrix(X)
        if X.nrows != self.n_rows_in_:
            raise ShapeMismatch(f"expected {self.n_rows_in_} rows, got {X.nrows}")
        return self.transform_matrix_ @ X


class PrimalSparsifier(_Sparsifier):
    """Equivalent matrix whose primal tree-depth equals the deletion-depth."""

    _graph = staticmethod(primal_graph)

    def _tree(self, M):
        return deletion_depth(M)

    def _sparsify(self, A, tree):
        return primal_sparsify(A, tree)


class DualSparsifier(_Sparsifier):
    """Equivalent matrix whose dual tree-depth equals the contraction*-depth."""

    _graph = staticmethod(dual_graph)

    def __init__(self, method: str = "auto", gen_bound: int = 2):
        self.method = method
        self.gen_bound = gen_bound

    def _tree(self, M):
        return cstar_depth(M, method=self.method, gen_bound=self.gen_bound)

    def _sparsify(self, A, tree):
        return dual_sparsify_from_tree(A, tree)


class IncidenceSparsifier(_Sparsifier):
    """Equivalent matrix whose incidence tree-depth is contraction*-deletion-depth plus one."""

    _graph = staticmethod(incidence_graph)

    def __init__(self, method: str = "auto", gen_bound: int = 2):
        self.method = method
        self.gen_bound = gen_bound

    def _tree(self, M):
        return csdd_depth(M, method=self.method, gen_bound=self.gen_bound)

    def _sparsify(self, A, tree):
        return incidence_sparsify(A, tree)
