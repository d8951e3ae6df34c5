"""Row-operation preconditioners with certified sparsity.

Each sparsifier returns a matrix row-equivalent to its input together with
the rooted forest that certifies the promised tree-depth bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from sympy import nextprime, primerange

from .depth import (CSTAR_DELETION, CSTAR_GENERAL, CSTAR_PRINCIPAL, DELETION, DecompositionTree,
                    DepthReport, cstar_depth, csdd_depth, deletion_depth, principal_cstar_tree,
                    verify_cstar_tree, verify_deletion_tree)
from .errors import BadParams, BudgetExceeded, InvalidTrace, InvalidTree, NoCircuits
from .fields import GF
from .graphs import (RootedForest, dual_graph, forest_certifies, incidence_graph, primal_graph, td)
from .graver import matrix_circuits
from .linalg import (RatMatrix, _reduce_with_transform, as_matrix, entry_complexity, format_rmx,
                     kernel_basis, rank, reduce_basis_to_identity, rref_matrix, row_space_equal)
from .matroid import matroid_of

DEFAULT_KAPPA_LIMIT = 10 ** 6


def log_bound(k: int) -> int:
    """``2 * ceil(log2(k + 1))``: the entry complexity of fractions of integers up to ``k``."""
    return 2 * k.bit_length()


# ---------------------------------------------------------------- outcome

@dataclass
class PreconditionOutcome:
    verdict: str  # "transformed" or "not-equivalent"
    matrix: RatMatrix | None = None
    certificate: DecompositionTree | None = None
    forest: RootedForest | None = None
    reason: str = ""
    bounds: dict = field(default_factory=dict)
    exactness: str = "exact"

    @property
    def transformed(self) -> bool:
        return self.verdict == "transformed"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "matrix": None if self.matrix is None else format_rmx(self.matrix),
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "reason": self.reason,
            "bounds": dict(self.bounds),
            "exactness": self.exactness,
        }


def _not_equivalent(reason, **bounds):
    return PreconditionOutcome("not-equivalent", reason=reason, bounds=bounds)


# ---------------------------------------------------------------- generators to unit rows

def _rows_from_generators(A: RatMatrix, gens: list) -> RatMatrix:
    """Row-equivalent matrix in which generator ``i`` becomes unit vector ``e_i``."""
    if not gens:
        return A
    G = RatMatrix.from_columns(gens, A.nrows)
    reduced, _ = _reduce_with_transform(G.hstack(A), list(range(len(gens))))
    return reduced.select_columns(range(len(gens), len(gens) + A.ncols))


def _edge_forest(T: DecompositionTree, nrows: int, keep=None):
    """Forest on row indices: edge ``i`` in preorder (filtered by ``keep``) is row ``i``."""
    parent = {}
    row_of = {}

    def walk(node, above):
        for lab, child in node.edges:
            if keep is None or keep(lab):
                r = len(row_of)
                row_of[id(child)] = r
                parent[r] = above
                walk(child, r)
            else:
                walk(child, above)

    walk(T.root, None)
    for r in range(len(row_of), nrows):
        parent[r] = None
    return parent


def _generator(M, T, lab):
    if T.kind == CSTAR_PRINCIPAL:
        return M.vector(lab)
    if T.kind == CSTAR_GENERAL:
        return lab
    return lab[1]


# ---------------------------------------------------------------- sparsifiers

def primal_sparsify(A, T: DecompositionTree) -> RatMatrix:
    """Make the non-loop vertex labels of a deletion tree an identity block."""
    A = as_matrix(A)
    M = matroid_of(A)
    if T.kind != DELETION or not verify_deletion_tree(M, T):
        raise InvalidTree("not a valid deletion-decomposition tree of M(A)")
    X = []
    for node, _, _ in T.nodes():
        X += [e for e in sorted(node.labels) if not M.is_loop(e)]
    if len(X) != M.rank():
        raise InvalidTree("vertex labels do not form a basis")
    return reduce_basis_to_identity(A, X)


def dual_sparsify_from_tree(A, T: DecompositionTree, with_forest: bool = False):
    """Turn the edge generators of a contraction* tree into unit rows in preorder."""
    A = as_matrix(A)
    M = matroid_of(A)
    if T.kind not in (CSTAR_PRINCIPAL, CSTAR_GENERAL) or not verify_cstar_tree(M, T):
        raise InvalidTree("not a valid contraction* tree of M(A)")
    gens = [_generator(M, T, lab) for lab in T.edge_labels()]
    out = _rows_from_generators(A, gens)
    if with_forest:
        return out, RootedForest(_edge_forest(T, A.nrows))
    return out


def dual_sparsify_circuit(A, with_tree: bool = False):
    """Dual sparsification driven by a principal contraction* tree.

    Guarantees ``td_D <= c1**2`` and ``ec <= 2*ceil(log2(c1+1))``; both are
    checked on the result.
    """
    A = as_matrix(A)
    circ = matrix_circuits(A)
    if not circ.vectors:
        raise NoCircuits("the matrix has a trivial kernel")
    T = principal_cstar_tree(matroid_of(A))
    out = dual_sparsify_from_tree(A, T)
    c1 = circ.c1
    if td(dual_graph(out)) > c1 * c1 or entry_complexity(out) > log_bound(c1):
        raise RuntimeError("internal error: circuit-driven sparsification broke its bounds")
    return (out, T) if with_tree else out


def incidence_sparsify(A, T: DecompositionTree, with_forest: bool = False):
    """Equivalent matrix with incidence tree-depth at most the tree depth plus one.

    Contraction generators, in preorder, become unit rows.  In the resulting
    forest a contraction edge is a row vertex, a deletion edge is the vertex
    of the deleted column, and every other column hangs below the edge that
    turned it into a loop.
    """
    A = as_matrix(A)
    M = matroid_of(A)
    if T.kind != CSTAR_DELETION:
        raise InvalidTrace(f"expected a contraction*-deletion tree, got {T.kind}")
    try:
        ok = verify_cstar_tree(M, T)
    except Exception as exc:
        raise InvalidTrace(str(exc)) from exc
    if not ok:
        raise InvalidTrace("not a valid contraction*-deletion decomposition of M(A)")
    gens = [lab[1] for lab in T.edge_labels() if lab[0] == "contract"]
    out = _rows_from_generators(A, gens)
    if not with_forest:
        return out
    parent = {}
    nrow = [0]
    placed = set()

    def walk(node, above):
        below = set()
        for lab, child in node.edges:
            if lab[0] == "contract":
                v = ("r", nrow[0])
                nrow[0] += 1
            else:
                v = ("c", lab[1])
                placed.add(lab[1])
                below.add(lab[1])
            parent[v] = above
            below |= child.elements
            walk(child, v)
        for e in node.elements - below:
            if e not in placed:
                parent[("c", e)] = above
                placed.add(e)

    walk(T.root, None)
    for i in range(nrow[0], A.nrows):
        parent[("r", i)] = None
    return out, RootedForest(parent)


# ---------------------------------------------------------------- kappa

@dataclass(frozen=True)
class Kappa0:
    d: int
    e: int
    k0_bound: int
    kappa0: int


def lcm_upto(k: int) -> int:
    out = 1
    for p in primerange(2, k + 1):
        q = p
        while q * p <= k:
            q *= p
        out *= q
    return out


def kappa0_of(d: int, e: int, limit: int = DEFAULT_KAPPA_LIMIT) -> Kappa0:
    """``k0 = (2^e)^(d!) * (d!)^(d!/2)`` and ``kappa0 = lcm(1..k0)``."""
    if d < 1 or e < 1:
        raise BadParams("d and e must be positive")
    f = math.factorial(d)
    # estimate before building a possibly enormous integer
    if e * f + (f / 2) * math.log2(f) > math.log2(limit) + 1:
        raise BudgetExceeded(f"k0 for d={d}, e={e} exceeds the limit {limit}")
    k0 = 2 ** (e * f) * (f ** (f // 2) if f % 2 == 0 else 1)
    if k0 > limit:
        raise BudgetExceeded(f"k0 = {k0} exceeds the limit {limit}")
    return Kappa0(d, e, k0, lcm_upto(k0))


# ---------------------------------------------------------------- pipelines

def alg_tdP(A, d: int, e: int, kappa_override: int | None = None,
            kappa_limit: int = DEFAULT_KAPPA_LIMIT) -> PreconditionOutcome:
    """Equivalent matrix with primal tree-depth at most ``d``, or a refusal.

    Follows the finite-field route: normalize a basis to the identity, scale
    by kappa to an integer matrix, compute a deletion tree over GF(p) with
    ``p > kappa**2``, and keep it only if it is also valid over the rationals.
    """
    A = as_matrix(A)
    if A.nrows == 0 or rank(A) != A.nrows:
        raise BadParams("alg_tdP needs a matrix with independent rows; strip dependent rows first")
    kappa = kappa_override if kappa_override is not None else kappa0_of(d, e, kappa_limit).kappa0
    _, piv = rref_matrix(A)
    AI = reduce_basis_to_identity(A, piv)
    for x in AI.entries:
        if x != 0 and (kappa % x.numerator or kappa % x.denominator):
            return _not_equivalent(f"entry {x} of the normalized matrix does not divide kappa={kappa}",
                                   kappa=kappa)
    A0 = AI.scale(kappa)
    p = int(nextprime(kappa * kappa))
    Mp = matroid_of(A0, GF(p))
    rep = deletion_depth(Mp, budget=d)
    if rep.exceeded:
        return _not_equivalent(f"deletion-depth over GF({p}) exceeds {d}", kappa=kappa, p=p)
    MQ = matroid_of(A)
    if not verify_deletion_tree(MQ, rep.witness):
        return _not_equivalent(f"the GF({p}) deletion tree is not valid over the rationals", kappa=kappa, p=p)
    out = primal_sparsify(A, rep.witness)
    for x in out.entries:
        if abs(x.numerator) > kappa or x.denominator > kappa:
            return _not_equivalent(f"entry {x} exceeds kappa={kappa}", kappa=kappa, p=p)
    tdp = td(primal_graph(out))
    ec = entry_complexity(out)
    if tdp > d or ec > log_bound(kappa):
        raise RuntimeError("internal error: primal sparsification broke its bounds")
    return PreconditionOutcome("transformed", out, rep.witness,
                               bounds={"td": tdp, "ec": ec, "kappa": kappa, "p": p, "dd": rep.value})


def unit_form(A) -> RatMatrix:
    """For full column rank: the identity on top of zero rows."""
    A = as_matrix(A)
    return reduce_basis_to_identity(A, list(range(A.ncols)))


def alg_tdD(A, d: int, e: int | None = None, k_override: int | None = None,
            method: str = "auto", gen_bound: int = 2) -> PreconditionOutcome:
    """Equivalent matrix with optimal dual tree-depth if it is at most ``d``.

    The working circuit bound ``k`` is ``c1(A)`` itself unless overridden.
    """
    A = as_matrix(A)
    if not kernel_basis(A):
        out = unit_form(A)
        tdd = td(dual_graph(out)) if out.nrows else 0
        if tdd > d:
            return _not_equivalent(f"dual tree-depth {tdd} exceeds {d}")
        return PreconditionOutcome("transformed", out, None, bounds={"td": tdd, "ec": entry_complexity(out)})
    circ = matrix_circuits(A)
    k = k_override if k_override is not None else circ.c1
    first, _ = dual_sparsify_circuit(A, with_tree=True)
    if td(dual_graph(first)) > k * k or entry_complexity(first) > log_bound(k):
        return _not_equivalent(f"c1(A) exceeds k={k}", c1=circ.c1, k=k)
    rep = cstar_depth(matroid_of(A), method=method, gen_bound=gen_bound)
    if rep.value > d:
        return _not_equivalent(f"optimal dual tree-depth {rep.value} exceeds {d}", td=rep.value, c1=circ.c1)
    out, forest = dual_sparsify_from_tree(A, rep.witness, with_forest=True)
    tdd = td(dual_graph(out))
    if tdd > rep.value or not forest_certifies(dual_graph(out), forest):
        raise RuntimeError("internal error: dual sparsification broke its certificate")
    return PreconditionOutcome("transformed", out, rep.witness, forest,
                               bounds={"td": tdd, "ec": entry_complexity(out), "c1": circ.c1, "csd": rep.value},
                               exactness=rep.exactness)


def alg_tdI(A, d: int, method: str = "auto", gen_bound: int = 2) -> PreconditionOutcome:
    """Equivalent matrix with incidence tree-depth ``csdd + 1`` if that is at most ``d``."""
    A = as_matrix(A)
    M = matroid_of(A)
    if len(M) == 0:
        raise BadParams("matrix has no columns")
    rep = csdd_depth(M, method=method, gen_bound=gen_bound)
    if rep.value + 1 > d:
        return _not_equivalent(f"optimal incidence tree-depth {rep.value + 1} exceeds {d}", csdd=rep.value)
    out, forest = incidence_sparsify(A, rep.witness, with_forest=True)
    G = incidence_graph(out)
    tdi = td(G)
    if tdi > rep.value + 1 or not forest_certifies(G, forest):
        raise RuntimeError("internal error: incidence sparsification broke its certificate")
    return PreconditionOutcome("transformed", out, rep.witness, forest,
                               bounds={"td": tdi, "ec": entry_complexity(out), "csdd": rep.value},
                               exactness=rep.exactness)


def check_equivalent(A, B) -> bool:
    return row_space_equal(A, B)
