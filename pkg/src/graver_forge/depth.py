"""Matroid depth parameters with witness decomposition trees.

All five parameters (deletion, contraction, contraction-deletion,
contraction*, contraction*-deletion depth) run through one memoized
branch-and-bound search over canonical minors.  A minor is stored by the
reduced echelon form of its live columns, so coordinates are always
coefficients on the leftmost basis of the minor.  Any such coefficient vector
lifts back to the original ambient space as a combination of the original
vectors of those basis elements.

Contraction* over an arbitrary field is solved by the "separation" move: for
a connected minor N, an optimal tree contracts some subspace I one direction
at a time until N/I falls apart (or has rank zero).  The smallest such I is
``span(S) & span(T)`` for a bipartition (S, T) of the elements, so it is
enough to try those intersections, paying ``dim I`` for each.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable

from .errors import EmptyMatroid, InvalidTree, LabelMismatch, BadParams
from .fields import PrimeField, rank_of, rref
from .graphs import ExceedsBudget
from .linalg import format_rational
from .matroid import LinearMatroid

DELETION = "deletion"
CONTRACTION = "contraction"
CONTRACTION_DELETION = "contraction-deletion"
CSTAR_PRINCIPAL = "cstar-principal"
CSTAR_GENERAL = "cstar-general"
CSTAR_DELETION = "cstar-deletion"

ELEMENT_KINDS = (DELETION, CONTRACTION, CONTRACTION_DELETION)
CSTAR_KINDS = (CSTAR_PRINCIPAL, CSTAR_GENERAL, CSTAR_DELETION)


# ---------------------------------------------------------------- trees

@dataclass
class TreeNode:
    elements: frozenset
    labels: frozenset = frozenset()
    edges: list = field(default_factory=list)  # [(label, TreeNode)]

    def children(self):
        return [c for _, c in self.edges]


@dataclass
class DecompositionTree:
    kind: str
    root: TreeNode
    notes: tuple = ()

    def nodes(self):
        """Preorder iterator of ``(node, parent, edge_label)``."""
        stack = [(self.root, None, None)]
        while stack:
            node, par, lab = stack.pop()
            yield node, par, lab
            for lab2, ch in reversed(node.edges):
                stack.append((ch, node, lab2))

    def edge_labels(self) -> list:
        """Edge labels in preorder."""
        return [lab for _, par, lab in self.nodes() if par is not None]

    def height(self) -> int:
        """Largest number of vertices on a root-to-leaf path."""
        def h(n):
            return 1 + max((h(c) for c in n.children()), default=0)
        return h(self.root)

    def depth(self) -> int:
        """Largest number of edges on a root-to-leaf path."""
        return self.height() - 1

    @property
    def value(self) -> int:
        return self.height() if self.kind in ELEMENT_KINDS else self.depth()

    def to_dict(self) -> dict:
        nodes = []
        ids = {}
        for node, par, lab in self.nodes():
            ids[id(node)] = len(nodes)
            nodes.append({
                "id": len(nodes),
                "parent": None if par is None else ids[id(par)],
                "edge_label": _label_json(lab),
                "labels": sorted(node.labels),
                "elements": sorted(node.elements),
            })
        return {"kind": self.kind, "value": self.value, "notes": list(self.notes), "nodes": nodes}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _label_json(lab):
    if lab is None:
        return None
    if isinstance(lab, tuple) and len(lab) == 2 and isinstance(lab[0], str):
        return [lab[0], _label_json(lab[1])]
    if isinstance(lab, tuple):
        return [format_rational(x) if hasattr(x, "denominator") and not isinstance(x, int) else int(x) for x in lab]
    return lab


@dataclass
class DepthReport:
    name: str
    value: object  # int, or ExceedsBudget
    witness: DecompositionTree | None
    exactness: str = "exact"
    method: str = ""

    @property
    def exceeded(self) -> bool:
        return isinstance(self.value, ExceedsBudget)

    def to_dict(self) -> dict:
        val = self.value if not self.exceeded else {"exceeds_budget": self.value.budget}
        return {"parameter": self.name, "value": val, "exactness": self.exactness, "method": self.method,
                "witness": None if self.witness is None else self.witness.to_dict()}


# ---------------------------------------------------------------- canonical minors

class _State:
    __slots__ = ("ids", "live", "cols", "pivots", "rank", "key")

    def __init__(self, ids, live, cols, pivots, rank, key):
        self.ids = ids
        self.live = live
        self.cols = cols
        self.pivots = pivots
        self.rank = rank
        self.key = key


def _canon(F, ids, vecs, keep_loops_in_key: bool) -> _State:
    ids = tuple(sorted(ids))
    live = tuple(e for e in ids if any(x != 0 for x in vecs[e]))
    if live:
        dim = len(vecs[live[0]])
        rows = [[vecs[e][i] for e in live] for i in range(dim)]
        R, piv = rref(rows, F, len(live))
    else:
        R, piv = [], []
    cols = {e: tuple(r[j] for r in R) for j, e in enumerate(live)}
    pivots = tuple(live[p] for p in piv)
    # contraction* values ignore loops, but the witness still has to know
    # whether a split into loops and the rest is pending
    key = (ids if keep_loops_in_key else (live, len(live) < len(ids)), tuple(cols[e] for e in live))
    return _State(ids, live, cols, pivots, len(piv), key)


def _zero(F, r):
    return (F.zero,) * r


def _vec(st: _State, F, e):
    return st.cols.get(e) or _zero(F, st.rank)


def _components(st: _State) -> list[list]:
    parent = {e: e for e in st.ids}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pset = set(st.pivots)
    for e in st.live:
        if e in pset:
            continue
        for i, c in enumerate(st.cols[e]):
            if c != 0:
                a, b = find(e), find(st.pivots[i])
                if a != b:
                    parent[a] = b
    groups: dict = {}
    for e in st.ids:
        groups.setdefault(find(e), []).append(e)
    return sorted(groups.values(), key=lambda g: g[0])


def _quotient_vecs(F, vecs: dict, gens: list) -> dict:
    gens = [g for g in gens if any(x != 0 for x in g)]
    if not gens:
        return dict(vecs)
    dim = len(gens[0])
    R, piv = rref(gens, F, dim)
    keep = [c for c in range(dim) if c not in set(piv)]
    out = {}
    for e, v in vecs.items():
        w = list(v)
        for row, p in zip(R, piv):
            f = w[p]
            if f != 0:
                w = [F.norm(a - f * b) for a, b in zip(w, row)]
        out[e] = tuple(w[c] for c in keep)
    return out


def _span_basis(F, vectors):
    vs = [v for v in vectors if any(x != 0 for x in v)]
    if not vs:
        return []
    return rref(vs, F)[0]


def _intersection(F, B1, B2, dim):
    """Basis (reduced echelon rows) of span(B1) & span(B2)."""
    if not B1 or not B2:
        return []
    # columns of [B1^T | -B2^T]; kernel vectors (x, y) give x.B1 = y.B2
    k1 = len(B1)
    cols = [list(b) for b in B1] + [[F.norm(-x) for x in b] for b in B2]
    rows = [[c[i] for c in cols] for i in range(dim)]
    R, piv = rref(rows, F, len(cols))
    pset = set(piv)
    out = []
    for f in range(len(cols)):
        if f in pset:
            continue
        x = [F.zero] * len(cols)
        x[f] = F.one
        for i, p in enumerate(piv):
            x[p] = F.norm(-R[i][f])
        v = [F.zero] * dim
        for a in range(k1):
            if x[a] != 0:
                v = [F.norm(s + x[a] * t) for s, t in zip(v, B1[a])]
        out.append(v)
    return _span_basis(F, out)


def _parallel_classes(F, st: _State, elems) -> list[list]:
    """Group non-loop elements by the line they span (lowest id first)."""
    classes: dict = {}
    for e in elems:
        v = st.cols.get(e)
        if v is None:
            continue
        lead = next(x for x in v if x != 0)
        key = tuple(F.div(x, lead) for x in v)
        classes.setdefault(key, []).append(e)
    return sorted(classes.values(), key=lambda c: c[0])


class _Search:
    """Memoized exact search for one parameter over one matroid."""

    def __init__(self, M: LinearMatroid, kind: str, method: str = "separation", gen_bound: int = 2):
        self.M = M
        self.F = M.field
        self.kind = kind
        self.method = method
        self.gen_bound = gen_bound
        self.exact: dict = {}
        self.lower: dict = {}
        self.cstar = kind in ("csd", "csdd", "principal")
        self._dirs: dict = {}

    # -- state helpers

    def root(self) -> _State:
        return _canon(self.F, self.M.ground, {e: self.M.vector(e) for e in self.M.ground}, not self.cstar)

    def sub(self, st: _State, elems) -> _State:
        return _canon(self.F, elems, {e: _vec(st, self.F, e) for e in elems}, not self.cstar)

    def quotient(self, st: _State, gens, drop=()) -> _State:
        vecs = {e: _vec(st, self.F, e) for e in st.ids if e not in drop}
        return _canon(self.F, vecs.keys(), _quotient_vecs(self.F, vecs, list(gens)), not self.cstar)

    def lift(self, st: _State, u) -> tuple:
        F = self.F
        dim = self.M.dim
        out = [F.zero] * dim
        for coef, p in zip(u, st.pivots):
            if coef != 0:
                out = [F.norm(a + coef * b) for a, b in zip(out, self.M.vector(p))]
        return tuple(out)

    def relevant_components(self, st: _State) -> list[list]:
        comps = _components(st)
        if self.cstar:
            live = set(st.live)
            comps = [c for c in comps if any(e in live for e in c)]
        return comps

    # -- bounds and moves

    def lower_bound(self, st: _State) -> int:
        if self.cstar:
            return 2 if st.rank >= 2 else 1
        return 2

    def moves(self, st: _State, limit: int):
        """Yield ``(cost, move, child_state)`` for a connected state."""
        F = self.F
        kind = self.kind
        classes = _parallel_classes(F, st, st.live)
        if kind in ("dd", "cdd", "csdd"):
            # deleting any member of a parallel class gives an isomorphic minor
            for cl in classes:
                e = cl[0]
                yield 1, ("delete", e), self.sub(st, [x for x in st.ids if x != e])
        if kind in ("cd", "cdd", "principal"):
            for cl in classes:
                e = cl[0]
                drop = () if kind == "principal" else (e,)
                yield 1, ("contract", e), self.quotient(st, [st.cols[e]], drop)
        if kind in ("csd", "csdd"):
            if self.method == "separation":
                yield from self._separation_moves(st, classes, limit)
            else:
                for g in self._directions(st.rank):
                    yield 1, ("direction", g), self.quotient(st, [g])

    def _separation_moves(self, st: _State, classes, limit):
        F = self.F
        r = st.rank
        seen = set()
        cands = []
        if len(classes) >= 2:
            rest = list(range(1, len(classes)))
            for mask in range(0, 1 << len(rest)):
                S = [0] + [rest[i] for i in range(len(rest)) if mask >> i & 1]
                if len(S) == len(classes):
                    continue
                T = [i for i in range(len(classes)) if i not in S]
                BS = _span_basis(F, [st.cols[classes[i][0]] for i in S])
                BT = _span_basis(F, [st.cols[classes[i][0]] for i in T])
                I = _intersection(F, BS, BT, r)
                key = tuple(tuple(row) for row in I)
                if not I or key in seen:
                    continue
                seen.add(key)
                cands.append((len(I), key))
        full = tuple(tuple(F.one if i == j else F.zero for j in range(r)) for i in range(r))
        if full not in seen:
            cands.append((r, full))
        cands.sort(key=lambda c: c[0])
        for d, I in cands:
            if d + (1 if d < r else 0) > limit:
                break
            yield d, ("subspace", I), self.quotient(st, list(I))

    def _directions(self, r: int):
        if r in self._dirs:
            return self._dirs[r]
        F = self.F
        out = []
        if isinstance(F, PrimeField):
            p = F.p
            for lead in range(r):
                for tail in product(range(p), repeat=r - lead - 1):
                    out.append(tuple([0] * lead + [1] + list(tail)))
        else:
            B = self.gen_bound
            for v in product(range(-B, B + 1), repeat=r):
                if not any(v):
                    continue
                if next(x for x in v if x != 0) < 0 or math.gcd(*v) != 1:
                    continue
                out.append(tuple(F.coerce(x) for x in v))
        self._dirs[r] = out
        return out

    # -- search

    def base_value(self, st: _State):
        if self.cstar:
            if st.rank == 0:
                return 0
            if self.kind == "csdd" and len(st.live) == 1:
                return 1
            return None
        if len(st.ids) == 1:
            return 1
        return None

    def solve(self, st: _State, limit: int):
        key = st.key
        hit = self.exact.get(key)
        if hit is not None:
            return hit[0] if hit[0] <= limit else None
        if self.lower.get(key, 0) > limit:
            return None
        base = self.base_value(st)
        if base is not None:
            self.exact[key] = (base, None)
            return base if base <= limit else None
        comps = self.relevant_components(st)
        if len(comps) > 1 or (self.cstar and len(comps) == 1 and len(comps[0]) < len(st.ids)):
            worst = 0
            for c in comps:
                v = self.solve(self.sub(st, c), limit)
                if v is None:
                    self.lower[key] = max(self.lower.get(key, 0), limit + 1)
                    return None
                worst = max(worst, v)
            self.exact[key] = (worst, "split")
            return worst
        lb = self.lower_bound(st)
        if lb > limit:
            self.lower[key] = max(self.lower.get(key, 0), lb)
            return None
        best, best_move = None, None
        cur = limit
        for cost, move, child in self.moves(st, cur):
            if cost + (0 if self.base_value(child) == 0 else 1) > cur:
                continue
            v = self.solve(child, cur - cost)
            if v is None:
                continue
            best, best_move = cost + v, move
            cur = best - 1
            if best <= lb:
                break
        if best is None:
            self.lower[key] = max(self.lower.get(key, 0), limit + 1)
            return None
        self.exact[key] = (best, best_move)
        return best

    # -- witness

    def witness(self, st: _State) -> TreeNode:
        value, move = self.exact[st.key]
        F = self.F
        elements = frozenset(st.ids)
        if move is None:
            if not self.cstar:
                return TreeNode(elements, frozenset(st.ids))
            if value == 0:
                return TreeNode(elements)
            # single non-loop element for csdd: contract its own line
            e = st.live[0]
            child = self.quotient(self.sub(st, [e]), [st.cols[e]])
            self.solve(child, 0)
            edge = (("contract", self.lift(st, st.cols[e])), self.witness(child))
            return TreeNode(elements, edges=[edge])
        if move == "split":
            labels, edges = set(), []
            for c in self.relevant_components(st):
                cs = self.sub(st, c)
                self.solve(cs, value)
                node = self.witness(cs)
                labels |= node.labels
                edges += node.edges
            return TreeNode(elements, frozenset(labels), edges)
        op, arg = move
        if op == "delete":
            child = self.sub(st, [x for x in st.ids if x != arg])
            label = arg if self.kind == "dd" else ("delete", arg)
        elif op == "contract":
            drop = () if self.kind == "principal" else (arg,)
            child = self.quotient(st, [st.cols[arg]], drop)
            label = arg if self.kind in ("cd", "principal") else ("contract", arg)
        else:
            g = arg if op == "direction" else arg[0]
            child = self.quotient(st, [g])
            vec = self.lift(st, g)
            label = vec if self.kind == "csd" else ("contract", vec)
        got = self.solve(child, value - 1)
        if got is None:
            raise RuntimeError("internal error: witness step does not reach the optimal value")
        return TreeNode(elements, edges=[(label, self.witness(child))])


_KIND_OF = {"dd": DELETION, "cd": CONTRACTION, "cdd": CONTRACTION_DELETION, "csd": CSTAR_GENERAL,
            "csdd": CSTAR_DELETION, "principal": CSTAR_PRINCIPAL}


def _run(M: LinearMatroid, kind: str, budget=None, method="separation", gen_bound=2, need_nonempty=True):
    if need_nonempty and len(M) == 0:
        raise EmptyMatroid("the matroid has no elements")
    search = _Search(M, kind, method, gen_bound)
    st = search.root()
    cap = len(M) + M.rank() + 1
    limit = cap if budget is None else min(cap, budget)
    v = search.solve(st, limit)
    if v is None:
        return DepthReport(kind, ExceedsBudget(budget, limit + 1), None, "exact", method)
    tree = DecompositionTree(_KIND_OF[kind], search.witness(st))
    exactness = "upper-bound" if method == "bounded" else "exact"
    return DepthReport(kind, v, tree, exactness, method)


def deletion_depth(M: LinearMatroid, budget: int | None = None) -> DepthReport:
    return _run(M, "dd", budget)


def contraction_depth(M: LinearMatroid, budget: int | None = None) -> DepthReport:
    return _run(M, "cd", budget)


def cdd_depth(M: LinearMatroid, budget: int | None = None) -> DepthReport:
    return _run(M, "cdd", budget)


def _check_method(M, method):
    if method == "auto":
        return "separation"
    if method == "directions" and not isinstance(M.field, PrimeField):
        raise BadParams("the directions method needs a prime field; use 'bounded' over the rationals")
    if method == "bounded" and isinstance(M.field, PrimeField):
        return "directions"
    if method not in ("separation", "directions", "bounded"):
        raise BadParams(f"unknown method {method!r}")
    return method


def cstar_depth(M: LinearMatroid, budget: int | None = None, method: str = "auto", gen_bound: int = 2) -> DepthReport:
    """Contraction*-depth with a witness tree labelled by generator vectors.

    ``method``: ``separation`` (exact over any field, the default),
    ``directions`` (all lines of a prime field; the literal recursion) or
    ``bounded`` (rational lines with entries at most ``gen_bound``; an upper
    bound only).
    """
    return _run(M, "csd", budget, _check_method(M, method), gen_bound)


def csdd_depth(M: LinearMatroid, budget: int | None = None, method: str = "auto", gen_bound: int = 2) -> DepthReport:
    return _run(M, "csdd", budget, _check_method(M, method), gen_bound)


def principal_depth(M: LinearMatroid, budget: int | None = None) -> DepthReport:
    """Smallest depth of a principal contraction* tree, by exhaustive search."""
    return _run(M, "principal", budget, need_nonempty=False)


# ---------------------------------------------------------------- principal tree

def _min_circuit(N: LinearMatroid):
    r = N.rank()
    for size in range(1, r + 2):
        for S in combinations(N.ground, size):
            if N.rank(S) < size:
                return list(S)
    return None


def principal_cstar_tree(M: LinearMatroid, budget: int | None = None) -> DecompositionTree:
    """Principal contraction* tree built from short circuits.

    Repeatedly contracts the elements of a smallest circuit of the current
    connected minor, one edge per element, and splits whenever the minor
    falls apart.  If the result is deeper than ``k**2`` (``k`` the largest
    circuit size) or fails verification, an exhaustive principal search is
    used instead.
    """
    k = M.largest_circuit()
    if k == 0:
        # free matroid: every non-loop element is its own component
        edges = [(e, TreeNode(frozenset([e]))) for e in M.ground if not M.is_loop(e)]
        return DecompositionTree(CSTAR_PRINCIPAL, TreeNode(frozenset(M.ground), edges=edges),
                                 ("no circuits: every element is a coloop",))

    def minor_at(K, C):
        return M.contract_subspace([M.vector(x) for x in K]).restrict(C)

    def grow(C, K, pending) -> TreeNode:
        N = minor_at(K, C)
        comps = [c for c in N.components() if N.rank(c) > 0]
        node = TreeNode(frozenset(C))
        if not comps:
            return node
        if len(comps) > 1:
            for c in comps:
                node.edges += grow(c, K, []).edges
            return node
        C1 = comps[0]
        pend = [e for e in pending if e in C1]
        if not pend:
            circ = _min_circuit(N.restrict(C1))
            pend = sorted(circ) if circ else [C1[0]]
        e = pend[0]
        node.edges.append((e, grow(C1, K + [e], pend[1:])))
        return node

    tree = DecompositionTree(CSTAR_PRINCIPAL, grow(list(M.ground), [], []))
    if tree.depth() <= k * k and verify_cstar_tree(M, tree):
        return tree
    rep = principal_depth(M, budget)
    if rep.witness is None:
        raise InvalidTree("greedy principal tree too deep and exhaustive search exceeded the budget")
    rep.witness.notes = ("greedy tree exceeded the k^2 bound; exhaustive principal search used",)
    return rep.witness


# ---------------------------------------------------------------- verifiers

def _label_elements(T: DecompositionTree) -> list:
    out = []
    for node, par, lab in T.nodes():
        out.extend(node.labels)
        if par is not None:
            out.append(lab[1] if isinstance(lab, tuple) else lab)
    return out


def verify_deletion_tree(M: LinearMatroid, T: DecompositionTree) -> bool:
    """Replay a deletion, contraction or contraction-deletion tree."""
    if T.kind not in ELEMENT_KINDS:
        raise InvalidTree(f"not an element-removal tree: {T.kind}")
    labels = _label_elements(T)
    if sorted(labels) != sorted(M.ground):
        raise LabelMismatch("tree labels do not cover the ground set exactly once")

    def check(node: TreeNode, contracted: list) -> bool:
        N = M.contract(contracted).restrict(node.elements) if contracted else M.restrict(node.elements)
        comps = N.components()
        singles = {c[0] for c in comps if len(c) == 1}
        if set(node.labels) != singles:
            return False
        big = [frozenset(c) for c in comps if len(c) > 1]
        if len(big) != len(node.edges):
            return False
        for lab, child in node.edges:
            op, e = lab if isinstance(lab, tuple) else (
                "delete" if T.kind == DELETION else "contract", lab)
            owner = [c for c in big if e in c]
            if len(owner) != 1 or child.elements != owner[0] - {e}:
                return False
            big.remove(owner[0])
            if op == "contract":
                if not check(child, contracted + [e]):
                    return False
            elif op == "delete":
                if not check(child, contracted):
                    return False
            else:
                return False
        return True

    if frozenset(T.root.elements) != frozenset(M.ground):
        return False
    return check(T.root, [])


def verify_cstar_tree(M: LinearMatroid, T: DecompositionTree) -> bool:
    """Replay a contraction* tree (principal, general or with deletions)."""
    if T.kind not in CSTAR_KINDS:
        raise InvalidTree(f"not a contraction* tree: {T.kind}")
    F = M.field
    if T.kind == CSTAR_PRINCIPAL:
        labs = T.edge_labels()
        if any(e not in M for e in labs):
            raise LabelMismatch("edge label is not an element of the matroid")
        if len(labs) != M.rank() or M.rank(labs) != len(labs):
            return False
    if frozenset(T.root.elements) != frozenset(M.ground):
        return False

    def gen_of(lab):
        if T.kind == CSTAR_PRINCIPAL:
            return ("contract", M.vector(lab))
        if T.kind == CSTAR_GENERAL:
            return ("contract", tuple(F.coerce(x) for x in lab))
        op, arg = lab
        if op == "delete":
            return ("delete", arg)
        return ("contract", tuple(F.coerce(x) for x in arg))

    def check(node: TreeNode, K: list) -> bool:
        if any(e not in M for e in node.elements):
            return False
        N = M.contract_subspace(K).restrict(node.elements) if K else M.restrict(node.elements)
        comps = [frozenset(c) for c in N.components() if N.rank(c) > 0]
        if len(comps) != len(node.edges):
            return False
        kr = rank_of(K, F)
        for lab, child in node.edges:
            op, arg = gen_of(lab)
            if op == "delete":
                owner = [c for c in comps if arg in c]
                if len(owner) != 1 or child.elements != owner[0] - {arg}:
                    return False
                comps.remove(owner[0])
                if not check(child, K):
                    return False
                continue
            owner = [c for c in comps if c == child.elements]
            if len(owner) != 1:
                return False
            comps.remove(owner[0])
            g = list(arg)
            if len(g) != M.dim or rank_of(K + [g], F) != kr + 1:
                return False
            span_c = [M.vector(e) for e in owner[0]]
            if rank_of(K + span_c + [g], F) != rank_of(K + span_c, F):
                return False
            if T.kind == CSTAR_PRINCIPAL and lab not in owner[0]:
                return False
            if not check(child, K + [g]):
                return False
        return True

    return check(T.root, [])


# ---------------------------------------------------------------- oracle

def _rooted_trees(r: int):
    """Parent arrays of rooted trees on ``r + 1`` vertices (vertex 0 is the root)."""
    if r == 0:
        yield ()
        return
    for parents in product(*[range(i) for i in range(1, r + 1)]):
        yield parents


def cstar_depth_by_trees(M: LinearMatroid, max_rank: int = 3, max_ground: int = 6) -> int:
    """Contraction*-depth from its rooted-tree form, by exhaustive enumeration.

    Tries every rooted tree with exactly ``r(M)`` edges and every map from the
    elements to its leaves, checking that each subset X sees at least r(X)
    edges on the root paths of its images.  Only for tiny matroids.
    """
    r = M.rank()
    n = len(M)
    if r > max_rank or n > max_ground:
        raise BadParams("matroid too large for tree enumeration")
    ground = list(M.ground)
    ranks = {}
    for mask in range(1 << n):
        ranks[mask] = M.rank([ground[i] for i in range(n) if mask >> i & 1])
    best = None
    for parents in _rooted_trees(r):
        par = (None,) + tuple(parents)
        depth_v = [0] * (r + 1)
        for v in range(1, r + 1):
            depth_v[v] = depth_v[par[v]] + 1
        d = max(depth_v)
        if best is not None and d >= best:
            continue
        has_child = set(p for p in parents)
        leaves = [v for v in range(r + 1) if v not in has_child]
        path_edges = []
        for v in range(r + 1):
            s, u = 0, v
            while u != 0:
                s |= 1 << u
                u = par[u]
            path_edges.append(s)
        for f in product(leaves, repeat=n):
            ok = True
            for mask in range(1, 1 << n):
                cover = 0
                for i in range(n):
                    if mask >> i & 1:
                        cover |= path_edges[f[i]]
                if bin(cover).count("1") < ranks[mask]:
                    ok = False
                    break
            if ok:
                best = d
                break
    return best
