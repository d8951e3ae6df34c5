"""Primal, dual and incidence graphs of a matrix and exact tree-depth."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable

from .errors import ParseError, VertexMismatch
from .linalg import RatMatrix, as_matrix


class Graph:
    """Simple loopless undirected graph over arbitrary hashable labels."""

    def __init__(self, vertices: Iterable[Hashable] = (), edges: Iterable[tuple] = ()):
        self.vertices: list = list(dict.fromkeys(vertices))
        vset = set(self.vertices)
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u!r}")
            if u not in vset or v not in vset:
                raise VertexMismatch(f"edge ({u!r}, {v!r}) uses an unknown vertex")
            es.add(frozenset((u, v)))
        self.edges: frozenset = frozenset(es)

    def __len__(self):
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_list(self) -> list[tuple]:
        pos = {v: i for i, v in enumerate(self.vertices)}
        out = []
        for e in self.edges:
            u, v = sorted(e, key=pos.__getitem__)
            out.append((u, v))
        return sorted(out, key=lambda uv: (pos[uv[0]], pos[uv[1]]))

    def neighbors(self, v) -> set:
        return {w for e in self.edges if v in e for w in e if w != v}

    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            u, v = tuple(e)
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def has_edge(self, u, v) -> bool:
        return frozenset((u, v)) in self.edges

    def subgraph(self, keep: Iterable) -> "Graph":
        keep = set(keep)
        return Graph([v for v in self.vertices if v in keep],
                     [tuple(e) for e in self.edges if e <= keep])

    def components(self) -> list[list]:
        adj = self.adjacency()
        pos = {v: i for i, v in enumerate(self.vertices)}
        seen, comps = set(), []
        for s in self.vertices:
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp, key=pos.__getitem__))
        return comps

    def __eq__(self, other):
        return isinstance(other, Graph) and set(self.vertices) == set(other.vertices) and self.edges == other.edges

    def __repr__(self):
        return f"Graph(|V|={len(self.vertices)}, |E|={len(self.edges)})"


@dataclass
class RootedForest:
    """Parent map over graph vertices; roots map to ``None``."""

    parent: dict

    def roots(self) -> list:
        return [v for v, p in self.parent.items() if p is None]

    def ancestors(self, v) -> list:
        out = []
        p = self.parent[v]
        while p is not None:
            out.append(p)
            p = self.parent[p]
        return out

    def depth_of(self, v) -> int:
        return 1 + len(self.ancestors(v))

    @property
    def height(self) -> int:
        return max((self.depth_of(v) for v in self.parent), default=0)

    def is_acyclic(self) -> bool:
        for v in self.parent:
            seen = {v}
            p = self.parent[v]
            while p is not None:
                if p in seen or p not in self.parent:
                    return False
                seen.add(p)
                p = self.parent[p]
        return True


@dataclass(frozen=True)
class ExceedsBudget:
    """Returned by :func:`tree_depth` when the value is larger than the budget."""

    budget: int
    lower_bound: int = field(default=0)

    def __bool__(self):
        return False


# ---------------------------------------------------------------- extraction

def primal_graph(A) -> Graph:
    A = as_matrix(A)
    edges = set()
    for r in A.rows:
        supp = [j for j, x in enumerate(r) if x != 0]
        edges.update((a, b) for i, a in enumerate(supp) for b in supp[i + 1:])
    return Graph(range(A.ncols), edges)


def dual_graph(A) -> Graph:
    return primal_graph(as_matrix(A).T)


def incidence_graph(A) -> Graph:
    """Bipartite row/column graph with vertices ``('r', i)`` and ``('c', j)``."""
    A = as_matrix(A)
    verts = [("r", i) for i in range(A.nrows)] + [("c", j) for j in range(A.ncols)]
    edges = [(("r", i), ("c", j)) for i, r in enumerate(A.rows) for j, x in enumerate(r) if x != 0]
    return Graph(verts, edges)


# ---------------------------------------------------------------- tree-depth

def _components_mask(mask: int, nbr: list[int]) -> list[int]:
    comps = []
    rest = mask
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = nbr[b.bit_length() - 1] & mask & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def _degeneracy(mask: int, nbr: list[int]) -> int:
    best = 0
    while mask:
        v, dv = None, None
        m = mask
        while m:
            b = m & -m
            m ^= b
            d = bin(nbr[b.bit_length() - 1] & mask).count("1")
            if dv is None or d < dv:
                v, dv = b, d
        best = max(best, dv)
        mask ^= v
    return best


def _td_solver(n: int, nbr: list[int]):
    exact: dict[int, tuple[int, int]] = {}
    lower: dict[int, int] = {}

    def bound(comp: int) -> int:
        size = bin(comp).count("1")
        if size <= 2:
            return size
        return max(2, _degeneracy(comp, nbr) + 1)

    def solve(comp: int, limit: int):
        """Exact td of a connected vertex set if it is <= limit, else None."""
        if comp in exact:
            v = exact[comp][0]
            return v if v <= limit else None
        if lower.get(comp, 0) > limit:
            return None
        size = bin(comp).count("1")
        if size == 1:
            exact[comp] = (1, comp)
            return 1 if limit >= 1 else None
        lb = bound(comp)
        if lb > limit:
            lower[comp] = max(lower.get(comp, 0), lb)
            return None
        best, best_v = None, None
        cur = limit
        m = comp
        # try high-degree vertices first: they tend to split the graph
        order = []
        while m:
            b = m & -m
            m ^= b
            order.append((-bin(nbr[b.bit_length() - 1] & comp).count("1"), b.bit_length() - 1, b))
        order.sort()
        for _, _, b in order:
            rest = comp & ~b
            worst = 0
            for c in _components_mask(rest, nbr):
                r = solve(c, cur - 1)
                if r is None:
                    worst = None
                    break
                worst = max(worst, r)
            if worst is None:
                continue
            best, best_v = 1 + worst, b
            cur = best - 1
            if best <= lb:
                break
        if best is None:
            lower[comp] = max(lower.get(comp, 0), limit + 1)
            return None
        exact[comp] = (best, best_v)
        return best

    return solve, exact


def tree_depth(G: Graph, budget: int | None = None):
    """Exact tree-depth with a witness forest.

    Returns ``(value, forest)``; when ``budget`` is given and the tree-depth
    exceeds it, returns ``(ExceedsBudget, None)`` instead.
    """
    verts = list(G.vertices)
    n = len(verts)
    if n == 0:
        return 0, RootedForest({})
    idx = {v: i for i, v in enumerate(verts)}
    nbr = [0] * n
    for e in G.edges:
        u, v = tuple(e)
        nbr[idx[u]] |= 1 << idx[v]
        nbr[idx[v]] |= 1 << idx[u]
    solve, exact = _td_solver(n, nbr)
    limit = n if budget is None else min(n, budget)
    full = (1 << n) - 1
    comps = _components_mask(full, nbr)
    value = 0
    for c in comps:
        r = solve(c, limit)
        if r is None:
            return ExceedsBudget(budget, limit + 1), None
        value = max(value, r)

    parent: dict = {}

    def build(comp: int, par):
        _, b = exact[comp]
        v = verts[b.bit_length() - 1]
        parent[v] = par
        rest = comp & ~b
        for c in _components_mask(rest, nbr):
            solve(c, exact[comp][0] - 1)
            build(c, v)

    for c in comps:
        build(c, None)
    return value, RootedForest(parent)


def td(G: Graph) -> int:
    return tree_depth(G)[0]


def td_primal(A) -> int:
    return td(primal_graph(A))


def td_dual(A) -> int:
    return td(dual_graph(A))


def td_incidence(A) -> int:
    return td(incidence_graph(A))


def forest_certifies(G: Graph, F: RootedForest) -> bool:
    if set(F.parent) != set(G.vertices):
        raise VertexMismatch("forest and graph have different vertex sets")
    if not F.is_acyclic():
        return False
    anc = {v: set(F.ancestors(v)) for v in F.parent}
    return all(v in anc[u] or u in anc[v] for u, v in (tuple(e) for e in G.edges))


def closure_edges(F: RootedForest) -> set:
    return {frozenset((v, a)) for v in F.parent for a in F.ancestors(v)}


# ---------------------------------------------------------------- text format

def format_gr(G: Graph) -> str:
    pos = {v: i for i, v in enumerate(G.vertices)}
    lines = [f"{len(G.vertices)} {G.num_edges}"]
    lines += [f"{pos[u]} {pos[v]}" for u, v in G.edge_list()]
    return "\n".join(lines) + "\n"


def parse_gr(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise ParseError("header must be 'n m'")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        pairs = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise ParseError("non-integer token in graph file") from exc
    if len(pairs) != m:
        raise ParseError(f"expected {m} edges, found {len(pairs)}")
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) out of range")
    return Graph(range(n), pairs)
