"""Graph-derived matroids, reduction gadgets and the G_n lower-bound family."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BadParams, NotBipartition
from .fields import QQ, FieldSpec, rank_of, rref
from .graphs import Graph
from .matroid import LinearMatroid


@dataclass
class LabeledGraphMatroid:
    graph: Graph
    labels: list  # element id -> ("vertex", w) or ("edge", u, v)
    matroid: LinearMatroid

    def element_of(self, label) -> int:
        return self.labels.index(label)


def matroid_from_graph(G: Graph, field: FieldSpec = QQ) -> LabeledGraphMatroid:
    """Vertices as unit vectors ``e_w`` first, then edges as ``e_u - e_v``."""
    verts = list(G.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    labels, vecs = [], {}

    def unit(i, c=1):
        out = [field.zero] * n
        out[i] = field.coerce(c)
        return out

    for w in verts:
        vecs[len(labels)] = tuple(unit(pos[w]))
        labels.append(("vertex", w))
    for u, v in G.edge_list():
        vec = unit(pos[u])
        vec[pos[v]] = field.coerce(-1)
        vecs[len(labels)] = tuple(vec)
        labels.append(("edge", u, v))
    return LabeledGraphMatroid(G, labels, LinearMatroid(field, n, vecs))


def _check_bipartition(G: Graph, X, Y):
    X, Y = list(X), list(Y)
    if set(X) & set(Y) or set(X) | set(Y) != set(G.vertices):
        raise NotBipartition("X and Y must partition the vertex set")
    sx, sy = set(X), set(Y)
    for e in G.edges:
        if e <= sx or e <= sy:
            raise NotBipartition(f"edge {tuple(e)} lies inside one part")
    return X, Y


def bipartite_completion(G: Graph, X, Y) -> Graph:
    """Add every edge inside X and inside Y."""
    X, Y = _check_bipartition(G, X, Y)
    extra = list(combinations(X, 2)) + list(combinations(Y, 2))
    return Graph(G.vertices, [tuple(e) for e in G.edges] + extra)


def balanced_independent_set(G: Graph, X, Y, k: int) -> bool:
    """Is there an independent set with ``k`` vertices in X and ``k`` in Y?"""
    X, Y = _check_bipartition(G, X, Y)
    if k <= 0:
        return True
    for SX in combinations(X, k):
        for SY in combinations(Y, k):
            if not any(G.has_edge(a, b) for a in SX for b in SY):
                return True
    return False


# ---------------------------------------------------------------- quotient graph

def _in_span(field, basis_rows, v) -> bool:
    return rank_of(basis_rows + [v], field) == len(basis_rows)


def quotient_graph(G: Graph, generators, field: FieldSpec = QQ) -> Graph:
    """The graph G/A for ``A = span(generators)`` in ``F^V`` (coordinates in vertex order).

    W holds the vertices w with ``e_w`` in A; F holds the edges outside W whose
    endpoint plane meets A.  W is deleted and a spanning forest of F,
    chosen greedily in edge order, is contracted; each merged vertex is
    named after its first vertex.
    """
    verts = list(G.vertices)
    n = len(verts)
    pos = {v: i for i, v in enumerate(verts)}
    gens = [tuple(field.coerce(x) for x in g) for g in generators]
    gens = [g for g in gens if any(x != 0 for x in g)]
    B = rref(gens, field, n)[0] if gens else []

    def unit(i):
        return tuple(field.one if j == i else field.zero for j in range(n))

    W = {w for w in verts if B and _in_span(field, B, unit(pos[w]))}
    Fedges = []
    for u, v in G.edge_list():
        if u in W or v in W or not B:
            continue
        # A meets span(e_u, e_v) iff rank(B + e_u + e_v) < rank(B) + 2
        if rank_of(B + [unit(pos[u]), unit(pos[v])], field) < len(B) + 2:
            Fedges.append((u, v))
    rep = {v: v for v in verts if v not in W}

    def find(x):
        while rep[x] != x:
            rep[x] = rep[rep[x]]
            x = rep[x]
        return x

    for u, v in Fedges:
        a, b = find(u), find(v)
        if a != b:
            if pos[a] < pos[b]:
                rep[b] = a
            else:
                rep[a] = b
    new_verts = [v for v in verts if v not in W and find(v) == v]
    new_edges = set()
    for u, v in G.edge_list():
        if u in W or v in W:
            continue
        a, b = find(u), find(v)
        if a != b:
            new_edges.add((a, b) if pos[a] < pos[b] else (b, a))
    return Graph(new_verts, new_edges)


def nontrivial_components(M: LinearMatroid) -> int:
    """Number of components of positive rank (loops excluded)."""
    return sum(1 for c in M.components() if M.rank(c) > 0)


# ---------------------------------------------------------------- hardness gadgets

HARDNESS_KINDS = ("cstar", "cd2M", "cdd-clone", "csdd-clone", "dd-dual")


def hardness_instance(G: Graph, X, Y, k: int, field: FieldSpec = QQ, which: str = "cstar"):
    """Matroid and threshold of a reduction from balanced independent sets.

    ``cstar``: (M_F(G'), |X|+|Y|-k) for contraction*-depth;
    ``cd2M``: (2 M_F(G'), |X|+|Y|-k+1) for contraction-depth;
    ``cdd-clone``: ((|G'|+1) M_F(G'), |X|+|Y|-k+1) for contraction-deletion-depth;
    ``csdd-clone``: ((|G'|+1) M_F(G'), |X|+|Y|-k) for contraction*-deletion-depth;
    ``dd-dual``: the dual of 2 M_F(G') with |X|+|Y|-k+1, for deletion-depth.
    """
    if which not in HARDNESS_KINDS:
        raise BadParams(f"unknown hardness instance {which!r}")
    Gp = bipartite_completion(G, X, Y)
    M = matroid_from_graph(Gp, field).matroid
    s = len(list(X)) + len(list(Y)) - k
    if which == "cstar":
        return M, s
    if which == "cd2M":
        return M.clone(2), s + 1
    if which == "cdd-clone":
        return M.clone(len(Gp) + 1), s + 1
    if which == "csdd-clone":
        return M.clone(len(Gp) + 1), s
    return M.clone(2).dual(), s + 1


def bipartite_graphs(nx: int = 2, ny: int = 2):
    """Every bipartite graph on parts ``x0..`` and ``y0..`` (all edge subsets)."""
    X = [f"x{i}" for i in range(nx)]
    Y = [f"y{j}" for j in range(ny)]
    cross = [(a, b) for a in X for b in Y]
    for mask in range(1 << len(cross)):
        edges = [cross[i] for i in range(len(cross)) if mask >> i & 1]
        yield Graph(X + Y, edges), X, Y


# ---------------------------------------------------------------- G_n family

@dataclass
class GnInstance:
    n: int
    vertices: list
    edges: list  # multigraph edge list of (u, v); index = element id
    r: object
    b: object

    def matroid(self, field: FieldSpec = QQ) -> LinearMatroid:
        """Cycle matroid: edge uv is ``e_u - e_v`` in ``F^V``."""
        pos = {v: i for i, v in enumerate(self.vertices)}
        vecs = {}
        for i, (u, v) in enumerate(self.edges):
            vec = [field.zero] * len(self.vertices)
            vec[pos[u]] = field.one
            vec[pos[v]] = field.coerce(-1)
            vecs[i] = tuple(vec)
        return LinearMatroid(field, len(self.vertices), vecs)

    def simple_paths(self, s, t):
        """Edge counts of all simple paths from ``s`` to ``t``."""
        adj = self._adj()
        out = []

        def dfs(v, seen, length):
            if v == t:
                out.append(length)
                return
            for w, _ in adj[v]:
                if w not in seen:
                    seen.add(w)
                    dfs(w, seen, length + 1)
                    seen.remove(w)

        dfs(s, {s}, 0)
        return out

    def cycles(self) -> list[frozenset]:
        """Every cycle as a set of edge ids (parallel edges give 2-cycles)."""
        adj = self._adj()
        found = []
        for e, (u, v) in enumerate(self.edges):
            # cycles whose smallest edge is e: paths v -> u over larger edges
            def dfs(x, seen, used):
                if x == u:
                    found.append(frozenset(used + [e]))
                    return
                for w, f in adj[x]:
                    if f > e and w not in seen:
                        seen.add(w)
                        dfs(w, seen, used + [f])
                        seen.remove(w)

            dfs(v, {v}, [])
        return found

    def _adj(self):
        adj = {v: [] for v in self.vertices}
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        return adj


def gn_family(n: int) -> GnInstance:
    """G_1 is two parallel edges; G_n is a 2n-cycle with n copies of G_{n-1} hung off r_n and b_n."""
    if n < 1:
        raise BadParams("n must be at least 1")

    def build(n, prefix):
        if n == 1:
            r, b = prefix + "r", prefix + "b"
            return [r, b], [(r, b), (r, b)], r, b
        cyc = [f"{prefix}c{i}" for i in range(2 * n)]
        edges = [(cyc[i], cyc[(i + 1) % (2 * n)]) for i in range(2 * n)]
        verts = list(cyc)
        r, b = cyc[0], cyc[n]
        for j in range(n):
            v2, e2, r2, b2 = build(n - 1, f"{prefix}{j}.")
            verts += v2
            edges += e2
            edges += [(r2, r), (b2, b)]
        return verts, edges, r, b

    verts, edges, r, b = build(n, "")
    return GnInstance(n, verts, edges, r, b)
