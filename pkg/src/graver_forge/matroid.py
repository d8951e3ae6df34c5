"""Linear matroids over the rationals or a prime field.

Elements are identified by integer ids that stay stable under deletion,
contraction and quotients, so results on a minor can be read back against
the original ground set.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .errors import NotIntegral, OverlapError, ParseError, TooLarge, UnknownElement, BadParams
from .fields import QQ, FieldSpec, PrimeField, parse_field, rank_of, rref
from .linalg import RatMatrix, as_matrix, format_rmx, parse_rmx


class LinearMatroid:
    """Matroid represented by column vectors over ``field``.

    ``vectors`` maps element id to a tuple of field elements of length ``dim``.
    """

    __slots__ = ("field", "dim", "_vecs", "ground")

    def __init__(self, field: FieldSpec, dim: int, vectors: dict):
        self.field = field
        self.dim = dim
        self._vecs = dict(vectors)
        self.ground: tuple[int, ...] = tuple(sorted(self._vecs))
        for v in self._vecs.values():
            if len(v) != dim:
                raise ValueError("vector length differs from ambient dimension")

    # ------------------------------------------------------------ basics

    def __len__(self):
        return len(self.ground)

    def __iter__(self):
        return iter(self.ground)

    def __contains__(self, e):
        return e in self._vecs

    def vector(self, e) -> tuple:
        try:
            return self._vecs[e]
        except KeyError:
            raise UnknownElement(e) from None

    def vectors(self, S: Iterable[int] | None = None) -> list[tuple]:
        S = self.ground if S is None else S
        return [self.vector(e) for e in S]

    def _check(self, S) -> list[int]:
        S = sorted(set(S))
        for e in S:
            if e not in self._vecs:
                raise UnknownElement(e)
        return S

    def rank(self, S: Iterable[int] | None = None) -> int:
        S = self.ground if S is None else self._check(S)
        return rank_of([self._vecs[e] for e in S], self.field)

    def is_loop(self, e) -> bool:
        return all(x == 0 for x in self.vector(e))

    def is_independent(self, S) -> bool:
        S = self._check(S)
        return self.rank(S) == len(S)

    def closure_contains(self, S, e) -> bool:
        return self.rank(list(S) + [e]) == self.rank(S)

    def to_matrix(self) -> RatMatrix:
        """Representation matrix with columns in ground order (rationals only)."""
        if isinstance(self.field, PrimeField):
            cols = [[int(x) for x in self._vecs[e]] for e in self.ground]
        else:
            cols = [list(self._vecs[e]) for e in self.ground]
        return RatMatrix.from_columns(cols, self.dim) if cols else RatMatrix.zeros(self.dim, 0)

    def __repr__(self):
        return f"LinearMatroid({self.field!r}, |E|={len(self)}, rank={self.rank()})"

    # ------------------------------------------------------------ structure

    def basis(self, S: Iterable[int] | None = None) -> list[int]:
        """Greedy (lowest id first) basis of ``S``."""
        S = self.ground if S is None else self._check(S)
        out, vecs = [], []
        for e in S:
            cand = vecs + [self._vecs[e]]
            if rank_of(cand, self.field) > len(vecs):
                out.append(e)
                vecs = cand
        return out

    def components(self) -> list[list[int]]:
        """Components as sorted id lists, ordered by smallest id.

        Uses fundamental circuits with respect to the leftmost basis: two
        elements share a component iff they are linked by such circuits.
        """
        ids = list(self.ground)
        if not ids:
            return []
        cols = [self._vecs[e] for e in ids]
        rows = [[c[i] for c in cols] for i in range(self.dim)]
        R, piv = rref(rows, self.field, len(ids))
        parent = list(range(len(ids)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        pset = set(piv)
        for j in range(len(ids)):
            if j in pset:
                continue
            for i, p in enumerate(piv):
                if R[i][j] != 0:
                    parent[find(p)] = find(j)
        groups: dict[int, list[int]] = {}
        for j in range(len(ids)):
            groups.setdefault(find(j), []).append(ids[j])
        return sorted(groups.values(), key=lambda g: g[0])

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def circuits(self) -> list[frozenset]:
        """All circuits, by increasing size, pruning supersets of found ones."""
        found: list[frozenset] = []
        r = self.rank()
        for size in range(1, r + 2):
            for S in combinations(self.ground, size):
                fs = frozenset(S)
                if any(c <= fs for c in found):
                    continue
                if self.rank(S) < size:
                    found.append(fs)
        return found

    def largest_circuit(self) -> int:
        return max((len(c) for c in self.circuits()), default=0)

    # ------------------------------------------------------------ minors

    def restrict(self, S: Iterable[int]) -> "LinearMatroid":
        S = self._check(S)
        return LinearMatroid(self.field, self.dim, {e: self._vecs[e] for e in S})

    def delete(self, S: Iterable[int]) -> "LinearMatroid":
        S = set(self._check(S))
        return LinearMatroid(self.field, self.dim, {e: v for e, v in self._vecs.items() if e not in S})

    def contract_subspace(self, generators: Sequence[Sequence]) -> "LinearMatroid":
        """Re-represent every element in the quotient by ``span(generators)``.

        The projection drops the pivot coordinates of the reduced echelon
        form of the generators, so the complement is the leftmost one.
        """
        gens = [tuple(self.field.coerce(x) for x in g) for g in generators]
        for g in gens:
            if len(g) != self.dim:
                raise ValueError("generator length differs from ambient dimension")
        gens = [g for g in gens if any(x != 0 for x in g)]
        if not gens:
            return self
        R, piv = rref(gens, self.field, self.dim)
        keep = [c for c in range(self.dim) if c not in set(piv)]
        new = {}
        for e, v in self._vecs.items():
            w = list(v)
            for row, p in zip(R, piv):
                f = w[p]
                if f != 0:
                    w = [self.field.norm(a - f * b) for a, b in zip(w, row)]
            new[e] = tuple(w[c] for c in keep)
        return LinearMatroid(self.field, len(keep), new)

    def contract(self, S: Iterable[int]) -> "LinearMatroid":
        S = self._check(S)
        return self.contract_subspace([self._vecs[e] for e in S]).delete(S)

    def minor(self, delete: Iterable[int] = (), contract: Iterable[int] = ()) -> "LinearMatroid":
        delete, contract = set(delete), set(contract)
        if delete & contract:
            raise OverlapError(f"elements {sorted(delete & contract)} both deleted and contracted")
        self._check(delete | contract)
        return self.contract(contract).delete(delete)

    def dual(self) -> "LinearMatroid":
        """Representation of the dual matroid from a kernel basis."""
        ids = list(self.ground)
        n = len(ids)
        if n == 0:
            return LinearMatroid(self.field, 0, {})
        rows = [[self._vecs[e][i] for e in ids] for i in range(self.dim)]
        R, piv = rref(rows, self.field, n)
        pset = set(piv)
        free = [j for j in range(n) if j not in pset]
        drows = []
        for f in free:
            row = [self.field.zero] * n
            row[f] = self.field.one
            for i, p in enumerate(piv):
                row[p] = self.field.norm(-R[i][f])
            drows.append(row)
        vecs = {e: tuple(r[j] for r in drows) for j, e in enumerate(ids)}
        return LinearMatroid(self.field, len(free), vecs)

    def clone(self, k: int) -> "LinearMatroid":
        """The matroid kM: each element replaced by ``k`` parallel copies.

        Copy ``j`` of the element at ground position ``pos`` gets id ``k*pos + j``.
        """
        if k < 1:
            raise BadParams("k must be at least 1")
        vecs = {}
        for pos, e in enumerate(self.ground):
            for j in range(k):
                vecs[k * pos + j] = self._vecs[e]
        return LinearMatroid(self.field, self.dim, vecs)

    def relabel(self, mapping: dict) -> "LinearMatroid":
        return LinearMatroid(self.field, self.dim, {mapping[e]: v for e, v in self._vecs.items()})

    # ------------------------------------------------------------ io

    def to_rmx(self) -> str:
        return format_rmx(self.to_matrix()) + self.field.tag() + "\n"


# ---------------------------------------------------------------- constructors

def matroid_of(A, field: FieldSpec = QQ) -> LinearMatroid:
    A = as_matrix(A)
    if isinstance(field, PrimeField) and not A.is_integral():
        raise NotIntegral("a prime-field matroid needs an integral matrix; scale it first")
    vecs = {j: tuple(field.coerce(x) for x in A.column(j)) for j in range(A.ncols)}
    return LinearMatroid(field, A.nrows, vecs)


def rank(M: LinearMatroid, S: Iterable[int] | None = None) -> int:
    return M.rank(S)


def matroid_circuits(M: LinearMatroid) -> list[frozenset]:
    return M.circuits()


def components(M: LinearMatroid) -> list[list[int]]:
    return M.components()


def dualize(M: LinearMatroid) -> LinearMatroid:
    return M.dual()


def minor(M: LinearMatroid, delete=(), contract=()) -> LinearMatroid:
    return M.minor(delete, contract)


def contract_subspace(M: LinearMatroid, generators) -> LinearMatroid:
    return M.contract_subspace(generators)


def clone_k(M: LinearMatroid, k: int) -> LinearMatroid:
    return M.clone(k)


def matroid_equal(M1: LinearMatroid, M2: LinearMatroid, max_ground: int = 16) -> bool:
    """Same independent sets, matching elements by ground-set position.

    Two matroids agree iff they have the same rank and the same bases, so only
    subsets of size ``rank`` are compared.
    """
    if len(M1) != len(M2):
        return False
    if len(M1) > max_ground:
        raise TooLarge(f"ground set of size {len(M1)} exceeds the limit {max_ground}")
    r = M1.rank()
    if M2.rank() != r:
        return False
    g1, g2 = M1.ground, M2.ground
    for pos in combinations(range(len(g1)), r):
        if M1.is_independent([g1[i] for i in pos]) != M2.is_independent([g2[i] for i in pos]):
            return False
    return True


def parse_matroid(text: str) -> LinearMatroid:
    """Parse a ``.rmx`` payload with an optional ``field q`` / ``field gf p`` line."""
    field = QQ
    for ln in text.splitlines():
        s = ln.strip()
        if s.startswith("field"):
            tag = s[len("field"):].strip()
            try:
                field = parse_field(tag.replace(" ", ":") if tag.startswith("gf") else tag)
            except BadParams as exc:
                raise ParseError(str(exc)) from exc
    return matroid_of(parse_rmx(text), field)
