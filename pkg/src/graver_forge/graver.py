"""Circuits and Graver bases of rational matrices.

The Graver basis is computed by a completion procedure started from a
lattice basis of the integer kernel, and independently re-derived by
enumerating every integer kernel point in a box around the origin.  Both
answers must agree before a result is marked certified.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BoxTooSmall, BudgetExceeded, DimensionMismatch, GraverMismatch
from .fields import QQ, rref
from .linalg import RatMatrix, as_matrix, primitive
from .matroid import matroid_of


def conformal_leq(x, y) -> bool:
    """``x ⊑ y``: same orthant and ``|x_i| <= |y_i|`` in every coordinate."""
    if len(x) != len(y):
        raise DimensionMismatch(f"vectors of length {len(x)} and {len(y)}")
    return all(a * b >= 0 and abs(a) <= abs(b) for a, b in zip(x, y))


def canonical(v) -> tuple[int, ...]:
    """Representative of ``{v, -v}`` with the first non-zero entry positive."""
    v = tuple(int(x) for x in v)
    lead = next((x for x in v if x != 0), 0)
    return tuple(-x for x in v) if lead < 0 else v


def _norms(vectors):
    if not vectors:
        return None, None
    return max(sum(abs(x) for x in v) for v in vectors), max(max(abs(x) for x in v) for v in vectors)


@dataclass
class CircuitSet:
    vectors: list
    c1: int | None
    c_inf: int | None
    kappa_dot: int | None

    def supports(self) -> set:
        return {frozenset(i for i, x in enumerate(v) if x) for v in self.vectors}

    def to_dict(self) -> dict:
        return {"vectors": [list(v) for v in self.vectors], "c1": self.c1, "c_inf": self.c_inf,
                "kappa_dot": self.kappa_dot}


@dataclass
class GraverSet:
    vectors: list
    g1: int | None
    g_inf: int | None
    certified: bool = False
    box: int | None = None
    notes: list = field(default_factory=list)

    def signed(self) -> set:
        return set(self.vectors) | {tuple(-x for x in v) for v in self.vectors}

    def to_dict(self) -> dict:
        return {"vectors": [list(v) for v in self.vectors], "g1": self.g1, "g_inf": self.g_inf,
                "certified": self.certified, "box": self.box, "notes": list(self.notes)}


# ---------------------------------------------------------------- circuits

def matrix_circuits(A) -> CircuitSet:
    """One coprime kernel vector per circuit of the column matroid."""
    A = as_matrix(A)
    M = matroid_of(A)
    out = []
    for C in M.circuits():
        cols = sorted(C)
        sub = A.select_columns(cols)
        R, piv = rref(sub.rows, QQ, len(cols))
        free = [j for j in range(len(cols)) if j not in piv]
        # a circuit has a one-dimensional kernel on its support
        f = free[0]
        v = [Fraction(0)] * len(cols)
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            v[p] = -R[i][f]
        w = [0] * A.ncols
        for j, x in zip(cols, primitive(v)):
            w[j] = x
        out.append(canonical(w))
    out.sort()
    c1, cinf = _norms(out)
    kd = math.lcm(*(abs(x) for v in out for x in v if x)) if out else None
    return CircuitSet(out, c1, cinf, kd)


# ---------------------------------------------------------------- lattice basis

def integer_rows(A: RatMatrix) -> list[list[int]]:
    """Scale each row to integers (same kernel)."""
    out = []
    for r in A.rows:
        den = math.lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * den) for x in r])
    return out


def lattice_kernel_basis(A) -> list[tuple[int, ...]]:
    """Basis of the integer kernel lattice ``{x in Z^n : A x = 0}``.

    Unimodular row operations on ``[A^T | I]`` bring ``A^T`` to echelon form;
    the identity part of the rows whose ``A^T`` part vanished is the basis.
    """
    A = as_matrix(A)
    Z = integer_rows(A)
    m, n = A.nrows, A.ncols
    rows = [[Z[i][j] for i in range(m)] + [1 if k == j else 0 for k in range(n)] for j in range(n)]
    r = 0
    for c in range(m):
        while True:
            nz = [i for i in range(r, n) if rows[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(rows[i][c]))
            rows[r], rows[piv] = rows[piv], rows[r]
            done = True
            for i in range(r + 1, n):
                if rows[i][c] != 0:
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
                    if rows[i][c] != 0:
                        done = False
            if done:
                r += 1
                break
        if r == n:
            break
    basis = [tuple(row[m:]) for row in rows[r:]]
    return _size_reduce(basis)


def _size_reduce(basis):
    """Cheap pairwise reduction to keep the starting vectors short."""
    basis = [list(b) for b in basis]
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            for j in range(len(basis)):
                if i == j:
                    continue
                bi, bj = basis[i], basis[j]
                nj = sum(x * x for x in bj)
                if nj == 0:
                    continue
                q = round(Fraction(sum(a * b for a, b in zip(bi, bj)), nj))
                if q:
                    cand = [a - q * b for a, b in zip(bi, bj)]
                    if sum(x * x for x in cand) < sum(x * x for x in bi):
                        basis[i] = cand
                        changed = True
    return [tuple(b) for b in basis]


# ---------------------------------------------------------------- completion

def _sign_compatible(x, y) -> bool:
    return all(a * b >= 0 for a, b in zip(x, y))


def _signs(v) -> tuple[int, int]:
    pos = neg = 0
    for i, x in enumerate(v):
        if x > 0:
            pos |= 1 << i
        elif x < 0:
            neg |= 1 << i
    return pos, neg


def _normal_form(s, G, masks):
    """Subtract conformally smaller elements of G from s until none fits."""
    progress = True
    while progress and any(s):
        progress = False
        sp, sn = _signs(s)
        for g, (gp, gn) in zip(G, masks):
            # the sign pattern test rejects most candidates cheaply
            if gp & ~sp or gn & ~sn:
                continue
            if all(abs(a) <= abs(b) for a, b in zip(g, s)):
                s = tuple(b - a for a, b in zip(g, s))
                progress = True
                break
    return s


def _minimal(vectors):
    vs = sorted(set(vectors), key=lambda v: (sum(abs(x) for x in v), v))
    out = []
    for v in vs:
        if not any(conformal_leq(w, v) for w in out):
            out.append(v)
    return out


def graver_completion(A, max_steps: int = 200_000) -> list[tuple[int, ...]]:
    """Graver basis by critical-pair completion (canonical representatives)."""
    A = as_matrix(A)
    basis = lattice_kernel_basis(A)
    if not basis:
        return []
    G = []
    for b in basis:
        G.append(b)
        G.append(tuple(-x for x in b))
    masks = [_signs(g) for g in G]
    pending = []
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            pending.append((G[i], G[j]))
    seen = set()
    steps = 0
    while pending:
        f, g = pending.pop()
        if _sign_compatible(f, g):
            continue
        s = tuple(a + b for a, b in zip(f, g))
        if not any(s) or s in seen:
            continue
        seen.add(s)
        steps += 1
        if steps > max_steps:
            raise BudgetExceeded(f"Graver completion exceeded {max_steps} steps")
        t = _normal_form(s, G, masks)
        if any(t):
            for h in G:
                pending.append((t, h))
            G.append(t)
            masks.append(_signs(t))
    return sorted({canonical(v) for v in _minimal(G)})


# ---------------------------------------------------------------- box enumeration

def kernel_points_in_box(A, bound: int, max_points: int = 400_000):
    """All non-zero integer kernel points with every entry in ``[-bound, bound]``.

    Returns ``None`` when the free-variable box has more than ``max_points`` points.
    """
    A = as_matrix(A)
    n = A.ncols
    R, piv = rref(A.rows, QQ, n)
    free = [j for j in range(n) if j not in set(piv)]
    k = len(free)
    if k == 0:
        return []
    if (2 * bound + 1) ** k > max_points:
        return None
    # scale the pivot expressions to integers: x_p = (sum c_f x_f) / den
    den = math.lcm(*(R[i][f].denominator for i in range(len(piv)) for f in free)) if piv else 1
    coeffs = [[int(-R[i][f] * den) for f in free] for i in range(len(piv))]
    lim = bound * den
    pts = []
    for xs in itertools.product(range(-bound, bound + 1), repeat=k):
        if not any(xs):
            continue
        v = [0] * n
        ok = True
        for f, x in zip(free, xs):
            v[f] = x
        for i, p in enumerate(piv):
            val = sum(c * x for c, x in zip(coeffs[i], xs))
            if val % den or abs(val) > lim:
                ok = False
                break
            v[p] = val // den
        if ok:
            pts.append(tuple(v))
    return pts


def graver_by_box(A, bound: int, max_points: int = 400_000, strict: bool = True):
    """⊑-minimal kernel points inside the box (canonical representatives).

    With ``strict``, raises :class:`BoxTooSmall` when a minimal element
    touches the boundary, since larger Graver elements may then exist.
    """
    pts = kernel_points_in_box(A, bound, max_points)
    if pts is None:
        raise BudgetExceeded(f"box of radius {bound} exceeds {max_points} points")
    mins = _minimal(pts)
    if strict and any(max(abs(x) for x in v) == bound for v in mins):
        raise BoxTooSmall(f"a minimal kernel element reaches the box boundary {bound}")
    return sorted({canonical(v) for v in mins})


def graver_basis(A, box_bound: int | None = None, method: str = "completion", verify: bool = True,
                 max_box_points: int = 400_000, max_steps: int = 200_000) -> GraverSet:
    """Graver basis with optional cross-check against box enumeration.

    The box radius is ``max(g_inf + 1, box_bound)``; every Graver element with
    entries up to that radius must appear in both answers.
    """
    A = as_matrix(A)
    if method == "box":
        B = box_bound if box_bound is not None else 3
        vecs = graver_by_box(A, B, max_box_points, strict=True)
        g1, ginf = _norms(vecs)
        return GraverSet(vecs, g1, ginf, certified=False, box=B, notes=["box enumeration only"])
    vecs = graver_completion(A, max_steps)
    g1, ginf = _norms(vecs)
    res = GraverSet(vecs, g1, ginf)
    if not verify:
        return res
    B = max((ginf or 0) + 1, box_bound or 1)
    res.box = B
    pts = kernel_points_in_box(A, B, max_box_points)
    if pts is None:
        res.notes.append(f"box of radius {B} too large to enumerate; not certified")
        return res
    boxed = sorted({canonical(v) for v in _minimal(pts)})
    if boxed != vecs:
        raise GraverMismatch(f"completion found {len(vecs)} elements, box enumeration {len(boxed)}")
    res.certified = True
    return res


def g1_table(rows) -> list[tuple[int, int]]:
    """Empirical envelope: for each observed c1, the largest g1 seen with it.

    ``rows`` is an iterable of ``(c1, g1)`` pairs; output is sorted by c1 with
    the g1 column made non-decreasing.
    """
    best: dict[int, int] = {}
    for c1, g1 in rows:
        best[c1] = max(best.get(c1, 0), g1)
    out, run = [], 0
    for c1 in sorted(best):
        run = max(run, best[c1])
        out.append((c1, run))
    return out
