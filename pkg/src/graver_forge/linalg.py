"""Exact rational matrices and the row-operation primitives built on them."""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DependentBasis, ParseError, ShapeMismatch
from .fields import QQ, rref


def to_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_token(x)
    if isinstance(x, float):
        raise TypeError("floating point entries are not accepted; pass ints, Fractions or 'p/q' strings")
    # numpy integer scalars and similar
    if hasattr(x, "__index__"):
        return Fraction(x.__index__())
    if hasattr(x, "numerator") and hasattr(x, "denominator"):
        return Fraction(int(x.numerator), int(x.denominator))
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def parse_token(tok: str) -> Fraction:
    tok = tok.strip()
    try:
        if "/" in tok:
            p, q = tok.split("/")
            p, q = int(p), int(q)
            if q == 0:
                raise ParseError(f"zero denominator in {tok!r}")
            return Fraction(p, q)
        return Fraction(int(tok))
    except ValueError as exc:
        raise ParseError(f"bad rational token {tok!r}") from exc


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class RatMatrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("_rows", "nrows", "ncols", "_hash")

    def __init__(self, rows: Iterable[Iterable] = (), ncols: int | None = None):
        data = tuple(tuple(to_rational(x) for x in r) for r in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ShapeMismatch("rows have differing lengths")
            if ncols is not None and ncols != width:
                raise ShapeMismatch(f"expected {ncols} columns, got {width}")
        else:
            width = ncols or 0
        self._rows = data
        self.nrows = len(data)
        self.ncols = width
        self._hash = None

    @classmethod
    def _trusted(cls, rows, ncols):
        obj = cls.__new__(cls)
        obj._rows = tuple(tuple(r) for r in rows)
        obj.nrows = len(obj._rows)
        obj.ncols = ncols
        obj._hash = None
        return obj

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        one, zero = Fraction(1), Fraction(0)
        return cls._trusted([[one if i == j else zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, m: int, n: int) -> "RatMatrix":
        return cls._trusted([[Fraction(0)] * n for _ in range(m)], n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int | None = None) -> "RatMatrix":
        cols = [tuple(to_rational(x) for x in c) for c in cols]
        m = len(cols[0]) if cols else (nrows or 0)
        return cls._trusted([[c[i] for c in cols] for i in range(m)], len(cols))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    @property
    def entries(self) -> list[Fraction]:
        return [x for r in self._rows for x in r]

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> "RatMatrix":
        return RatMatrix._trusted(self.columns(), self.nrows)

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            if self.ncols != other.nrows:
                raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
            oc = other.columns()
            return RatMatrix._trusted(
                [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in oc] for r in self._rows],
                other.ncols,
            )
        vec = [to_rational(x) for x in other]
        if len(vec) != self.ncols:
            raise ShapeMismatch("vector length does not match column count")
        return tuple(sum((a * b for a, b in zip(r, vec)), Fraction(0)) for r in self._rows)

    def select_columns(self, cols: Sequence[int]) -> "RatMatrix":
        return RatMatrix._trusted([[r[j] for j in cols] for r in self._rows], len(cols))

    def select_rows(self, rows: Sequence[int]) -> "RatMatrix":
        return RatMatrix._trusted([self._rows[i] for i in rows], self.ncols)

    def drop_column(self, j: int) -> "RatMatrix":
        return self.select_columns([c for c in range(self.ncols) if c != j])

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.nrows != other.nrows:
            raise ShapeMismatch("row counts differ")
        return RatMatrix._trusted([a + b for a, b in zip(self._rows, other._rows)], self.ncols + other.ncols)

    def scale(self, c) -> "RatMatrix":
        c = to_rational(c)
        return RatMatrix._trusted([[c * x for x in r] for r in self._rows], self.ncols)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self._rows for x in r)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._rows for x in r)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def to_numpy(self):
        import numpy as np

        out = np.empty(self.shape, dtype=object)
        for i, r in enumerate(self._rows):
            for j, x in enumerate(r):
                out[i, j] = x
        return out

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self._rows))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(x) for x in r) for r in self._rows)
        return f"RatMatrix({self.nrows}x{self.ncols}: [{body}])"

    def to_rmx(self) -> str:
        return format_rmx(self)


def as_matrix(A) -> RatMatrix:
    """Coerce nested sequences or arrays to a :class:`RatMatrix`."""
    if isinstance(A, RatMatrix):
        return A
    shape = getattr(A, "shape", None)
    if shape is not None and len(shape) == 2:
        return RatMatrix([[A[i, j] for j in range(shape[1])] for i in range(shape[0])], ncols=shape[1])
    return RatMatrix(A)


# ---------------------------------------------------------------- text format

def format_rmx(A: RatMatrix) -> str:
    lines = [f"{A.nrows} {A.ncols}"]
    lines += [" ".join(format_rational(x) for x in r) for r in A.rows]
    return "\n".join(lines) + "\n"


def parse_rmx(text: str) -> RatMatrix:
    """Parse the ``.rmx`` format: a ``rows cols`` header then whitespace tokens."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("field")]
    if not lines:
        raise ParseError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError("header must be 'rows cols'")
    try:
        m, n = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ParseError("header must be two integers") from exc
    if m < 0 or n < 0:
        raise ParseError("negative dimension")
    tokens = " ".join(lines[1:]).split()
    if len(tokens) != m * n:
        raise ParseError(f"expected {m * n} entries, found {len(tokens)}")
    vals = [parse_token(t) for t in tokens]
    return RatMatrix._trusted([vals[i * n:(i + 1) * n] for i in range(m)], n)


def read_rmx(path) -> RatMatrix:
    with open(path) as fh:
        return parse_rmx(fh.read())


def write_rmx(A: RatMatrix, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_rmx(A))


# ------------------------------------------------------------------ operations

def primitive(vec: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers with the first non-zero entry positive."""
    den = math.lcm(*(x.denominator for x in vec)) if vec else 1
    ints = [int(x * den) for x in vec]
    g = math.gcd(*ints) if ints else 0
    if g == 0:
        return tuple(ints)
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def rref_matrix(A: RatMatrix) -> tuple[RatMatrix, list[int]]:
    R, piv = rref(A.rows, QQ, A.ncols)
    return RatMatrix._trusted(R, A.ncols), piv


def rank(A: RatMatrix) -> int:
    return len(rref(A.rows, QQ, A.ncols)[1])


def kernel_basis(A: RatMatrix) -> list[tuple[int, ...]]:
    """Integral basis of ``ker A``, one vector per free column of the RREF.

    Each vector has coprime entries and a positive first non-zero entry.
    """
    A = as_matrix(A)
    R, piv = rref(A.rows, QQ, A.ncols)
    pset = set(piv)
    basis = []
    for f in range(A.ncols):
        if f in pset:
            continue
        v = [Fraction(0)] * A.ncols
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            v[p] = -R[i][f]
        basis.append(primitive(v))
    return basis


def _reduce_with_transform(A: RatMatrix, basis_cols: Sequence[int]):
    """Row-reduce so ``basis_cols`` become the leading identity block.

    Returns ``(A', P)`` with ``A' = P @ A`` and ``P`` invertible.
    """
    m, n = A.shape
    one, zero = Fraction(1), Fraction(0)
    rows = [list(r) + [one if i == j else zero for j in range(m)] for i, r in enumerate(A.rows)]
    for k, c in enumerate(basis_cols):
        piv = next((i for i in range(k, m) if rows[i][c] != 0), None)
        if piv is None:
            raise DependentBasis(f"column {c} depends on the columns before it in {list(basis_cols)}")
        rows[k], rows[piv] = rows[piv], rows[k]
        lead = rows[k][c]
        if lead != 1:
            rows[k] = [x / lead for x in rows[k]]
        pr = rows[k]
        for i in range(m):
            if i != k and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
    out = RatMatrix._trusted([r[:n] for r in rows], n)
    P = RatMatrix._trusted([r[n:] for r in rows], m)
    return out, P


def reduce_basis_to_identity(A: RatMatrix, basis_cols: Sequence[int]) -> RatMatrix:
    """Row-equivalent matrix whose ``basis_cols`` form an identity in the leading rows."""
    if len(set(basis_cols)) != len(basis_cols):
        raise DependentBasis("repeated column in basis")
    return _reduce_with_transform(as_matrix(A), list(basis_cols))[0]


def entry_complexity(A: RatMatrix) -> int:
    """Maximum over entries p/q of ceil(log2(|p|+1)) + ceil(log2(|q|+1)).

    ``ceil(log2(n+1))`` equals ``n.bit_length()`` for ``n >= 0``, so the zero
    entry 0/1 costs 1.
    """
    A = as_matrix(A)
    return max(
        (abs(x.numerator).bit_length() + x.denominator.bit_length() for r in A.rows for x in r),
        default=0,
    )


def row_space_equal(A: RatMatrix, B: RatMatrix) -> bool:
    A, B = as_matrix(A), as_matrix(B)
    if A.ncols != B.ncols:
        raise ShapeMismatch(f"column counts differ: {A.ncols} vs {B.ncols}")
    return rref(A.rows, QQ, A.ncols)[0] == rref(B.rows, QQ, B.ncols)[0]


def same_kernel(A: RatMatrix, B: RatMatrix) -> bool:
    return kernel_basis(A) == kernel_basis(B)


def independent_rows(A: RatMatrix) -> RatMatrix:
    """Keep a greedy maximal independent subset of the rows (original order)."""
    A = as_matrix(A)
    keep, cur = [], []
    for i, r in enumerate(A.rows):
        if len(rref(cur + [list(r)], QQ, A.ncols)[1]) > len(cur):
            keep.append(i)
            cur.append(list(r))
    return A.select_rows(keep)


def random_row_ops(A: RatMatrix, seed, steps: int) -> RatMatrix:
    """Apply ``steps`` random invertible row operations, deterministically in ``seed``."""
    A = as_matrix(A)
    rng = random.Random(seed)
    rows = [list(r) for r in A.rows]
    m = len(rows)
    coeffs = [-3, -2, -1, 1, 2, 3]
    for _ in range(steps):
        op = rng.randrange(3) if m > 1 else 1
        if op == 0:
            i, j = rng.sample(range(m), 2)
            c = Fraction(rng.choice(coeffs), rng.choice([1, 1, 2]))
            rows[j] = [b + c * a for a, b in zip(rows[i], rows[j])]
        elif op == 1:
            i = rng.randrange(m)
            c = Fraction(rng.choice(coeffs), rng.choice([1, 1, 2]))
            rows[i] = [c * a for a in rows[i]]
        else:
            i, j = rng.sample(range(m), 2)
            rows[i], rows[j] = rows[j], rows[i]
    return RatMatrix._trusted(rows, A.ncols)
