"""Scalar fields for linear matroids: the rationals and prime fields GF(p).

Both fields expose the same small interface so that elimination code can be
written once.  Rational elements are :class:`fractions.Fraction`; prime-field
elements are plain ``int`` residues in ``range(p)``.
"""

from __future__ import annotations

from fractions import Fraction

from sympy import isprime

from .errors import BadParams, NotIntegral


class Rationals:
    name = "q"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, float):
            raise TypeError("floating point entries are not accepted")
        return Fraction(x)

    def norm(self, x):
        return x

    def div(self, a, b):
        return a / b

    def tag(self) -> str:
        return "field q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    def __init__(self, p: int):
        p = int(p)
        if not isprime(p):
            raise BadParams(f"{p} is not prime")
        self.p = p
        self.name = f"gf:{p}"
        self.zero = 0
        self.one = 1

    def coerce(self, x):
        if isinstance(x, float):
            raise TypeError("floating point entries are not accepted")
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise NotIntegral(f"entry {x} is not an integer")
            x = x.numerator
        return int(x) % self.p

    def norm(self, x):
        return x % self.p

    def div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def tag(self) -> str:
        return f"field gf {self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gf", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()

FieldSpec = Rationals | PrimeField


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str) -> FieldSpec:
    """Parse ``q`` or ``gf:P`` (also ``gf P``) into a field."""
    t = text.strip().lower()
    if t in ("q", "qq", "rationals"):
        return QQ
    for prefix in ("gf:", "gf "):
        if t.startswith(prefix):
            try:
                return PrimeField(int(t[len(prefix):]))
            except ValueError as exc:
                raise BadParams(f"bad field {text!r}") from exc
    raise BadParams(f"unknown field {text!r}")


def rref(rows, field, ncols=None):
    """Reduced row echelon form over ``field``.

    ``rows`` is a sequence of equal-length sequences of field elements.
    Returns ``(R, pivots)`` where ``R`` holds only the non-zero rows.
    """
    m = [list(r) for r in rows]
    n = ncols if ncols is not None else (len(m[0]) if m else 0)
    pivots = []
    r = 0
    for c in range(n):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][c]
        if lead != field.one:
            m[r] = [field.div(x, lead) for x in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [field.norm(a - f * b) for a, b in zip(m[i], pr)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank_of(vectors, field) -> int:
    """Dimension of the span of ``vectors`` (each a sequence of field elements)."""
    vecs = [v for v in vectors if any(x != 0 for x in v)]
    if not vecs:
        return 0
    return len(rref(vecs, field)[0])
