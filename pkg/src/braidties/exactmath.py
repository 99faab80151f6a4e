"""Exact arithmetic over Q and Q(u), plus sparse exact linear algebra.

Everything downstream runs over the rational function field Q(u): the
coefficients are `RatFunc` values, i.e. quotients of polynomials in the
single variable u with Fraction coefficients.  Canonical form (gcd-reduced,
monic denominator) makes equality and hashing structural, which the sparse
coefficient maps rely on.

The linear algebra is deliberately generic: row reduction, rank and span
closure work on dict-vectors whose values live in any field exposing
+,-,*,/ and truthiness, so the same code runs over Q(u) and over Q after
specializing u.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Iterable, Mapping

Rational = Fraction


class ExactMathError(ArithmeticError):
    """Division by zero, pole at evaluation point, and friends."""


# ---------------------------------------------------------------------------
# polynomials in u over Q
# ---------------------------------------------------------------------------

def _ptrim(coeffs) -> tuple[Fraction, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _padd(a, b):
    n = max(len(a), len(b))
    return _ptrim(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _ptrim(out)


def _pscale(a, s: Fraction):
    if not s:
        return ()
    return tuple(c * s for c in a)


def _pdivmod(a, b):
    if not b:
        raise ExactMathError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b) and _ptrim(a):
        a = list(_ptrim(a))
        if len(a) < len(b):
            break
        d = len(a) - len(b)
        c = a[-1] * inv_lead
        q[d] = c
        for i, cb in enumerate(b):
            a[d + i] -= c * cb
    return _ptrim(q), _ptrim(a)


def _pgcd(a, b):
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if a:
        a = _pscale(a, 1 / a[-1])  # monic
    return a


def _peval(a, q: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * q + c
    return acc


def _pstr(a) -> str:
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            up = "u" if i == 1 else "u^%d" % i
            if c == 1:
                parts.append(up)
            elif c == -1:
                parts.append("-" + up)
            else:
                parts.append("%s*%s" % (c, up))
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


class RatFunc:
    """An element of Q(u) in canonical form.

    Invariants: gcd(num, den) = 1, den monic and nonzero, zero is 0/1.
    Immutable and hashable.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if isinstance(num, RatFunc):
            num, den2 = num.num, num.den
        else:
            num, den2 = _coerce_poly(num), ()
        if isinstance(den, RatFunc):
            num2, den = _pmul(num, den.den), den.num
            num = num2
        else:
            den = _coerce_poly(den)
        if den2:
            den = _pmul(den, den2)
        if not den:
            raise ExactMathError("zero denominator in Q(u)")
        g = _pgcd(num, den)
        if len(g) > 1:
            num = _pdivmod(num, g)[0]
            den = _pdivmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = _pscale(num, 1 / lead)
            den = _pscale(den, 1 / lead)
        if not num:
            den = (Fraction(1),)
        self.num = num
        self.den = den
        self._hash = hash((self.num, self.den))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def u() -> "RatFunc":
        return RatFunc((0, 1))

    @staticmethod
    def from_fraction(q: Fraction) -> "RatFunc":
        return RatFunc((Fraction(q),))

    # -- field operations --------------------------------------------------

    def __add__(self, other):
        other = _coerce_rf(other)
        return RatFunc(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(_pneg(self.num), self.den)

    def __sub__(self, other):
        return self + (-_coerce_rf(other))

    def __rsub__(self, other):
        return _coerce_rf(other) + (-self)

    def __mul__(self, other):
        other = _coerce_rf(other)
        return RatFunc(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rf(other)
        if not other:
            raise ExactMathError("division by zero in Q(u)")
        return RatFunc(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        return _coerce_rf(other) / self

    def inverse(self) -> "RatFunc":
        if not self:
            raise ExactMathError("inverse of zero in Q(u)")
        return RatFunc(self.den, self.num)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RF_ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure ---------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _coerce_rf(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return self._hash

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and self.den == (Fraction(1),)

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ExactMathError("not a constant: %s" % self)
        return self.num[0] if self.num else Fraction(0)

    def eval(self, q) -> Fraction:
        """Exact evaluation at u = q; raises on a pole."""
        q = Fraction(q)
        d = _peval(self.den, q)
        if d == 0:
            raise ExactMathError("pole at u = %s" % q)
        return _peval(self.num, q) / d

    def __repr__(self):
        return "RatFunc(%s)" % self

    def __str__(self):
        if self.den == (Fraction(1),):
            return _pstr(self.num)
        return "(%s)/(%s)" % (_pstr(self.num), _pstr(self.den))

    def to_json(self) -> dict:
        return {
            "num": ["%s" % c for c in self.num],
            "den": ["%s" % c for c in self.den],
        }

    @staticmethod
    def from_json(obj: Mapping) -> "RatFunc":
        return RatFunc(
            tuple(Fraction(c) for c in obj["num"]),
            tuple(Fraction(c) for c in obj["den"]),
        )


def _coerce_poly(x) -> tuple[Fraction, ...]:
    if isinstance(x, tuple):
        return _ptrim(Fraction(c) for c in x)
    if isinstance(x, (list,)):
        return _ptrim(Fraction(c) for c in x)
    if isinstance(x, (int, Fraction)):
        return _ptrim((Fraction(x),))
    raise TypeError("cannot build polynomial from %r" % (x,))


def _coerce_rf(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFunc(x)
    raise TypeError("cannot coerce %r into Q(u)" % (x,))


RF_ZERO = RatFunc(0)
RF_ONE = RatFunc(1)
RF_U = RatFunc.u()


# ---------------------------------------------------------------------------
# sparse linear algebra over an exact field
# ---------------------------------------------------------------------------

class SparseMatrix:
    """Sparse exact matrix; entries is a dict (row, col) -> nonzero value."""

    def __init__(self, rows: int, cols: int, entries: Mapping | None = None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (r, c), v in entries.items():
                if not (0 <= r < rows and 0 <= c < cols):
                    raise IndexError("entry (%d, %d) out of range" % (r, c))
                if v:
                    self.entries[(r, c)] = v

    def row_dicts(self) -> list[dict]:
        rows = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def map_entries(self, fn) -> "SparseMatrix":
        return SparseMatrix(
            self.rows, self.cols, {k: fn(v) for k, v in self.entries.items()}
        )


def row_reduce(vectors: Iterable[Mapping], key=None) -> list[dict]:
    """Gaussian elimination on dict-vectors with arbitrary hashable columns.

    Returns a reduced basis: distinct pivot columns, pivots normalized to 1,
    pivot columns eliminated from all other rows.  `key` orders candidate
    pivot columns so the output is deterministic.
    """
    if key is None:
        key = lambda c: c  # noqa: E731 -- columns assumed orderable
    basis: list[dict] = []  # parallel to pivots
    pivots: list = []
    for vec in vectors:
        v = {c: x for c, x in vec.items() if x}
        for p, b in zip(pivots, basis):
            if p in v:
                coef = v[p]
                for c, x in b.items():
                    nv = v.get(c, 0) - coef * x
                    if nv:
                        v[c] = nv
                    else:
                        v.pop(c, None)
        if not v:
            continue
        p = min(v, key=key)
        inv = 1 / v[p]
        v = {c: x * inv for c, x in v.items()}
        # back-eliminate the new pivot from the existing basis
        for i, b in enumerate(basis):
            if p in b:
                coef = b[p]
                nb = dict(b)
                for c, x in v.items():
                    nx = nb.get(c, 0) - coef * x
                    if nx:
                        nb[c] = nx
                    else:
                        nb.pop(c, None)
                basis[i] = nb
        basis.append(v)
        pivots.append(p)
    order = sorted(range(len(pivots)), key=lambda i: key(pivots[i]))
    return [basis[i] for i in order]


def rank_exact(m: SparseMatrix) -> int:
    """Rank by fraction-free-ish row reduction directly over the field."""
    return len(row_reduce(m.row_dicts()))


def rank(m: SparseMatrix, mode: str = "random", rng: random.Random | None = None) -> int:
    """Rank of a matrix over Q(u).

    Default mode evaluates all entries at two independently drawn random
    rationals and takes the maximum rank, confirming with a third point on
    disagreement; specialization rank never exceeds the generic rank, so a
    match certifies it.  `mode="exact"` row-reduces over Q(u) directly.
    Entries that are plain Fractions (already specialized) are reduced
    exactly either way.
    """
    if not m.entries:
        return 0
    if mode == "exact" or not any(isinstance(v, RatFunc) for v in m.entries.values()):
        return rank_exact(m)
    if mode != "random":
        raise ValueError("unknown rank mode %r" % mode)
    rng = rng or random.Random(0)

    def rank_at(q: Fraction) -> int | None:
        try:
            spec = m.map_entries(lambda v: v.eval(q))
        except ExactMathError:
            return None  # denominator vanished; draw again
        return rank_exact(spec)

    ranks = []
    while len(ranks) < 2:
        q = Fraction(rng.randint(2, 10**6), rng.randint(1, 97))
        r = rank_at(q)
        if r is not None:
            ranks.append(r)
    if ranks[0] != ranks[1]:
        while True:
            q = Fraction(rng.randint(2, 10**6), rng.randint(1, 97))
            r = rank_at(q)
            if r is not None:
                ranks.append(r)
                break
    return max(ranks)


def span_closure(
    seed: Iterable[Mapping],
    steps: Iterable[Callable[[Mapping], Mapping]] | Callable,
    key=None,
    max_dim: int | None = None,
) -> list[dict]:
    """Row-reduced basis of the smallest subspace containing `seed` and
    closed under each (linear) step map.

    `steps` is a linear map dict-vector -> dict-vector, or an iterable of
    such maps.  Works over any exact field.
    """
    if callable(steps):
        steps = [steps]
    else:
        steps = list(steps)
    basis = row_reduce(seed, key=key)
    while True:
        images = [step(v) for v in basis for step in steps]
        new_basis = row_reduce(basis + images, key=key)
        if len(new_basis) == len(basis):
            return new_basis
        basis = new_basis
        if max_dim is not None and len(basis) > max_dim:
            raise ExactMathError("span_closure exceeded max_dim=%d" % max_dim)
