"""The braids-and-ties algebra: normal forms over the basis {E_A T_w}.

An element is a sparse Q(u)-linear combination of basis keys (A, w) with A
a set partition and w a permutation of {1..n}.  Products are computed by a
rewriting pass that right-multiplies one reduced-word letter at a time:

    (E_A T_w)(E_B T_v) = E_{A v (w B)} T_w T_v

and for a current term E_C T_x times a letter s_i,

    no descent:  E_C T_{x s_i}
    descent:     E_C T_{x s_i}
                 + (u-1) E_{C v <{x(i), x(i+1)}>} T_{x s_i}
                 + (u-1) E_{C v <{x(i), x(i+1)}>} T_x

The descent branch is the quadratic relation T_i^2 = 1 + (u-1)E_i(1+T_i)
pushed through T_y E_i = E_{y{i,i+1}} T_y; the pair {x(i), x(i+1)} (upper
indices of the current permutation) is the single most error-prone step of
the whole engine and is guarded by verify_relations.

Per-(n, key, key) structure constants are memoized, so repeated products at
a fixed size are dictionary lookups.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .combinatorics import (
    Permutation,
    SetPartition,
    SizeMismatchError,
    all_permutations,
    sp_apply,
    sp_closure,
    sp_enumerate,
    sp_join,
    sp_leq,
)
from .exactmath import RF_ONE, RF_U, RF_ZERO, ExactMathError, RatFunc

BasisKey = tuple[SetPartition, Permutation]

_U_MINUS_1 = RF_U - RF_ONE
_UINV_MINUS_1 = RF_U.inverse() - RF_ONE


class AlgebraElement:
    """A normal-form element of the size-n algebra."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[BasisKey, RatFunc] | None = None):
        self.n = n
        clean = {}
        if terms:
            for (a, w), c in terms.items():
                if a.n != n or w.n != n:
                    raise SizeMismatchError("key size differs from element size")
                if c:
                    clean[(a, w)] = c
        self.terms = clean

    # -- linear structure --------------------------------------------------

    @staticmethod
    def zero(n: int) -> "AlgebraElement":
        return AlgebraElement(n)

    @staticmethod
    def one(n: int) -> "AlgebraElement":
        return AlgebraElement(
            n, {(SetPartition.bottom(n), Permutation.identity(n)): RF_ONE}
        )

    @staticmethod
    def basis(a: SetPartition, w: Permutation) -> "AlgebraElement":
        return AlgebraElement(a.n, {(a, w): RF_ONE})

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if self.n != other.n:
            raise SizeMismatchError("adding elements of different sizes")
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, RF_ZERO) + c
        return AlgebraElement(self.n, terms)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(RatFunc(-1))

    def scale(self, c) -> "AlgebraElement":
        c = c if isinstance(c, RatFunc) else RatFunc(c)
        return AlgebraElement(self.n, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return mul(self, other)

    def sorted_terms(self) -> list[tuple[BasisKey, RatFunc]]:
        return sorted(
            self.terms.items(), key=lambda kv: (kv[0][0].blocks, kv[0][1].images)
        )

    def __repr__(self):
        return "AlgebraElement(n=%d, %s)" % (self.n, format_element(self))

    def to_json(self):
        return [
            {
                "partition": a.to_json(),
                "perm": list(w.images),
                "coeff": c.to_json(),
            }
            for (a, w), c in self.sorted_terms()
        ]


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def gen(kind: str, i: int, n: int) -> AlgebraElement:
    """Generator T_i, its inverse, or the tie idempotent E_i."""
    if not 1 <= i <= n - 1:
        raise IndexError("generator index %d out of range for n=%d" % (i, n))
    bot = SetPartition.bottom(n)
    e = Permutation.identity(n)
    si = Permutation.transposition(i, n)
    merged = sp_closure([(i, i + 1)], n)
    if kind == "T":
        return AlgebraElement(n, {(bot, si): RF_ONE})
    if kind == "E":
        return AlgebraElement(n, {(merged, e): RF_ONE})
    if kind == "Tinv":
        # T_i + (u^{-1} - 1) E_i (1 + T_i)
        return AlgebraElement(
            n,
            {
                (bot, si): RF_ONE,
                (merged, e): _UINV_MINUS_1,
                (merged, si): _UINV_MINUS_1,
            },
        )
    raise ValueError("unknown generator kind %r" % kind)


# ---------------------------------------------------------------------------
# the product
# ---------------------------------------------------------------------------

_KEY_PRODUCT_CACHE: dict[tuple[int, BasisKey, BasisKey], dict[BasisKey, RatFunc]] = {}
_CACHE_LOCK = threading.Lock()


def _key_product(n: int, ka: BasisKey, kb: BasisKey) -> dict[BasisKey, RatFunc]:
    cached = _KEY_PRODUCT_CACHE.get((n, ka, kb))
    if cached is not None:
        return cached
    a, w = ka
    b, v = kb
    c0 = sp_join(a, sp_apply(w, b))
    terms: dict[BasisKey, RatFunc] = {(c0, w): RF_ONE}
    for i in v.reduced_word():
        si = Permutation.transposition(i, n)
        nxt: dict[BasisKey, RatFunc] = {}

        def bump(key, val):
            cur = nxt.get(key)
            nxt[key] = val if cur is None else cur + val

        for (c, x), coef in terms.items():
            xsi = x * si
            if x(i) < x(i + 1):  # no right descent at i: lengths add
                bump((c, xsi), coef)
            else:
                d = sp_join(c, sp_closure([(x(i), x(i + 1))], n))
                bump((c, xsi), coef)
                bump((d, xsi), coef * _U_MINUS_1)
                bump((d, x), coef * _U_MINUS_1)
        terms = {k: cf for k, cf in nxt.items() if cf}
    with _CACHE_LOCK:
        _KEY_PRODUCT_CACHE[(n, ka, kb)] = terms
    return terms


def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.n != y.n:
        raise SizeMismatchError("multiplying elements of different sizes")
    out: dict[BasisKey, RatFunc] = {}
    for ka, ca in x.terms.items():
        for kb, cb in y.terms.items():
            c = ca * cb
            for k, sc in _key_product(x.n, ka, kb).items():
                cur = out.get(k)
                nv = c * sc if cur is None else cur + c * sc
                out[k] = nv
    return AlgebraElement(x.n, out)


def product(factors: Iterable[AlgebraElement], n: int) -> AlgebraElement:
    acc = AlgebraElement.one(n)
    for f in factors:
        acc = mul(acc, f)
    return acc


# ---------------------------------------------------------------------------
# idempotents E_{ij}, E_A
# ---------------------------------------------------------------------------

def e_pair(i: int, j: int, n: int) -> AlgebraElement:
    """E_{ij} = T_i ... T_{j-2} E_{j-1} T_{j-2}^{-1} ... T_i^{-1}."""
    if not 1 <= i < j <= n:
        raise IndexError("need 1 <= i < j <= n, got (%d, %d)" % (i, j))
    factors = (
        [gen("T", k, n) for k in range(i, j - 1)]
        + [gen("E", j - 1, n)]
        + [gen("Tinv", k, n) for k in range(j - 2, i - 1, -1)]
    )
    el = product(factors, n)
    expect = (sp_closure([(i, j)], n), Permutation.identity(n))
    assert el.terms == {expect: RF_ONE}, "E_{%d%d} did not normalize" % (i, j)
    return el


def e_set(a: SetPartition) -> AlgebraElement:
    """E_A as the product over blocks I of prod_{i in I \\ {min I}} E_{min I, i}."""
    n = a.n
    el = AlgebraElement.one(n)
    for blk in a.blocks:
        for i in blk[1:]:
            el = mul(el, e_pair(blk[0], i, n))
    expect = (a, Permutation.identity(n))
    assert el.terms == {expect: RF_ONE}, "E_A did not normalize for %r" % (a,)
    return el


# ---------------------------------------------------------------------------
# involutions, functional, form
# ---------------------------------------------------------------------------

def star(x: AlgebraElement) -> AlgebraElement:
    """The antiautomorphism fixing every T_i and E_i: (A, w) -> (w^{-1}A, w^{-1})."""
    out: dict[BasisKey, RatFunc] = {}
    for (a, w), c in x.terms.items():
        wi = w.inverse()
        k = (sp_apply(wi, a), wi)
        out[k] = out.get(k, RF_ZERO) + c
    return AlgebraElement(x.n, out)


def flip(x: AlgebraElement) -> AlgebraElement:
    """The involution induced by the index flip i -> n-i on generators."""
    from .tensor_rep import word_expand  # circular at import time only

    n = x.n
    out = AlgebraElement.zero(n)
    for key, c in x.terms.items():
        el = AlgebraElement.one(n)
        for kind, i in word_expand(key):
            el = mul(el, gen(kind, n - i, n))
        out = out + el.scale(c)
    return out


def epsilon(x: AlgebraElement) -> RatFunc:
    """Coefficient of the maximal idempotent E_{top} (key (top, identity))."""
    key = (SetPartition.top(x.n), Permutation.identity(x.n))
    return x.terms.get(key, RF_ZERO)


def form(x: AlgebraElement, y: AlgebraElement) -> RatFunc:
    """The invariant bilinear form <x, y> = epsilon(x* y)."""
    return epsilon(mul(star(x), y))


def specialize(x: AlgebraElement, q) -> dict[BasisKey, Fraction]:
    """Coefficients of x evaluated at u = q; raises on a pole."""
    q = Fraction(q)
    out = {}
    for k, c in x.terms.items():
        v = c.eval(q)
        if v:
            out[k] = v
    return out


def moebius_coefficient(a0: SetPartition) -> Fraction:
    """Coefficient of E_{top} in prod_{A0 < A} (1 - E_A) * E_{A0}, by direct
    expansion in the algebra.  The product is constant in u."""
    n = a0.n
    el = AlgebraElement.one(n)
    for a in sp_enumerate(n):
        if a != a0 and sp_leq(a0, a):
            el = mul(el, AlgebraElement.one(n) - e_set(a))
    el = mul(el, e_set(a0))
    c = epsilon(el)
    if not c.is_constant():
        raise ExactMathError("Moebius coefficient unexpectedly depends on u")
    return c.as_fraction()


# ---------------------------------------------------------------------------
# relation verifier
# ---------------------------------------------------------------------------

def _relation_instances(n: int):
    """Yield (name, lhs factors, rhs factors) for every instance of (E1)-(E9),
    with factors given as (kind, index) generator letters."""
    idx = range(1, n)
    for i in idx:
        for j in idx:
            if abs(i - j) > 1:
                yield ("E1[%d,%d]" % (i, j), [("T", i), ("T", j)], [("T", j), ("T", i)])
                yield ("E3[%d,%d]" % (i, j), [("E", i), ("T", j)], [("T", j), ("E", i)])
            yield ("E2[%d,%d]" % (i, j), [("E", i), ("E", j)], [("E", j), ("E", i)])
            if abs(i - j) == 1:
                yield (
                    "E6[%d,%d]" % (i, j),
                    [("T", i), ("T", j), ("T", i)],
                    [("T", j), ("T", i), ("T", j)],
                )
                yield (
                    "E7[%d,%d]" % (i, j),
                    [("E", j), ("T", i), ("T", j)],
                    [("T", i), ("T", j), ("E", i)],
                )
                yield (
                    "E8a[%d,%d]" % (i, j),
                    [("E", i), ("E", j), ("T", j)],
                    [("E", i), ("T", j), ("E", i)],
                )
                yield (
                    "E8b[%d,%d]" % (i, j),
                    [("E", i), ("T", j), ("E", i)],
                    [("T", j), ("E", i), ("E", j)],
                )
        yield ("E4[%d]" % i, [("E", i), ("E", i)], [("E", i)])
        yield ("E5[%d]" % i, [("E", i), ("T", i)], [("T", i), ("E", i)])


def _eval_word(word, n: int) -> AlgebraElement:
    return product((gen(kind, i, n) for kind, i in word), n)


def verify_relations(n: int) -> dict:
    """Check every instance of (E1)-(E9) at size n through the normal form."""
    if n < 2:
        raise ValueError("relations need n >= 2")
    details = []
    ok = True
    for name, lhs, rhs in _relation_instances(n):
        good = _eval_word(lhs, n) == _eval_word(rhs, n)
        ok = ok and good
        details.append({"relation": name, "pass": good})
    for i in range(1, n):
        ti, ei = gen("T", i, n), gen("E", i, n)
        one = AlgebraElement.one(n)
        rhs = one + mul(ei, one + ti).scale(_U_MINUS_1)
        good = mul(ti, ti) == rhs
        ok = ok and good
        details.append({"relation": "E9[%d]" % i, "pass": good})
        good = mul(ti, gen("Tinv", i, n)) == one
        ok = ok and good
        details.append({"relation": "Tinv[%d]" % i, "pass": good})
    return {"n": n, "pass": ok, "relations": details}


# ---------------------------------------------------------------------------
# printing (inverse of the expression parser)
# ---------------------------------------------------------------------------

def format_key(a: SetPartition, w: Permutation) -> str:
    parts = []
    for blk in a.blocks:
        if len(blk) > 1:
            parts.append("E{%s}" % ",".join(str(x) for x in blk))
    parts.extend("T%d" % i for i in w.reduced_word())
    return "*".join(parts) if parts else "1"


def format_element(x: AlgebraElement) -> str:
    if not x.terms:
        return "0"
    chunks = []
    for (a, w), c in x.sorted_terms():
        key = format_key(a, w)
        if c == RF_ONE:
            chunks.append(key)
        elif key == "1":
            chunks.append("(%s)" % c)
        else:
            chunks.append("(%s)*%s" % (c, key))
    return " + ".join(chunks)


def dimension(n: int) -> int:
    """dim of the size-n algebra: n! * B_n."""
    return len(all_permutations(n)) * len(sp_enumerate(n))


def basis_keys(n: int) -> list[BasisKey]:
    return [
        (a, w) for a in sp_enumerate(n) for w in sorted(all_permutations(n))
    ]
