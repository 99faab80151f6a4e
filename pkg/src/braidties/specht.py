"""Symmetrizers, Specht modules inside the tensor space, and the
classification report.

A label is a sequence of triples (lambda^s, m_s, mu^s): m_s tensor blocks
carry the Hecke data lambda^s, and mu^s (a partition of m_s) carries the
symmetric-group data permuting those blocks.  The module S(label) is the
span closure of e_label . w_label under all generator actions.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Iterable

from .combinatorics import (
    IntPartition,
    Permutation,
    SetPartition,
    SpechtLabel,
    check_label,
    conjugate_partition,
    dominance_leq,
    enumerate_labels,
    sp_leq,
    tableau_data,
)
from .exactmath import RF_ONE, RF_U, RF_ZERO, RatFunc, row_reduce, span_closure
from .algebra_core import (
    AlgebraElement,
    BasisKey,
    dimension,
    e_set,
    mul,
    star,
)
from .tensor_rep import TensorKey, TensorVector, act, act_E, act_T

_U_MINUS_1 = RF_U - RF_ONE


# ---------------------------------------------------------------------------
# group-algebra symmetrizers
# ---------------------------------------------------------------------------

def symmetrizers(lam: IntPartition) -> dict:
    """Young symmetrizer data for the symmetric group: r, c and s = c r as
    dicts Permutation -> Fraction, plus the preidempotency scalar of s."""
    td = tableau_data(tuple(lam))
    r = {w: Fraction(1) for w in td.row_stabilizer}
    c = {w: Fraction(-1) ** w.length() for w in td.col_stabilizer}
    s = _group_mul(c, r)
    ss = _group_mul(s, s)
    scalar = _proportionality(ss, s)
    if scalar is None or not scalar:
        raise ArithmeticError("s_lambda failed preidempotency for %r" % (lam,))
    return {"r": r, "c": c, "s": s, "scalar": scalar}


def _group_mul(x: dict, y: dict) -> dict:
    out: dict[Permutation, Fraction] = {}
    for v, cv in x.items():
        for w, cw in y.items():
            k = v * w
            out[k] = out.get(k, Fraction(0)) + cv * cw
    return {k: c for k, c in out.items() if c}


def _proportionality(x: dict, y: dict):
    """C with x = C*y, or None if not proportional."""
    if not y:
        return None if x else Fraction(0)
    k0 = next(iter(y))
    c = x.get(k0, type(y[k0])(0)) / y[k0]
    lhs = {k: v for k, v in x.items()}
    rhs = {k: v * c for k, v in y.items() if v * c}
    return c if lhs == rhs else None


# ---------------------------------------------------------------------------
# Hecke-side (Gyoja) symmetrizers, embedded in the big algebra
# ---------------------------------------------------------------------------

def _embed_perm(w: Permutation, n: int, offset: int) -> Permutation:
    """w acting on {offset+1 .. offset+m} inside {1..n}."""
    im = list(range(1, n + 1))
    for i, j in enumerate(w.images, start=1):
        im[offset + i - 1] = offset + j
    return Permutation(im)


def _t_of(w: Permutation, n: int, offset: int = 0) -> AlgebraElement:
    return AlgebraElement.basis(
        SetPartition.bottom(n), _embed_perm(w, n, offset) if offset or w.n != n else w
    )


def iota_sum(perms: Iterable[Permutation], n: int, offset: int = 0) -> AlgebraElement:
    """iota(X) = sum of T_w over X."""
    out = AlgebraElement.zero(n)
    for w in perms:
        out = out + _t_of(w, n, offset)
    return out


def epsilon_sum(perms: Iterable[Permutation], n: int, offset: int = 0) -> AlgebraElement:
    """epsilon(X) = sum of (-u)^{-l(w)} T_w over X."""
    neg_uinv = RatFunc(-1) / RF_U
    out = AlgebraElement.zero(n)
    for w in perms:
        out = out + _t_of(w, n, offset).scale(neg_uinv ** w.length())
    return out


def gyoja_element(lam: IntPartition, n: int | None = None, offset: int = 0) -> dict:
    """The Hecke analogue of the Young symmetrizer for shape lam, embedded
    into the size-n algebra acting on positions offset+1 .. offset+|lam|.

    Returns x, y, c(u), r(u) and e = c(u) r(u) as AlgebraElements.
    """
    lam = tuple(lam)
    m = sum(lam)
    if n is None:
        n = m
    td = tableau_data(lam)
    td_conj = tableau_data(conjugate_partition(lam))
    x = iota_sum(td.row_stabilizer, n, offset)
    y_conj = epsilon_sum(td_conj.row_stabilizer, n, offset)
    tw = _t_of(td.w_lambda, n, offset)
    tw_inv = _t_of(td.w_lambda.inverse(), n, offset)
    c_u = mul(tw_inv, mul(y_conj, tw))
    e = mul(c_u, x)
    return {"x": x, "y_conj": y_conj, "c_u": c_u, "r_u": x, "e": e}


def hecke_project(x: AlgebraElement) -> dict[Permutation, RatFunc]:
    """Image in the Hecke quotient (every E_A goes to 1): sum coefficients
    over the partition component of each key."""
    out: dict[Permutation, RatFunc] = {}
    for (_, w), c in x.terms.items():
        out[w] = out.get(w, RF_ZERO) + c
    return {w: c for w, c in out.items() if c}


# ---------------------------------------------------------------------------
# the Specht construction
# ---------------------------------------------------------------------------

class BlockStructure:
    """The consecutive-interval partition A_label and its block bookkeeping."""

    def __init__(self, label: SpechtLabel, n: int):
        self.label = check_label(label, n)
        self.n = n
        blocks: list[tuple[int, ...]] = []
        groups: list[list[int]] = []  # block indices per label entry
        pos = 1
        for lam, m, _ in self.label:
            size = sum(lam)
            grp = []
            for _ in range(m):
                blocks.append(tuple(range(pos, pos + size)))
                grp.append(len(blocks) - 1)
                pos += size
            groups.append(grp)
        self.blocks = blocks
        self.groups = groups
        self.A = SetPartition(blocks, n)

    def block_permutation(self, group: int, sigma: Permutation) -> Permutation:
        """sigma in S_{m_s} as the permutation of {1..n} permuting the
        group's equal-size blocks."""
        im = list(range(1, self.n + 1))
        grp = self.groups[group]
        for b_from, b_idx in enumerate(grp, start=1):
            b_to = grp[sigma(b_from) - 1]
            for r, x in enumerate(self.blocks[b_idx]):
                im[x - 1] = self.blocks[b_to][r]
        return Permutation(im)


def v_Lambda(label: SpechtLabel, n: int) -> TensorKey:
    """The seed pure tensor: block b gets upper index b and the lower-index
    pattern of its lambda."""
    bs = BlockStructure(label, n)
    pairs: list[tuple[int, int]] = []
    bi = 0
    for lam, m, _ in bs.label:
        for _ in range(m):
            bi += 1
            for row, cnt in enumerate(lam, start=1):
                pairs.extend((row, bi) for _ in range(cnt))
    return tuple(pairs)


def _permute_positions(pi: Permutation, key: TensorKey) -> TensorKey:
    inv = pi.inverse()
    return tuple(key[inv(p) - 1] for p in range(1, len(key) + 1))


def w_Lambda(label: SpechtLabel, n: int) -> TensorVector:
    """w = (r_{mu^1} (x) ... (x) r_{mu^k}) v, the row symmetrizers acting by
    block permutation (T_sigma acts as sigma on these vectors)."""
    bs = BlockStructure(label, n)
    key0 = v_Lambda(label, n)
    vecs = {key0: RF_ONE}
    for s, (_, _, mu) in enumerate(bs.label):
        td = tableau_data(mu)
        nxt: dict[TensorKey, RatFunc] = {}
        for sigma in td.row_stabilizer:
            pi = bs.block_permutation(s, sigma)
            for key, c in vecs.items():
                nk = _permute_positions(pi, key)
                nxt[nk] = nxt.get(nk, RF_ZERO) + c
        vecs = nxt
    return TensorVector(n, vecs)


def e_Lambda(label: SpechtLabel, n: int) -> AlgebraElement:
    """e = (column symmetrizers over block permutations) * (per-block Gyoja
    column elements) * E_{A_label}; the three factors commute."""
    bs = BlockStructure(label, n)
    factor_sym = AlgebraElement.one(n)
    for s, (_, _, mu) in enumerate(bs.label):
        td = tableau_data(mu)
        part = AlgebraElement.zero(n)
        for sigma in td.col_stabilizer:
            sign = Fraction(-1) ** sigma.length()
            part = part + AlgebraElement.basis(
                SetPartition.bottom(n), bs.block_permutation(s, sigma)
            ).scale(sign)
        factor_sym = mul(factor_sym, part)
    factor_hecke = AlgebraElement.one(n)
    for s, (lam, _, _) in enumerate(bs.label):
        for b_idx in bs.groups[s]:
            offset = bs.blocks[b_idx][0] - 1
            factor_hecke = mul(
                factor_hecke, gyoja_element(lam, n, offset)["c_u"]
            )
    factor_e = e_set(bs.A)
    assert mul(factor_sym, factor_hecke) == mul(factor_hecke, factor_sym)
    assert mul(factor_sym, factor_e) == mul(factor_e, factor_sym)
    assert mul(factor_hecke, factor_e) == mul(factor_e, factor_hecke)
    return mul(factor_sym, mul(factor_hecke, factor_e))


# -- span closure under generator actions -----------------------------------

def _generator_steps(n: int, u_val: Fraction | None = None):
    """Linear step maps on dict-vectors for all T_k, E_k actions; over Q(u)
    when u_val is None, else with u specialized to the given rational."""
    if u_val is None:
        u = RF_U
        one = RF_ONE
    else:
        u = Fraction(u_val)
        one = Fraction(1)
    um1 = u - one

    def t_step(k):
        def step(vec: dict) -> dict:
            out: dict = {}

            def bump(key, val):
                cur = out.get(key)
                nv = val if cur is None else cur + val
                if nv:
                    out[key] = nv
                else:
                    out.pop(key, None)

            for key, c in vec.items():
                (i1, j1), (i2, j2) = key[k - 1], key[k]
                swapped = key[: k - 1] + (key[k], key[k - 1]) + key[k + 1:]
                if j1 != j2:
                    bump(swapped, c)
                elif i1 == i2:
                    bump(key, c * u)
                elif i1 < i2:
                    bump(swapped, c)
                else:
                    bump(swapped, c * u)
                    bump(key, c * um1)
            return out

        return step

    def e_step(k):
        def step(vec: dict) -> dict:
            return {key: c for key, c in vec.items() if key[k - 1][1] == key[k][1]}

        return step

    return [t_step(k) for k in range(1, n)] + [e_step(k) for k in range(1, n)]


class SpechtModule:
    def __init__(self, label: SpechtLabel, n: int, basis: list[dict], exact: bool):
        self.label = label
        self.n = n
        self.basis = basis
        self.dim = len(basis)
        self.exact = exact

    def basis_vectors(self) -> list[TensorVector]:
        if not self.exact:
            raise ValueError("basis vectors only kept in exact mode")
        return [TensorVector(self.n, b) for b in self.basis]


def specht_module(
    label: SpechtLabel,
    n: int,
    exact: bool | None = None,
    rng: random.Random | None = None,
) -> SpechtModule:
    """S(label) = span closure of e_label . w_label under generator actions.

    Exact over Q(u) by default for n <= 3; for larger n the dimension is
    certified at two random rational points (third on disagreement).
    """
    label = check_label(label, n)
    if exact is None:
        exact = n <= 3
    seed = act(e_Lambda(label, n), w_Lambda(label, n))
    if not seed:
        raise ArithmeticError("zero Specht seed for %r: construction bug" % (label,))
    if exact:
        basis = span_closure([seed.terms], _generator_steps(n), max_dim=dimension(n))
        return SpechtModule(label, n, basis, exact=True)
    rng = rng or random.Random(0)

    def dim_at(q: Fraction) -> int | None:
        try:
            sv = {k: c.eval(q) for k, c in seed.terms.items()}
        except Exception:
            return None
        sv = {k: c for k, c in sv.items() if c}
        if not sv:
            return None
        b = span_closure([sv], _generator_steps(n, q), max_dim=dimension(n))
        return len(b)

    dims = []
    while len(dims) < 2:
        q = Fraction(rng.randint(2, 10**6), rng.randint(1, 97))
        d = dim_at(q)
        if d is not None:
            dims.append(d)
    if dims[0] != dims[1]:
        while True:
            q = Fraction(rng.randint(2, 10**6), rng.randint(1, 97))
            d = dim_at(q)
            if d is not None:
                dims.append(d)
                break
    return SpechtModule(label, n, [None] * max(dims), exact=False)


def classification_report(n: int, rng: random.Random | None = None) -> dict:
    """All labels, their Specht dimensions, and the square-sum check."""
    labels = enumerate_labels(n)
    dims = []
    for label in labels:
        dims.append(specht_module(label, n, rng=rng).dim)
    fingerprints = [
        (
            tuple(sum(l) for l, m, _ in label for _ in range(m)),
            tuple(l for l, _, _ in label),
            tuple(mu for _, _, mu in label),
        )
        for label in labels
    ]
    distinct = len(set(fingerprints)) == len(fingerprints)
    sum_squares = sum(d * d for d in dims)
    return {
        "n": n,
        "labels": [
            {"lambda": [list(l) for l, _, _ in lab],
             "m": [m for _, m, _ in lab],
             "mu": [list(mu) for _, _, mu in lab]}
            for lab in labels
        ],
        "dims": dims,
        "sumSquares": sum_squares,
        "dimAlgebra": dimension(n),
        "equal": sum_squares == dimension(n),
        "distinctFingerprints": distinct,
    }


# ---------------------------------------------------------------------------
# the tensor-space bilinear form
# ---------------------------------------------------------------------------

def _form_weight_exponent(key: TensorKey) -> int:
    """Stable-sort the factors by upper index; within each constant-upper
    group the weight exponent is the inversion count of the lower indices
    (the length of the minimal coset representative sorting them)."""
    groups: dict[int, list[int]] = {}
    for lo, up in key:
        groups.setdefault(up, []).append(lo)
    total = 0
    for lowers in groups.values():
        total += sum(
            1
            for a in range(len(lowers))
            for b in range(a + 1, len(lowers))
            if lowers[a] > lowers[b]
        )
    return total


def tensor_form(v: TensorVector, w: TensorVector) -> RatFunc:
    """Diagonal invariant form on the tensor space: pure tensors pair to
    zero unless their keys agree, and then to u^(sorting length)."""
    if v.n != w.n:
        raise ValueError("tensor form needs equal sizes")
    out = RF_ZERO
    for key, c in v.terms.items():
        d = w.terms.get(key)
        if d:
            out = out + c * d * RF_U ** _form_weight_exponent(key)
    return out


def e_action_check(label: SpechtLabel, b: SetPartition, n: int) -> bool:
    """Check E_B w_label = w_label if B is below A_label, else 0."""
    bs = BlockStructure(label, n)
    w = w_Lambda(label, n)
    got = act(e_set(b), w)
    expected = w if sp_leq(b, bs.A) else TensorVector(n)
    return got == expected


# ---------------------------------------------------------------------------
# dominance filter (the classical Hecke fact exercised through N)
# ---------------------------------------------------------------------------

def dominance_filter_holds(n: int) -> bool:
    """On the constant-upper submodule N: c_lambda(u) T_w x_mu acts as zero
    for every w unless mu is dominated by lambda, and acts nonzero for
    mu = lambda."""
    from .combinatorics import all_permutations, partitions_of

    probe = TensorVector.pure(tuple((i, 1) for i in range(1, n + 1)))
    for lam in partitions_of(n):
        c_u = gyoja_element(lam, n)["c_u"]
        for mu in partitions_of(n):
            x_mu = gyoja_element(mu, n)["x"]
            hit = False
            for w in all_permutations(n):
                tw = AlgebraElement.basis(SetPartition.bottom(n), w)
                el = mul(c_u, mul(tw, x_mu))
                if act(el, probe):
                    hit = True
                    break
            if hit and not dominance_leq(mu, lam):
                return False
            if mu == lam and not hit:
                return False
    return True
