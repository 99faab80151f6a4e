"""Permutations, integer partitions, the set-partition lattice and labels.

Conventions used throughout the engine:

* permutations are stored in one-line notation, 1-based, and compose as
  functions: (v*w)(i) = v(w(i));
* set partitions are canonical: blocks sorted ascending internally and
  ordered by their minima, so they are usable as dict keys;
* the total order on integer partitions compares sizes first, then the
  partial-sum sequences lexicographically.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class SizeMismatchError(ValueError):
    pass


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------

class Permutation:
    """A permutation of {1..n} in one-line notation."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError("not a bijection of {1..%d}: %r" % (len(images), images))
        self.images = images

    @property
    def n(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(range(1, n + 1))

    @staticmethod
    def transposition(i: int, n: int) -> "Permutation":
        """The adjacent transposition s_i = (i, i+1)."""
        if not 1 <= i <= n - 1:
            raise ValueError("s_%d undefined for n=%d" % (i, n))
        im = list(range(1, n + 1))
        im[i - 1], im[i] = im[i], im[i - 1]
        return Permutation(im)

    @staticmethod
    def from_word(word: Iterable[int], n: int) -> "Permutation":
        w = Permutation.identity(n)
        for i in word:
            w = w * Permutation.transposition(i, n)
        return w

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise SizeMismatchError("composing permutations of different sizes")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def length(self) -> int:
        """Coxeter length = inversion count."""
        im = self.images
        return sum(
            1
            for a in range(len(im))
            for b in range(a + 1, len(im))
            if im[a] > im[b]
        )

    def reduced_word(self) -> tuple[int, ...]:
        """Lexicographically smallest reduced word, by greedy left-descent
        elimination: repeatedly strip the smallest i with w^{-1}(i) > w^{-1}(i+1).
        """
        word = []
        im = list(self.images)
        pos = [0] * self.n  # pos[v-1] = index of value v
        for idx, v in enumerate(im):
            pos[v - 1] = idx
        remaining = self.length()
        while remaining:
            for i in range(1, self.n):
                if pos[i - 1] > pos[i]:  # left descent: i appears after i+1
                    word.append(i)
                    a, b = pos[i - 1], pos[i]
                    im[a], im[b] = im[b], im[a]
                    pos[i - 1], pos[i] = b, a
                    remaining -= 1
                    break
        return tuple(word)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other: "Permutation"):
        return self.images < other.images

    def __repr__(self):
        return "Permutation(%r)" % (list(self.images),)


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Permutation, ...]:
    return tuple(
        Permutation(p) for p in itertools.permutations(range(1, n + 1))
    )


# ---------------------------------------------------------------------------
# integer partitions: dominance and the total order
# ---------------------------------------------------------------------------

IntPartition = tuple[int, ...]


def check_partition(parts: Sequence[int]) -> IntPartition:
    parts = tuple(parts)
    if any(p < 1 for p in parts) or any(
        parts[i] < parts[i + 1] for i in range(len(parts) - 1)
    ):
        raise ValueError("not a partition: %r" % (parts,))
    return parts


def partitions_of(n: int) -> list[IntPartition]:
    """All partitions of n, each weakly decreasing."""
    if n == 0:
        return [()]
    out = []

    def rec(rest, maxpart, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rest, maxpart), 0, -1):
            rec(rest - p, p, acc + [p])

    rec(n, n, [])
    return out


def conjugate_partition(lam: IntPartition) -> IntPartition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= c) for c in range(1, lam[0] + 1))


def _partial_sums(lam: IntPartition, upto: int) -> list[int]:
    sums, acc = [], 0
    for i in range(upto):
        acc += lam[i] if i < len(lam) else 0
        sums.append(acc)
    return sums


def dominance_leq(lam: IntPartition, mu: IntPartition) -> bool:
    """lam <= mu in dominance: every partial sum of lam is <= that of mu."""
    if sum(lam) != sum(mu):
        raise SizeMismatchError("dominance needs |lam| = |mu|")
    k = max(len(lam), len(mu))
    return all(
        a <= b for a, b in zip(_partial_sums(lam, k), _partial_sums(mu, k))
    )


def total_lt(lam: IntPartition, mu: IntPartition) -> bool:
    """Strict total order refining dominance: compare |.| first, then the
    partial-sum sequences lexicographically (first difference decides)."""
    if sum(lam) != sum(mu):
        return sum(lam) < sum(mu)
    k = max(len(lam), len(mu))
    return _partial_sums(lam, k) < _partial_sums(mu, k)


def total_sort_key(lam: IntPartition):
    return (sum(lam), _partial_sums(lam, max(len(lam), 1)) if lam else [])


# ---------------------------------------------------------------------------
# set partitions
# ---------------------------------------------------------------------------

class SetPartition:
    """A set partition of {1..n}, canonically ordered."""

    __slots__ = ("n", "blocks")

    def __init__(self, blocks: Iterable[Iterable[int]], n: int):
        blks = sorted(
            (tuple(sorted(b)) for b in blocks), key=lambda b: b[0]
        )
        seen = [x for b in blks for x in b]
        if sorted(seen) != list(range(1, n + 1)):
            raise ValueError("blocks %r do not partition {1..%d}" % (blks, n))
        self.n = n
        self.blocks = tuple(blks)

    @staticmethod
    def bottom(n: int) -> "SetPartition":
        return SetPartition([[i] for i in range(1, n + 1)], n)

    @staticmethod
    def top(n: int) -> "SetPartition":
        return SetPartition([range(1, n + 1)], n)

    def block_of(self, i: int) -> tuple[int, ...]:
        for b in self.blocks:
            if i in b:
                return b
        raise IndexError(i)

    def block_index(self, i: int) -> int:
        for k, b in enumerate(self.blocks):
            if i in b:
                return k
        raise IndexError(i)

    def __eq__(self, other):
        return (
            isinstance(other, SetPartition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __lt__(self, other: "SetPartition"):
        return self.blocks < other.blocks

    def __repr__(self):
        return "SetPartition(%r, n=%d)" % ([list(b) for b in self.blocks], self.n)

    def to_json(self):
        return [list(b) for b in self.blocks]


def sp_closure(pairs: Iterable[tuple[int, int]], n: int) -> SetPartition:
    """The set partition <R> generated by connecting i ~ j for (i,j) in R."""
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in pairs:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError("pair (%d, %d) out of range for n=%d" % (i, j, n))
        parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for x in range(1, n + 1):
        groups.setdefault(find(x), []).append(x)
    return SetPartition(groups.values(), n)


def sp_join(a: SetPartition, b: SetPartition) -> SetPartition:
    """Lattice join: the smallest partition refined by both a and b."""
    if a.n != b.n:
        raise SizeMismatchError("join of partitions of different ground sets")
    pairs = [
        (blk[0], x) for blk in a.blocks + b.blocks for x in blk[1:]
    ]
    return sp_closure(pairs, a.n)


def sp_leq(a: SetPartition, b: SetPartition) -> bool:
    """Refinement order: every block of a is contained in a block of b."""
    if a.n != b.n:
        raise SizeMismatchError("comparing partitions of different ground sets")
    return all(set(blk) <= set(b.block_of(blk[0])) for blk in a.blocks)


def sp_apply(w: Permutation, a: SetPartition) -> SetPartition:
    """The relabeled partition wA = {w(I_1), ..., w(I_k)}."""
    if w.n != a.n:
        raise SizeMismatchError("permutation and partition sizes differ")
    return SetPartition([[w(x) for x in blk] for blk in a.blocks], a.n)


@lru_cache(maxsize=None)
def sp_enumerate(n: int) -> tuple[SetPartition, ...]:
    """All B_n set partitions of {1..n}, in a deterministic order."""
    if n == 0:
        return (SetPartition([], 0),)
    out: list[list[list[int]]] = [[[1]]]
    for x in range(2, n + 1):
        nxt = []
        for part in out:
            for k in range(len(part)):
                nxt.append([b + [x] if i == k else list(b) for i, b in enumerate(part)])
            nxt.append([list(b) for b in part] + [[x]])
        out = nxt
    sps = [SetPartition(p, n) for p in out]
    return tuple(sorted(sps, key=lambda s: s.blocks))


@lru_cache(maxsize=None)
def _interval(a: SetPartition, b: SetPartition) -> tuple[SetPartition, ...]:
    return tuple(c for c in sp_enumerate(a.n) if sp_leq(a, c) and sp_leq(c, b))


@lru_cache(maxsize=None)
def sp_moebius(a: SetPartition, b: SetPartition) -> int:
    """Moebius function of the partition lattice, by the defining recursion."""
    if not sp_leq(a, b):
        raise ValueError("moebius undefined: %r is not below %r" % (a, b))
    if a == b:
        return 1
    return -sum(sp_moebius(a, c) for c in _interval(a, b) if c != b)


def bell_number(n: int) -> int:
    return len(sp_enumerate(n))


# ---------------------------------------------------------------------------
# tableaux
# ---------------------------------------------------------------------------

def _young_cells(lam: IntPartition) -> list[tuple[int, int]]:
    return [(r, c) for r, row in enumerate(lam) for c in range(row)]


def _row_filling(lam: IntPartition) -> dict[tuple[int, int], int]:
    fill, k = {}, 1
    for r, row in enumerate(lam):
        for c in range(row):
            fill[(r, c)] = k
            k += 1
    return fill


def _col_filling(lam: IntPartition) -> dict[tuple[int, int], int]:
    fill, k = {}, 1
    for c in range(lam[0] if lam else 0):
        for r in range(len(lam)):
            if lam[r] > c:
                fill[(r, c)] = k
                k += 1
    return fill


def _young_subgroup(sets: list[list[int]], n: int) -> list[Permutation]:
    """All permutations preserving each listed set pointwise as a set."""
    perms = [Permutation.identity(n)]
    out = []
    local = [list(itertools.permutations(s)) for s in sets]
    for choice in itertools.product(*local):
        im = list(range(1, n + 1))
        for s, perm in zip(sets, choice):
            for src, dst in zip(s, perm):
                im[src - 1] = dst
        out.append(Permutation(im))
    return out or perms


class TableauData:
    """Row/column stabilizers of t^lam and the permutation sending it to t_lam."""

    def __init__(self, shape: IntPartition):
        shape = check_partition(shape)
        n = sum(shape)
        self.shape = shape
        self.n = n
        row_fill = _row_filling(shape)
        col_fill = _col_filling(shape)
        rows = [
            [row_fill[(r, c)] for c in range(shape[r])] for r in range(len(shape))
        ]
        cols = [
            [row_fill[(r, c)] for r in range(len(shape)) if shape[r] > c]
            for c in range(shape[0] if shape else 0)
        ]
        self.row_sets = rows
        self.col_sets = cols
        self.row_stabilizer = _young_subgroup(rows, n)
        self.col_stabilizer = _young_subgroup(cols, n)
        # w_lam t^lam = t_lam, solved cellwise
        im = [0] * n
        for cell, v in row_fill.items():
            im[v - 1] = col_fill[cell]
        self.w_lambda = Permutation(im)


@lru_cache(maxsize=None)
def tableau_data(shape: IntPartition) -> TableauData:
    return TableauData(shape)


# ---------------------------------------------------------------------------
# the label set L_n for the simple modules
# ---------------------------------------------------------------------------

SpechtLabel = tuple[tuple[IntPartition, int, IntPartition], ...]


def check_label(label: SpechtLabel, n: int) -> SpechtLabel:
    label = tuple((check_partition(l), m, check_partition(mu)) for l, m, mu in label)
    if sum(m * sum(l) for l, m, _ in label) != n:
        raise ValueError("label %r has wrong total size for n=%d" % (label, n))
    for l, m, mu in label:
        if sum(mu) != m:
            raise ValueError("mu %r is not a partition of m=%d" % (mu, m))
    for s in range(len(label) - 1):
        if not total_lt(label[s][0], label[s + 1][0]):
            raise ValueError("lambda sequence of %r not strictly increasing" % (label,))
    return label


def _label_sort_key(label: SpechtLabel):
    return tuple(
        (total_sort_key(l), m, total_sort_key(mu)) for l, m, mu in label
    )


def enumerate_labels(n: int) -> list[SpechtLabel]:
    """All of L_n: sequences (lambda^s, m_s, mu^s) with the lambda's strictly
    increasing in the total order and sum m_s |lambda^s| = n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    cands = [
        lam for size in range(1, n + 1) for lam in partitions_of(size)
    ]
    cands.sort(key=total_sort_key)
    out: list[SpechtLabel] = []

    def rec(start: int, rest: int, acc: list):
        if rest == 0:
            out.append(tuple(acc))
            return
        for ci in range(start, len(cands)):
            lam = cands[ci]
            sz = sum(lam)
            if sz > rest:
                continue
            for m in range(1, rest // sz + 1):
                for mu in partitions_of(m):
                    acc.append((lam, m, mu))
                    rec(ci + 1, rest - m * sz, acc)
                    acc.pop()

    rec(0, n, [])
    out.sort(key=_label_sort_key)
    return out
