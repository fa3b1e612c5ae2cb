"""Exact linear algebra over finite fields and exhaustive weight computations.

Minimum weights come from one of two exact searches:

* message enumeration over all ``q**k`` codewords, bit-packed with popcount
  in characteristic 2;
* support search over column subsets of the parity-check matrix: a weight-w
  codeword exists iff some w columns are linearly dependent, and the first
  weight at which that happens is the minimum distance.

``min_weight(method="auto")`` runs the support search level by level while it
is cheaper than the remaining enumeration and switches over otherwise.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from .gf import Field

ENUMERATION_BUDGET = 1 << 27
COMBINATION_BUDGET = 1 << 31

_INNER_TABLE = 1 << 16
_COMBO_CHUNK = 1 << 14


class BudgetExceeded(RuntimeError):
    """Neither enumeration nor support search fits the configured budgets."""


def matmul(f: Field, a, b) -> np.ndarray:
    """Matrix product over ``f``."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if f.m == 1:
        # entries < p, so p * p * inner fits in int64 for every field we build
        return (a @ b) % f.p
    out = np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
    for j in range(a.shape[-1]):
        out = f.add(out, f.mul(a[..., j, None], b[j]))
    return out


def rref(f: Field, mat) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row-echelon form of ``mat`` over ``f``.

    Returns the reduced matrix (same shape, zero rows last), its rank and
    the pivot columns.
    """
    R = np.array(mat, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        piv = int(R[r, c])
        if piv != 1:
            R[r] = f.mul(R[r], f.inv(piv))
        col = R[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            R[hit] = f.sub(R[hit], f.mul(col[hit, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, r, pivots


def rank(f: Field, mat) -> int:
    return rref(f, mat)[1]


def batched_rank(f: Field, M: np.ndarray) -> np.ndarray:
    """Ranks of a stack of matrices, shape ``(B, rows, cols)``."""
    M = np.array(M, dtype=np.int64, copy=True)
    B, R, C = M.shape
    ranks = np.zeros(B, dtype=np.int64)
    used = np.zeros((B, R), dtype=bool)
    bidx = np.arange(B)
    for j in range(C):
        col = M[:, :, j]
        cand = (col != 0) & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = cand.argmax(axis=1)
        pivval = np.where(has, col[bidx, piv], 1)
        pivrow = f.mul(M[bidx, piv, :], f.inv(pivval)[:, None])
        factor = col.copy()
        factor[bidx, piv] = 0
        factor[~has] = 0
        M = f.sub(M, f.mul(factor[:, :, None], pivrow[:, None, :]))
        M[bidx[has], piv[has], :] = pivrow[has]
        used[bidx[has], piv[has]] = True
        ranks += has
    return ranks


def null_vector(f: Field, mat) -> np.ndarray:
    """A nonzero kernel vector of ``mat`` (columns), first nonzero entry 1."""
    R, r, piv = rref(f, mat)
    cols = R.shape[1]
    free = [c for c in range(cols) if c not in piv]
    if not free:
        raise ValueError("matrix has full column rank")
    fc = free[0]
    x = np.zeros(cols, dtype=np.int64)
    x[fc] = 1
    for i, pc in enumerate(piv):
        x[pc] = f.neg(int(R[i, fc]))
    lead = int(x[np.flatnonzero(x)[0]])
    return f.mul(x, f.inv(lead))


@dataclass
class WeightProfile:
    counts: dict[int, int]
    exact: bool = True

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def min_nonzero(self) -> int | None:
        ws = [w for w, c in self.counts.items() if w and c]
        return min(ws) if ws else None

    @property
    def nonzero_weights(self) -> list[int]:
        return sorted(w for w, c in self.counts.items() if w and c)


@dataclass
class MinWeight:
    """Outcome of :func:`min_weight`.

    ``d`` is None when a cap was given and every nonzero codeword is
    heavier; then ``lower_bound`` is ``cap + 1``.
    """

    d: int | None
    witness: np.ndarray | None
    method: str
    lower_bound: int = dc_field(default=0)

    def __post_init__(self):
        if self.d is not None:
            self.lower_bound = self.d


class LinearCode:
    """A linear code given by a generator matrix, stored in RREF."""

    def __init__(self, f: Field, generator, n: int | None = None):
        G = np.asarray(generator, dtype=np.int64)
        if G.size == 0:
            if n is None:
                n = G.shape[1] if G.ndim == 2 else 0
            G = np.zeros((0, n), dtype=np.int64)
        if G.ndim == 1:
            G = G[None, :]
        R, r, piv = rref(f, G)
        self.field = f
        self.n = G.shape[1]
        self.k = r
        self.generator = R[:r]
        self.generator.setflags(write=False)
        self.pivots = tuple(piv)

    def __repr__(self) -> str:
        return f"[{self.n},{self.k}] code over {self.field}"

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinearCode) and self.field == other.field
                and self.n == other.n and np.array_equal(self.generator, other.generator))

    __hash__ = None

    @property
    def q(self) -> int:
        return self.field.order

    @cached_property
    def parity_check(self) -> np.ndarray:
        f, n, k = self.field, self.n, self.k
        free = [c for c in range(n) if c not in self.pivots]
        H = np.zeros((n - k, n), dtype=np.int64)
        if n - k:
            H[:, free] = np.eye(n - k, dtype=np.int64)
            if k:
                H[:, list(self.pivots)] = f.neg(self.generator[:, free].T)
        return H

    def dual(self) -> "LinearCode":
        return LinearCode(self.field, self.parity_check, n=self.n)

    def encode(self, messages) -> np.ndarray:
        return matmul(self.field, messages, self.generator)

    def contains(self, words):
        w = np.asarray(words, dtype=np.int64)
        s = matmul(self.field, np.atleast_2d(w), self.parity_check.T)
        ok = ~np.any(s != 0, axis=1)
        return bool(ok[0]) if w.ndim == 1 else ok

    def contains_code(self, other: "LinearCode") -> bool:
        return other.k == 0 or bool(np.all(self.contains(other.generator)))

    def codewords(self) -> np.ndarray:
        """All codewords in message-lexicographic order (small codes only)."""
        if self.k == 0:
            return np.zeros((1, self.n), dtype=np.int64)
        return _span_table(self.field, self.generator)

    def min_weight(self, **kw) -> MinWeight:
        return min_weight(self, **kw)

    def weight_distribution(self, **kw) -> WeightProfile:
        return weight_distribution(self, **kw)


def dual(c: LinearCode) -> LinearCode:
    return c.dual()


def shift(words, s: int = 1) -> np.ndarray:
    """Cyclic right shift of the last axis by ``s`` positions."""
    return np.roll(np.asarray(words), s, axis=-1)


def weight(words) -> np.ndarray | int:
    w = np.count_nonzero(np.asarray(words), axis=-1)
    return int(w) if np.ndim(w) == 0 else w


# -- enumeration --------------------------------------------------------------


def _span_table(f: Field, rows: np.ndarray) -> np.ndarray:
    """All combinations of ``rows``; the first row is the most significant digit."""
    n = rows.shape[1]
    T = np.zeros((1, n), dtype=np.int64)
    for row in rows[::-1]:
        T = np.concatenate([f.add(T, f.mul(c, row)[None, :]) for c in range(f.order)])
    return T


def _pack_bits(words: np.ndarray) -> np.ndarray:
    """Pack 0/1 rows into uint64 words, shape ``(N, ceil(n/64))``."""
    N, n = words.shape
    W = max(1, (n + 63) // 64)
    out = np.zeros((N, W), dtype=np.uint64)
    for j in range(n):
        out[:, j // 64] |= words[:, j].astype(np.uint64) << np.uint64(j % 64)
    return out


class _Enumerator:
    """Codewords in message-lexicographic order, in blocks of ``inner`` rows."""

    def __init__(self, code: LinearCode):
        self.code = code
        f, k = code.field, code.k
        q = f.order
        k_lo = 0
        while k_lo < k and q ** (k_lo + 1) <= _INNER_TABLE:
            k_lo += 1
        self.k_hi = k - k_lo
        G = code.generator
        self.binary = f.order == 2
        inner = _span_table(f, G[self.k_hi:])
        outer = _span_table(f, G[:self.k_hi])
        if self.binary:
            inner, outer = _pack_bits(inner), _pack_bits(outer)
        self.inner, self.outer = inner, outer
        self.blocks = len(outer)

    def block(self, o: int) -> np.ndarray:
        if self.binary:
            return self.inner ^ self.outer[o]
        return self.code.field.add(self.inner, self.outer[o])

    def weights(self, o: int) -> np.ndarray:
        b = self.block(o)
        if self.binary:
            return np.bitwise_count(b).sum(axis=1, dtype=np.int64)
        return np.count_nonzero(b, axis=1)

    def map(self, fn, threads: int = 1):
        """Apply ``fn(o, start)`` to every block, results in block order."""
        n_in = len(self.inner)
        jobs = range(self.blocks)
        if threads > 1 and self.blocks > 1:
            with ThreadPoolExecutor(threads) as ex:
                return list(ex.map(lambda o: fn(o, o * n_in), jobs))
        return [fn(o, o * n_in) for o in jobs]


def _message(index: int, q: int, k: int) -> np.ndarray:
    digits = []
    for _ in range(k):
        index, d = divmod(index, q)
        digits.append(d)
    return np.array(digits[::-1], dtype=np.int64)


def _check_enum_budget(code: LinearCode, budget: int) -> None:
    if code.q ** code.k > budget:
        raise BudgetExceeded(f"{code}: {code.q}^{code.k} codewords exceed the budget {budget}")


def weight_distribution(code: LinearCode, budget: int = ENUMERATION_BUDGET,
                        threads: int = 1) -> WeightProfile:
    """Exact weight distribution by full enumeration."""
    if code.k == 0:
        return WeightProfile({0: 1})
    _check_enum_budget(code, budget)
    en = _Enumerator(code)
    parts = en.map(lambda o, s: np.bincount(en.weights(o), minlength=code.n + 1), threads)
    counts = np.sum(parts, axis=0)
    return WeightProfile({w: int(c) for w, c in enumerate(counts) if c})


def _enumerate_min(code: LinearCode, threads: int) -> MinWeight:
    en = _Enumerator(code)

    def best(o, start):
        w = en.weights(o)
        if start == 0:
            w = w.copy()
            w[0] = code.n + 1
        i = int(np.argmin(w))
        return int(w[i]), start + i

    # (weight, message index) minimum: the first lightest message wins
    d, idx = min(en.map(best, threads))
    witness = code.encode(_message(idx, code.q, code.k)[None, :])[0]
    return MinWeight(d, witness, "enumerate")


# -- support search -----------------------------------------------------------


def _combination_chunks(n: int, w: int, must: int | None = None):
    pool = range(n) if must is None else [i for i in range(n) if i != must]
    size = w if must is None else w - 1
    it = itertools.combinations(pool, size)
    while True:
        block = list(itertools.islice(it, _COMBO_CHUNK))
        if not block:
            return
        arr = np.array(block, dtype=np.intp).reshape(len(block), size)
        if must is not None:
            arr = np.sort(np.concatenate([np.full((len(arr), 1), must, dtype=np.intp), arr], axis=1),
                          axis=1)
        yield arr


def _first_dependent(f: Field, H: np.ndarray, w: int) -> tuple[int, ...] | None:
    """First (lexicographic) set of ``w`` dependent columns of ``H``."""
    n = H.shape[1]
    if f.order == 2:
        cols = _pack_bits(H.T) if H.shape[0] else np.zeros((n, 1), dtype=np.uint64)
        for combos in _combination_chunks(n, w):
            acc = np.bitwise_xor.reduce(cols[combos], axis=1)
            hit = np.flatnonzero(~np.any(acc != 0, axis=1))
            if hit.size:
                return tuple(int(i) for i in combos[hit[0]])
        return None
    for combos in _combination_chunks(n, w):
        M = H[:, combos].transpose(1, 0, 2)
        hit = np.flatnonzero(batched_rank(f, M) < w)
        if hit.size:
            return tuple(int(i) for i in combos[hit[0]])
    return None


def _witness_on(code: LinearCode, support: tuple[int, ...]) -> np.ndarray:
    H = code.parity_check
    coeffs = null_vector(code.field, H[:, list(support)]) if H.shape[0] else np.ones(len(support),
                                                                                    dtype=np.int64)
    x = np.zeros(code.n, dtype=np.int64)
    x[list(support)] = coeffs
    return x


def min_weight(code: LinearCode, cap: int | None = None, method: str = "auto",
               budget: int = ENUMERATION_BUDGET, combination_budget: int = COMBINATION_BUDGET,
               threads: int = 1) -> MinWeight:
    """Exact minimum nonzero weight of ``code`` with a witness codeword.

    With ``cap`` the search may stop early and report ``d=None`` meaning
    "heavier than cap".  ``method`` is ``"auto"``, ``"enumerate"`` or
    ``"support"``.  Enumeration witnesses are the codeword of the
    lexicographically smallest lightest message; support-search witnesses
    live on the lexicographically first dependent column set.
    """
    if code.k == 0:
        raise ValueError("the zero code has no nonzero codewords")
    if method not in ("auto", "enumerate", "support"):
        raise ValueError(f"unknown method {method!r}")
    n, k, q = code.n, code.k, code.q
    enum_size = q**k
    enum_ok = enum_size <= budget and method != "support"

    def capped(res: MinWeight) -> MinWeight:
        if cap is not None and res.d is not None and res.d > cap:
            return MinWeight(None, None, res.method, lower_bound=cap + 1)
        return res

    if method == "enumerate":
        _check_enum_budget(code, budget)
        return capped(_enumerate_min(code, threads))

    limit = n - k + 1 if cap is None else min(cap, n - k + 1)
    spent = 0
    w = 1
    while w <= limit:
        level = math.comb(n, w)
        if spent + level > combination_budget:
            break
        if method == "auto" and enum_ok and (spent + level) * w > enum_size:
            break
        support = _first_dependent(code.field, code.parity_check, w)
        spent += level
        if support is not None:
            return MinWeight(w, _witness_on(code, support), "support")
        w += 1
    else:
        return MinWeight(None, None, "support", lower_bound=limit + 1)
    if enum_ok:
        return capped(_enumerate_min(code, threads))
    raise BudgetExceeded(f"{code}: support search passed {combination_budget} subsets at weight {w} "
                         f"and {q}^{k} codewords exceed the enumeration budget")


def coordinate_min_weights(code: LinearCode, budget: int = ENUMERATION_BUDGET,
                           combination_budget: int = COMBINATION_BUDGET
                           ) -> tuple[np.ndarray, np.ndarray]:
    """For each coordinate, the least weight of a codeword nonzero there (0 if none).

    Also returns one such codeword per coordinate (zero row if none).
    """
    n, f = code.n, code.field
    out = np.zeros(n, dtype=np.int64)
    wit = np.zeros((n, n), dtype=np.int64)
    if code.k == 0:
        return out, wit
    if code.q ** code.k <= budget:
        en = _Enumerator(code)
        big = n + 1
        best = np.full(n, big, dtype=np.int64)
        where = np.zeros(n, dtype=np.int64)
        n_in = len(en.inner)
        for o in range(en.blocks):
            blk = en.block(o)
            if en.binary:
                mask = np.zeros((len(blk), n), dtype=bool)
                for j in range(n):
                    mask[:, j] = (blk[:, j // 64] >> np.uint64(j % 64)) & np.uint64(1)
            else:
                mask = blk != 0
            cand = np.where(mask, mask.sum(axis=1)[:, None], big)
            arg = cand.argmin(axis=0)
            val = cand[arg, np.arange(n)]
            better = val < best
            best[better] = val[better]
            where[better] = arg[better] + o * n_in
        for i in range(n):
            if best[i] < big:
                out[i] = best[i]
                wit[i] = code.encode(_message(int(where[i]), code.q, code.k)[None, :])[0]
        return out, wit
    H = code.parity_check
    G = code.generator
    spent = 0
    for i in range(n):
        if not np.any(G[:, i]):
            continue
        for w in range(1, n - code.k + 2):
            spent += math.comb(n - 1, w - 1)
            if spent > combination_budget:
                raise BudgetExceeded(f"{code}: per-coordinate search over budget")
            hit = None
            for combos in _combination_chunks(n, w, must=i):
                full = batched_rank(f, H[:, combos].transpose(1, 0, 2))
                rest = combos[combos != i].reshape(len(combos), w - 1)
                part = batched_rank(f, H[:, rest].transpose(1, 0, 2)) if w > 1 else np.zeros(len(combos), dtype=np.int64)
                ok = np.flatnonzero(full == part)
                if len(ok):
                    hit = [int(x) for x in rest[ok[0]]]
                    break
            if hit is not None:
                out[i] = w
                wit[i] = _witness_through(code, hit, i)
                break
    return out, wit


def _witness_through(code: LinearCode, others: list[int], i: int) -> np.ndarray:
    # column i depends on the others, so it is a free column when placed last
    f = code.field
    cols = others + [i]
    R, r, piv = rref(f, code.parity_check[:, cols])
    x = np.zeros(len(cols), dtype=np.int64)
    x[-1] = 1
    for row, pc in enumerate(piv):
        x[pc] = f.neg(int(R[row, -1]))
    out = np.zeros(code.n, dtype=np.int64)
    out[cols] = x
    return out


def same_row_space(a: LinearCode, b: LinearCode) -> bool:
    return a == b
