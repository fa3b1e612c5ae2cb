"""Locally recoverable cyclic codes: constructions, exact locality and
locality bounds derived from irreducible cyclic codes.

Conventions: a code of length ``n`` is split into ``nu = n/s`` blocks of size
``s = r + 1``; block ``j`` holds positions ``j, j + nu, j + 2 nu, ...``.
When the zeros contain the coset ``{i : i = l (mod s)}`` the dual contains
the weight-``s`` vector with ``beta**(i*l)`` at position ``i*nu``, where
``beta = alpha**nu`` has order ``s``, together with its cyclic shifts.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cyclic import (CyclicCode, InternalCheckError, code_from_zeros, complete_defining_set)
from .gf import Field, field_create, field_of_order, multiplicative_order, prime_power, root_of_unity, subfield_map
from .linalg import (COMBINATION_BUDGET, BudgetExceeded, ENUMERATION_BUDGET, LinearCode, WeightProfile,
                     coordinate_min_weights, matmul, min_weight, rank, weight, weight_distribution)


@dataclass(frozen=True)
class LrcParams:
    n: int
    k: int
    r: int

    def __post_init__(self):
        if min(self.n, self.k, self.r) < 1:
            raise ValueError("n, k and r must be positive")
        if self.n % (self.r + 1):
            raise ValueError("(r+1) must divide n")
        if self.k % self.r:
            raise ValueError("r must divide k")
        if self.mu > self.nu:
            raise ValueError("k/r must not exceed n/(r+1)")

    @property
    def nu(self) -> int:
        return self.n // (self.r + 1)

    @property
    def mu(self) -> int:
        return self.k // self.r


def _alpha_powers(f: Field, alpha: int, exps) -> np.ndarray:
    exps = np.asarray(exps, dtype=np.int64)
    return f.exp[(int(f.log[alpha]) * exps) % f.q1]


def _single_field(q: int, n: int) -> Field:
    f = field_of_order(q)
    if f.q1 % n:
        raise ValueError(f"n={n} must divide q-1={f.q1}")
    return f


def rs_like_construct(q: int, n: int, k: int, r: int) -> tuple[LinearCode, CyclicCode]:
    """Evaluation code of the low-degree polynomial family and its cyclic twin.

    The evaluation code spans the monomials ``x**j``, ``j < mu(r+1) - 1`` and
    ``j != r (mod r+1)``, evaluated on the ``n``-th roots of unity.  The
    cyclic code has zeros ``{1, ..., n - mu(r+1) + 1}`` plus
    ``{n - (mu - l)(r+1) + 1 : 1 <= l < mu}``.  Both row spaces are compared.
    """
    prm = LrcParams(n, k, r)
    f = _single_field(q, n)
    alpha = root_of_unity(f, n).value
    s = r + 1
    degrees = [j for j in range(prm.mu * s - 1) if j % s != r]
    ev = LinearCode(f, _alpha_powers(f, alpha, np.outer(degrees, np.arange(n))), n=n)
    zeros = set(range(1, n - prm.mu * s + 2))
    zeros |= {n - (prm.mu - l) * s + 1 for l in range(1, prm.mu)}
    cyc = code_from_zeros(q, n, sorted(zeros))
    if ev.k != k or ev != cyc.code:
        raise InternalCheckError("evaluation code and cyclic code differ")
    return ev, cyc


def optimal_zero_sets(n: int, k: int, r: int, l: int, b: int, j: int | None = None
                      ) -> tuple[frozenset[int], frozenset[int]]:
    """Locality zeros ``{i = l mod r+1}`` and distance zeros ``{j + s b}``."""
    prm = LrcParams(n, k, r)
    s = r + 1
    if not 0 <= l <= r:
        raise ValueError("l must satisfy 0 <= l <= r")
    if b < 1 or math.gcd(b, n) != 1:
        raise ValueError("b must be a positive integer coprime to n")
    j = l if j is None else j
    if j % s != l:
        raise ValueError("j must be congruent to l modulo r+1")
    loc = frozenset(range(l, n, s))
    dist = frozenset((j + t * b) % n for t in range(n - prm.mu * s + 1))
    return loc, dist


def optimal_cyclic_lrc(q: int, n: int, k: int, r: int, l: int = 0, b: int = 1,
                       j: int | None = None, verify: bool = False) -> CyclicCode:
    """Optimal (n, k, r) cyclic LRC code over GF(q), ``n | q - 1``.

    ``verify=True`` additionally brute-forces the distance and the locality.
    """
    _single_field(q, n)
    loc, dist = optimal_zero_sets(n, k, r, l, b, j)
    c = code_from_zeros(q, n, sorted(loc | dist))
    if c.k != k:
        raise InternalCheckError(f"dimension {c.k} != {k}")
    if verify:
        d = min_weight(c.code).d
        if d != singleton_like_distance(n, k, r):
            raise InternalCheckError(f"distance {d} misses the Singleton-like bound")
        rep = locality_exact(c)
        if rep.r != r:
            raise InternalCheckError(f"locality {rep.r} != {r}")
    return c


def singleton_like_distance(n: int, k: int, r: int) -> int:
    return n - k - -(-k // r) + 2


# -- exact locality -------------------------------------------------------------


@dataclass
class RecoveringSet:
    target: int
    helpers: tuple[int, ...]
    vector: np.ndarray
    field: Field

    def recover(self, word) -> int:
        """Value at ``target`` from the helper symbols of ``word``."""
        f, y = self.field, self.vector
        acc = 0
        for h in self.helpers:
            acc = f.add(acc, f.mul(int(y[h]), int(word[h])))
        return f.neg(f.div(acc, int(y[self.target])))


@dataclass
class LocalityReport:
    r: int | None
    d_dual: int | None
    recovering_sets: list[RecoveringSet]
    per_coordinate: np.ndarray | None = None
    w: int | None = None
    certificates: list[dict] = dc_field(default_factory=list)
    note: str = ""


def locality_exact(c: CyclicCode | LinearCode, budget: int = ENUMERATION_BUDGET,
                   threads: int = 1, combination_budget: int = COMBINATION_BUDGET) -> LocalityReport:
    """Exact locality: dual distance minus one.

    Cyclic codes use one dual minimum-weight word and its shifts; general
    linear codes are examined coordinate by coordinate.
    """
    code = c.code if isinstance(c, CyclicCode) else c
    f, n = code.field, code.n
    dual = code.dual()
    if dual.k == 0:
        return LocalityReport(None, None, [], note="no dual constraints; locality undefined")
    if isinstance(c, CyclicCode):
        mw = min_weight(dual, budget=budget, combination_budget=combination_budget, threads=threads)
        y = mw.witness
        j0 = int(np.flatnonzero(y)[0])
        sets = []
        for i in range(n):
            v = np.roll(y, i - j0)
            supp = tuple(int(x) for x in np.flatnonzero(v) if x != i)
            sets.append(RecoveringSet(i, supp, v, f))
        return LocalityReport(mw.d - 1, mw.d, sets, np.full(n, mw.d - 1),
                              certificates=[{"prop": "dual-distance", "parameters": {"method": mw.method}}])
    per, wit = coordinate_min_weights(dual, budget=budget, combination_budget=combination_budget)
    sets = []
    for i in range(n):
        if per[i]:
            supp = tuple(int(x) for x in np.flatnonzero(wit[i]) if x != i)
            sets.append(RecoveringSet(i, supp, wit[i], f))
    if np.any(per == 0):
        return LocalityReport(None, None, sets, per - 1,
                              note="some coordinate lies in no dual codeword; locality undefined")
    return LocalityReport(int(per.max()) - 1, int(dual_min := per.min()), sets, per - 1,
                          certificates=[{"prop": "per-coordinate", "parameters": {"min_dual": int(dual_min)}}])


# -- coset certificates -------------------------------------------------------


@dataclass
class CosetCertificate:
    """Zeros contain ``{i = l (mod block)}``; the dual holds ``vector`` and its shifts."""

    l: int
    block: int
    coset: tuple[int, ...]
    vector: np.ndarray
    field: Field
    shifts: np.ndarray

    @property
    def r_bound(self) -> int:
        return self.block - 1

    @property
    def blocks(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in np.flatnonzero(v)) for v in self.shifts]


def _base_vector(c: CyclicCode, l: int, s: int) -> np.ndarray:
    L = c.locator_field
    nu = c.n // s
    beta = L.power(c.alpha, nu)
    return L.power(beta, (l * np.arange(s)) % s)


def coset_locality_certificate(c: CyclicCode, r: int) -> CosetCertificate | None:
    """Smallest ``l`` with ``{i = l mod r+1}`` among the zeros, proving locality <= r."""
    s = r + 1
    n = c.n
    if n % s:
        raise ValueError("(r+1) must divide n")
    nu = n // s
    for l in range(s):
        if c.defining_set.contains_coset(l, s):
            break
    else:
        return None
    L = c.locator_field
    v = np.zeros(n, dtype=np.int64)
    v[::nu] = _base_vector(c, l, s)
    shifts = np.array([np.roll(v, j) for j in range(nu)])
    if c.k and np.any(matmul(L, c.generator_in_locator(), shifts.T) != 0):
        raise InternalCheckError("coset vector is not orthogonal to the code")
    cover = (shifts != 0).sum(axis=0)
    if not np.all(cover == 1):
        raise InternalCheckError("coset vector shifts do not partition the coordinates")
    return CosetCertificate(l, s, tuple(range(l, n, s)), v, L, shifts)


# -- trace subspaces ------------------------------------------------------------


@dataclass
class TraceRecoverySubspace:
    """Trace images ``T(gamma v)`` of the block vector, as a code of length ``block``."""

    l: int
    block: int
    nu: int
    beta: int
    base: np.ndarray
    code: LinearCode
    period: int
    distribution: WeightProfile | None
    min_weight: int
    w: int | None
    w_vectors: int | None

    @property
    def repetitions(self) -> int:
        return self.block // self.period

    @property
    def r_bound(self) -> int:
        return self.min_weight - 1

    def expand(self, y, shift: int = 0, n: int | None = None) -> np.ndarray:
        """Place a length-``block`` word on block ``shift`` of the full length."""
        n = self.nu * self.block if n is None else n
        out = np.zeros(n, dtype=np.int64)
        out[shift::self.nu] = y
        return out

    def recovering_sets(self, position: int = 0) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """``(message, helpers)`` for every minimum-weight word nonzero at ``position``.

        Positions are block-local; messages are coordinates in the RREF basis.
        """
        q = self.code.q
        out = []
        for u in itertools.product(range(q), repeat=self.code.k):
            word = self.code.encode(np.array(u)[None, :])[0]
            if word[position] and weight(word) == self.min_weight:
                out.append((u, tuple(int(i) for i in np.flatnonzero(word) if i != position)))
        return out


def trace_recovery_subspace(c: CyclicCode, l: int, r: int,
                            budget: int = ENUMERATION_BUDGET) -> TraceRecoverySubspace:
    """Subspace of the dual obtained by tracing multiples of the block vector.

    Every basis word, placed on each block, is checked against the code.
    ``w`` counts distinct minimum-weight supports through block position 0;
    ``w_vectors`` counts the words themselves.
    """
    s = r + 1
    n = c.n
    if n % s:
        raise ValueError("(r+1) must divide n")
    if not c.defining_set.contains_coset(l, s):
        raise ValueError(f"zeros do not contain the coset {{i = {l} mod {s}}}")
    nu = n // s
    L, S = c.locator_field, c.symbol_field
    smap = c.to_locator
    base = _base_vector(c, l, s)
    beta = L.power(c.alpha, nu)
    V = LinearCode(S, np.array([smap.trace(L.mul(g, base)) for g in smap.basis]), n=s)
    for y in V.generator:
        full = np.array([_place(y, j, nu, n) for j in range(nu)])
        if c.k and np.any(matmul(S, c.code.generator, full.T) != 0):
            raise InternalCheckError("trace word is not in the dual of the code")
    period = s // math.gcd(l, s)
    try:
        dist = weight_distribution(V, budget=budget)
    except BudgetExceeded:
        dist = None
    if dist is None:
        dmin = min_weight(V, budget=budget).d
        w = wv = None
    else:
        dmin = dist.min_nonzero
        words = V.codewords()
        sel = words[(weight(words) == dmin) & (words[:, 0] != 0)]
        wv = len(sel)
        w = len({tuple(np.flatnonzero(x)) for x in sel})
    return TraceRecoverySubspace(l, s, nu, beta, base, V, period, dist, dmin, w, wv)


def _place(y, shift: int, nu: int, n: int) -> np.ndarray:
    out = np.zeros(n, dtype=np.int64)
    out[shift::nu] = y
    return out


def _trace_vector_sets(L: Field, small: Field, beta: int, s: int, z: int) -> tuple[set, set]:
    # V over all of L versus V over the subfield of degree z (traces computed in L)
    powers = L.power(beta, np.arange(s))
    to_small = subfield_map(L, small)
    big = to_small.trace(L.mul(L.elements()[:, None], powers[None, :]))
    sub = field_create(small.p, small.m * z)
    deltas = subfield_map(L, sub).embed(sub.elements())
    x = L.mul(deltas[:, None], powers[None, :])
    acc = x
    y = x
    for _ in range(z - 1):
        y = L.power(y, small.order)
        acc = L.add(acc, y)
    low = to_small.pullback(acc)
    return {tuple(v) for v in big.tolist()}, {tuple(v) for v in low.tolist()}


def subfield_trace_spaces(q: int, s: int, m: int) -> tuple[set, set]:
    """Both trace spaces of a primitive ``s``-th root: over GF(q^m) and over GF(q^z).

    ``z = ord_s(q)`` must divide ``m``; the two returned vector sets coincide.
    """
    z = multiplicative_order(q, s)
    if m % z:
        raise ValueError(f"ord_{s}({q}) = {z} does not divide {m}")
    small = field_of_order(q)
    L = field_create(small.p, small.m * m)
    beta = root_of_unity(L, s).value
    return _trace_vector_sets(L, small, beta, s, z)


@dataclass
class SimplexLocality:
    z: int
    r_bound: int
    w_bound: int
    subspace: TraceRecoverySubspace
    spaces_agree: bool


def binary_simplex_locality(c: CyclicCode, z: int) -> SimplexLocality:
    """Locality bound for binary codes whose zeros contain ``{i = 1 mod 2^z - 1}``.

    The trace subspace is the ``[2^z - 1, z]`` simplex code, so the locality
    is at most ``2^(z-1) - 1`` with at least ``2^(z-1)`` recovering sets.
    """
    s = 2**z - 1
    if c.q != 2:
        raise ValueError("binary codes only")
    if c.n % s:
        raise ValueError(f"2^z - 1 = {s} must divide n = {c.n}")
    sub = trace_recovery_subspace(c, 1, s - 1)
    half = 2 ** (z - 1)
    if sub.code.k != z or sub.distribution is None or sub.distribution.nonzero_weights != [half]:
        raise InternalCheckError("trace subspace is not the simplex code")
    L = c.locator_field
    vm, vz = _trace_vector_sets(L, c.symbol_field, sub.beta, s, z)
    words = {tuple(v) for v in sub.code.codewords().tolist()}
    agree = vm == vz == words
    if not agree:
        raise InternalCheckError("trace spaces over the two fields differ")
    return SimplexLocality(z, half - 1, half, sub, agree)


def irreducible_distance_bound(s: int, m: int, q: int) -> Fraction:
    """Averaging bound on the distance of the ``[s, m]`` irreducible code."""
    if m != multiplicative_order(q, s):
        raise ValueError(f"m must equal ord_{s}({q})")
    return s * (1 - Fraction(q ** (m - 1) - 1, q**m - 1))


def strict_bound_max(bound: Fraction) -> int:
    """Largest integer strictly below ``bound``."""
    return math.ceil(bound) - 1


def irreducible_locality_bound(c: CyclicCode, s: int) -> int:
    """Largest locality admitted by the strict irreducible-code bound."""
    if c.n % s:
        raise ValueError(f"{s} must divide n = {c.n}")
    if not c.defining_set.contains_coset(1, s):
        raise ValueError(f"zeros do not contain the coset {{i = 1 mod {s}}}")
    m = multiplicative_order(c.q, s)
    return strict_bound_max(irreducible_distance_bound(s, m, c.q))


@dataclass
class TernaryRecovery:
    m: int
    N: int
    set_size: int
    count: int
    weights: tuple[int, int]
    per_coordinate: np.ndarray
    subspace: TraceRecoverySubspace


def ternary_two_weight_recovery(c: CyclicCode, t: int) -> TernaryRecovery:
    """Recovering-set count for ternary codes whose trace subspace is two-weight.

    Requires ``gcd((3^m - 1)/2, N) = 2`` with ``N = (3^m - 1)/t`` and
    ``m = ord_t(3)`` even.  Every symbol then has ``3^(m-1) - 3^(m/2-1)``
    recovering sets of size one less than the lower weight.
    """
    if c.q != 3:
        raise ValueError("ternary codes only")
    if c.n % t:
        raise ValueError(f"{t} must divide n = {c.n}")
    if not c.defining_set.contains_coset(1, t):
        raise ValueError(f"zeros do not contain the coset {{i = 1 mod {t}}}")
    m = multiplicative_order(3, t)
    if m % 2:
        raise ValueError(f"ord_{t}(3) = {m} is odd")
    N = (3**m - 1) // t
    if math.gcd((3**m - 1) // 2, N) != 2:
        raise ValueError("gcd((3^m - 1)/2, N) != 2; two-weight structure not guaranteed")
    low = Fraction(2 * (3**m - 3 ** (m // 2)), 3 * N)
    high = Fraction(2 * (3**m + 3 ** (m // 2)), 3 * N)
    count = 3 ** (m - 1) - 3 ** (m // 2 - 1)
    sub = trace_recovery_subspace(c, 1, t - 1)
    half = (3**m - 1) // 2
    expected = {0: 1, int(low): half, int(high): half}
    if low.denominator != 1 or sub.distribution is None or sub.distribution.counts != expected:
        raise InternalCheckError(f"trace subspace distribution {sub.distribution} != {expected}")
    words = sub.code.codewords()
    light = words[weight(words) == int(low)]
    per = np.count_nonzero(light, axis=0)
    if not np.all(per == count):
        raise InternalCheckError("light words do not cover each coordinate equally")
    return TernaryRecovery(m, N, int(low) - 1, count, (int(low), int(high)), per, sub)


# -- intersections of recovering sets ---------------------------------------


def _gf2_rank(rows: Sequence[Sequence[int]]) -> int:
    return rank(field_create(2), np.array(rows, dtype=np.int64)) if len(rows) else 0


def support_intersection(z: int, u_list: Sequence[Sequence[int]]) -> int:
    """Number of ``x`` in GF(2)^z with ``x . u = 1`` for every ``u`` in the list."""
    U = np.array(u_list, dtype=np.int64).reshape(-1, z) % 2
    rk = _gf2_rank(U)
    aug = np.concatenate([U, np.ones((len(U), 1), dtype=np.int64)], axis=1)
    if _gf2_rank(aug) > rk:
        return 0
    return 2 ** (z - rk)


def intersection_bound(z: int, u_list: Sequence[Sequence[int]]) -> int:
    return 2 ** (z - _gf2_rank(np.array(u_list, dtype=np.int64).reshape(-1, z) % 2))


@dataclass
class RecoveryPartition:
    nu: int
    block_size: int
    l: int
    blocks: list[tuple[int, ...]]
    witnesses: list[np.ndarray]

    @property
    def r(self) -> int:
        return self.block_size - 1

    def block_of(self, i: int) -> tuple[int, ...]:
        return self.blocks[i % self.nu]


def partitions_meet_only_at_symbol(parts: Sequence[RecoveryPartition], n: int) -> bool:
    for i in range(n):
        for a, b in itertools.combinations(parts, 2):
            if set(a.block_of(i)) & set(b.block_of(i)) != {i}:
                return False
    return True


def multiple_recovery_partitions(c: CyclicCode, divisors: Sequence[int]) -> list[RecoveryPartition]:
    """One recovery partition per ``nu`` whose block coset lies among the zeros.

    Blocks have size ``n/nu``.  Witnesses for each block are dual words over
    the symbol field supported inside it (a basis of the trace subspace).
    """
    n = c.n
    out = []
    for nu in divisors:
        if n % nu:
            raise ValueError(f"{nu} does not divide n = {n}")
        s = n // nu
        cert = coset_locality_certificate(c, s - 1)
        if cert is None:
            continue
        sub = trace_recovery_subspace(c, cert.l, s - 1)
        blocks = [tuple(range(j, n, nu)) for j in range(nu)]
        wit = [np.array([_place(y, j, nu, n) for y in sub.code.generator]) for j in range(nu)]
        out.append(RecoveryPartition(nu, s, cert.l, blocks, wit))
    nus = [p.nu for p in out]
    if len(out) > 1 and all(math.gcd(a, b) == 1 for a, b in itertools.combinations(nus, 2)):
        if not partitions_meet_only_at_symbol(out, n):
            raise InternalCheckError("coprime partitions share more than the symbol")
    return out
