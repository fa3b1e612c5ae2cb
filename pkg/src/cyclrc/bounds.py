"""Upper bounds on (n, k, r) LRC codes: Singleton-like, shortening and the
Delsarte linear program with a locality constraint on the dual distance."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

try:  # exact rationals in C; Fraction gives identical results, only slower
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction


def singleton_like(n: int, k: int, r: int) -> int:
    """Largest distance of an (n, k, r) LRC code: ``n - k - ceil(k/r) + 2``."""
    if not 1 <= r <= k <= n:
        raise ValueError("need 1 <= r <= k <= n")
    return n - k - -(-k // r) + 2


# -- k_q(n, d) ------------------------------------------------------------------


@dataclass
class KqTable:
    """Best-known upper bounds on the dimension of a q-ary [n, k, d] code."""

    entries: dict[tuple[int, int, int], int] = field(default_factory=dict)
    provenance: dict[tuple[int, int, int], str] = field(default_factory=dict)

    @classmethod
    def from_csv(cls, path: str | Path) -> "KqTable":
        t = cls()
        with open(path, newline="") as fh:
            rows = csv.DictReader(fh)
            if rows.fieldnames is None or [h.strip() for h in rows.fieldnames] != ["q", "n", "d", "k"]:
                raise ValueError(f"{path}: header must be q,n,d,k")
            for row in rows:
                key = (int(row["q"]), int(row["n"]), int(row["d"]))
                t.entries[key] = int(row["k"])
                t.provenance[key] = str(path)
        return t

    def get(self, q: int, n: int, d: int) -> int | None:
        return self.entries.get((q, n, d))


def _sphere_packing_k(q: int, n: int, e: int) -> int:
    ball = sum(math.comb(n, i) * (q - 1) ** i for i in range(e + 1))
    cap = q**n // ball  # q^k <= q^n / ball  iff  q^k <= floor(q^n / ball)
    k = 0
    while q ** (k + 1) <= cap:
        k += 1
    return k


def kq_upper(q: int, n: int, d: int, table: KqTable | None = None) -> int:
    """Upper bound on ``k_q(n, d)``: table entry, else an analytic fallback.

    Fallback: 0 when ``n < d``; ``n`` when ``d = 1``; even ``d`` reduces to
    ``(n - 1, d - 1)``; odd ``d`` uses the sphere-packing bound.
    """
    if n < 0 or d < 1:
        raise ValueError("need n >= 0 and d >= 1")
    if table is not None:
        hit = table.get(q, n, d)
        if hit is not None:
            return hit
    if n < d:
        return 0
    if d == 1:
        return n
    if d % 2 == 0:
        return kq_upper(q, n - 1, d - 1, table)
    return _sphere_packing_k(q, n, (d - 1) // 2)


@dataclass
class ShorteningBound:
    k: int
    t: int
    terms: dict[int, int]

    def __int__(self) -> int:
        return self.k


def shortening_bound(q: int, n: int, d: int, r: int, table: KqTable | None = None) -> ShorteningBound:
    """``min_t  t*r + k_q(n - t(r+1), d)`` over ``1 <= t <= floor(n/(r+1))``."""
    if r + 1 > n:
        raise ValueError("need r + 1 <= n")
    terms = {t: t * r + kq_upper(q, n - t * (r + 1), d, table) for t in range(1, n // (r + 1) + 1)}
    t = min(terms, key=lambda x: (terms[x], x))
    return ShorteningBound(terms[t], t, terms)


# -- Delsarte LP ----------------------------------------------------------------


def krawtchouk(n: int, q: int, k: int, x: int) -> int:
    return sum((-1) ** j * (q - 1) ** (k - j) * math.comb(x, j) * math.comb(n - x, k - j)
               for j in range(k + 1))


class LpError(RuntimeError):
    pass


def _simplex(A: list[list[Fraction]], senses: list[str], b: list[Fraction], c: list[Fraction]
             ) -> tuple[str, Fraction | None, list[Fraction] | None]:
    """Maximise ``c.x`` subject to ``A x (<=, =, >=) b`` and ``x >= 0``.

    Two-phase tableau simplex in exact arithmetic with Bland's rule.
    Returns ``(status, optimum, x)`` with status optimal, infeasible or unbounded.
    """
    m, nv = len(A), len(c)
    zero, one = _Q(0), _Q(1)
    A = [[_Q(x) for x in row] for row in A]
    b = [_Q(x) for x in b]
    c = [_Q(x) for x in c]
    rows = []
    for a, s, rhs in zip(A, senses, b):
        if rhs < 0:
            a, rhs = [-x for x in a], -rhs
            s = {"<=": ">=", ">=": "<=", "=": "="}[s]
        rows.append((a, s, rhs))
    n_slack = sum(s != "=" for _, s, _ in rows)
    n_art = sum(s != "<=" for _, s, _ in rows)
    width = nv + n_slack + n_art
    T = []
    basis = []
    si, ai = nv, nv + n_slack
    art = set()
    for a, s, rhs in rows:
        row = a + [zero] * (n_slack + n_art) + [rhs]
        if s == "<=":
            row[si] = one
            basis.append(si)
            si += 1
        elif s == ">=":
            row[si] = -one
            si += 1
            row[ai] = one
            basis.append(ai)
            art.add(ai)
            ai += 1
        else:
            row[ai] = one
            basis.append(ai)
            art.add(ai)
            ai += 1
        T.append(row)

    # T[m] holds the reduced costs c_j - c_B B^-1 A_j of the current objective
    T.append([zero] * (width + 1))

    def pivot(r: int, col: int):
        pr = T[r]
        pv = pr[col]
        if pv != 1:
            T[r] = pr = [x / pv for x in pr]
        nz = [j for j, x in enumerate(pr) if x]
        for i in range(m + 1):
            if i != r:
                f = T[i][col]
                if f:
                    row = T[i]
                    for j in nz:
                        row[j] -= f * pr[j]
        basis[r] = col

    def run(cost: list, allowed: int) -> str:
        red = list(cost) + [zero]
        for i, v in enumerate(basis):
            if cost[v]:
                cv = cost[v]
                red = [a - cv * b for a, b in zip(red, T[i])]
        T[m] = red
        while True:
            obj = T[m]
            enter = next((j for j in range(allowed) if obj[j] > 0), None)
            if enter is None:
                return "optimal"
            best = None
            for i in range(m):
                a = T[i][enter]
                if a > 0:
                    key = (T[i][-1] / a, basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            pivot(best[1], enter)

    if art:
        phase1 = [zero] * width
        for j in art:
            phase1[j] = -one
        run(phase1, width)
        if sum(T[i][-1] for i in range(m) if basis[i] in art) != 0:
            return "infeasible", None, None
        # drive zero-valued artificials out of the basis where possible
        for i in range(m):
            if basis[i] in art:
                for j in range(nv + n_slack):
                    if T[i][j] and j not in basis:
                        pivot(i, j)
                        break
    cost = list(c) + [zero] * (n_slack + n_art)
    keep = nv + n_slack
    for i in range(m):
        if basis[i] >= keep:
            # redundant row: artificial stays basic at zero; forbid it from re-entering
            cost[basis[i]] = zero
    status = run(cost, keep)
    if status != "optimal":
        return status, None, None
    x = [Fraction(0)] * nv
    for i, v in enumerate(basis):
        if v < nv:
            x[v] = _fraction(T[i][-1])
    return "optimal", sum((_fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0)), x


def _fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


@dataclass
class LpBound:
    status: str
    M: Fraction | None
    log_q: float | None
    k_bound: int | None
    distribution: dict[int, Fraction] = field(default_factory=dict)
    variant: str = "pinned"


def lp_bound(q: int, n: int, d: int, r: int, relaxed: bool = False) -> LpBound:
    """Delsarte bound on the size M of a code with distance ``d`` and locality ``r``.

    Variables are the distance distribution ``a_d .. a_n``.  The Krawtchouk
    transform is pinned to ``-C(n,k)(q-1)^k`` for ``k = 1 .. r+1`` and bounded
    below by it for larger ``k``.  ``relaxed=True`` keeps only ``k <= r`` as
    equalities (dual distance at least ``r + 1``).
    """
    if not 1 <= d <= n or r + 1 > n:
        raise ValueError("need 1 <= d <= n and r + 1 <= n")
    xs = list(range(d, n + 1))
    eq_top = r if relaxed else r + 1
    A, senses, b = [], [], []
    for k in range(1, n + 1):
        scale = math.comb(n, k) * (q - 1) ** k
        A.append([Fraction(krawtchouk(n, q, k, i), scale) for i in xs])
        senses.append("=" if k <= eq_top else ">=")
        b.append(Fraction(-1))
    status, opt, x = _simplex(A, senses, b, [Fraction(1)] * len(xs))
    variant = "relaxed" if relaxed else "pinned"
    if status == "unbounded":
        raise LpError(f"LP unbounded for q={q}, n={n}, d={d}, r={r}")
    if status == "infeasible":
        return LpBound(status, None, None, None, variant=variant)
    M = 1 + opt
    log_q = (math.log(M.numerator) - math.log(M.denominator)) / math.log(q)
    k = 0
    while q ** (k + 1) <= M:
        k += 1
    dist = {i: xi for i, xi in zip(xs, x) if xi}
    return LpBound(status, M, log_q, k, dist, variant)
