"""Independent reference implementations used as test oracles.

Nothing here touches the library's lookup tables or enumerators: field
elements are coefficient lists reduced by schoolbook polynomial division, and
codes are enumerated with itertools.
"""

from __future__ import annotations

import itertools
import math


def digits(v: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        v, d = divmod(v, p)
        out.append(d)
    return out


def pack(c: list[int], p: int) -> int:
    return sum(x * p**i for i, x in enumerate(c))


class RefField:
    """GF(p^m) as polynomials modulo ``modulus`` (low degree first, monic)."""

    def __init__(self, p: int, modulus: list[int]):
        self.p = p
        self.modulus = list(modulus)
        self.m = len(modulus) - 1
        self.order = p**self.m

    def add(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        return pack([(x + y) % p for x, y in zip(digits(a, p, m), digits(b, p, m))], p)

    def neg(self, a: int) -> int:
        p, m = self.p, self.m
        return pack([(-x) % p for x in digits(a, p, m)], p)

    def mul(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        x, y = digits(a, p, m), digits(b, p, m)
        prod = [0] * (2 * m - 1)
        for i, u in enumerate(x):
            for j, v in enumerate(y):
                prod[i + j] = (prod[i + j] + u * v) % p
        for deg in range(len(prod) - 1, m - 1, -1):
            c = prod[deg]
            if c:
                for i, mc in enumerate(self.modulus):
                    prod[deg - m + i] = (prod[deg - m + i] - c * mc) % p
        return pack(prod[:m], p)

    def pow(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def order_of(self, a: int) -> int:
        x, k = a, 1
        while x != 1:
            x, k = self.mul(x, a), k + 1
        return k


def brute_codewords(f, G) -> list[tuple[int, ...]]:
    """All codewords of the row space of ``G`` using ``f.add`` / ``f.mul`` on ints."""
    rows = [list(map(int, r)) for r in G]
    n = len(rows[0]) if rows else 0
    words = set()
    for msg in itertools.product(range(f.order), repeat=len(rows)):
        w = [0] * n
        for c, row in zip(msg, rows):
            if c:
                w = [f.add(x, f.mul(c, y)) for x, y in zip(w, row)]
        words.add(tuple(w))
    return sorted(words)


def brute_min_weight(f, G) -> int:
    return min(sum(1 for x in w if x) for w in brute_codewords(f, G) if any(w))


def brute_distribution(f, G) -> dict[int, int]:
    out: dict[int, int] = {}
    for w in brute_codewords(f, G):
        k = sum(1 for x in w if x)
        out[k] = out.get(k, 0) + 1
    return out


def krawtchouk_gf(n: int, q: int, k: int, x: int) -> int:
    """Coefficient of z^k in (1 + (q-1) z)^(n-x) (1 - z)^x."""
    a = [math.comb(n - x, i) * (q - 1) ** i for i in range(n - x + 1)]
    b = [(-1) ** j * math.comb(x, j) for j in range(x + 1)]
    return sum(a[i] * b[k - i] for i in range(len(a)) if 0 <= k - i < len(b))


def orbit(i: int, n: int, q: int) -> frozenset[int]:
    out, x = set(), i % n
    while x not in out:
        out.add(x)
        x = x * q % n
    return frozenset(out)


def rank_mod_p(rows, p: int) -> int:
    """Rank over the prime field GF(p) by plain Gaussian elimination."""
    M = [[int(x) % p for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(M[0]) if M else 0
    while rank < len(M) and col < ncols:
        piv = next((i for i in range(rank, len(M)) if M[i][col]), None)
        if piv is None:
            col += 1
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][col], p - 2, p)
        M[rank] = [x * inv % p for x in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][col]:
                f = M[i][col]
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[rank])]
        rank += 1
        col += 1
    return rank


def macwilliams(dist: dict[int, int], n: int, q: int) -> dict[int, int]:
    """Dual weight distribution from a primal one."""
    size = sum(dist.values())
    out = {}
    for j in range(n + 1):
        v = sum(a * krawtchouk_gf(n, q, j, i) for i, a in dist.items())
        assert v % size == 0
        if v:
            out[j] = v // size
    return out
