"""Cyclic codes described by their zeros.

A defining set is a set of exponents ``i`` in ``Z_n``; the code's zeros are
``alpha**i`` for a fixed primitive ``n``-th root of unity ``alpha`` of the
locator field.  Exponent sets (not root lists) are the stored form, so codes
built over the same locator field agree on what ``alpha`` is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .gf import (Field, FieldError, field_create, field_of_order, multiplicative_order,
                 prime_power, root_of_unity, subfield_map)
from .linalg import LinearCode


class InternalCheckError(AssertionError):
    """Two independent constructions of the same object disagree."""


def cyclotomic_cosets(n: int, q: int) -> list[tuple[int, ...]]:
    """Orbits of ``x -> q*x mod n``, each sorted, ordered by representative."""
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd({n}, {q}) != 1")
    seen: set[int] = set()
    out = []
    for i in range(n):
        if i in seen:
            continue
        orbit = []
        x = i
        while x not in orbit:
            orbit.append(x)
            x = x * q % n
        seen.update(orbit)
        out.append(tuple(sorted(orbit)))
    return out


def coset_of(i: int, n: int, q: int) -> tuple[int, ...]:
    orbit = []
    x = i % n
    while x not in orbit:
        orbit.append(x)
        x = x * q % n
    return tuple(sorted(orbit))


@dataclass(frozen=True)
class DefiningSet:
    n: int
    q: int
    exponents: frozenset[int]
    complete: bool = True

    def __post_init__(self):
        if self.complete and any(x * self.q % self.n not in self.exponents for x in self.exponents):
            raise ValueError("defining set flagged complete is not Frobenius-closed")

    def __contains__(self, i: int) -> bool:
        return i % self.n in self.exponents

    def __len__(self) -> int:
        return len(self.exponents)

    def __iter__(self):
        return iter(sorted(self.exponents))

    @property
    def representatives(self) -> tuple[int, ...]:
        """Smallest member of each cyclotomic coset in the set."""
        return tuple(sorted({min(coset_of(i, self.n, self.q)) for i in self.exponents}))

    def contains_coset(self, l: int, s: int) -> bool:
        """Whether every ``i = l (mod s)`` lies in the set (``s | n``)."""
        return all(i in self.exponents for i in range(l % s, self.n, s))

    def dual(self) -> "DefiningSet":
        """Zeros of the dual code: negatives of the non-zeros."""
        return DefiningSet(self.n, self.q,
                           frozenset((-i) % self.n for i in range(self.n) if i not in self.exponents))


def complete_defining_set(seeds: Iterable[int], n: int, q: int) -> DefiningSet:
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd({n}, {q}) != 1")
    out: set[int] = set()
    for s in seeds:
        if not 0 <= s < n:
            raise ValueError(f"exponent {s} is outside 0..{n - 1}")
        out.update(coset_of(s, n, q))
    return DefiningSet(n, q, frozenset(out))


def bch_bound(z: DefiningSet) -> int:
    """One plus the longest progression ``a, a+b, ...`` (gcd(b, n) = 1) inside ``z``."""
    n, exps = z.n, z.exponents
    best = 0
    for b in range(1, max(n, 2)):
        if math.gcd(b, n) != 1:
            continue
        for a in exps:
            run = 0
            x = a
            while x in exps and run < n:
                run += 1
                x = (x + b) % n
            best = max(best, run)
    return best + 1


def _locator_for(symbol: Field, n: int, locator: Field | None) -> Field:
    m = multiplicative_order(symbol.order, n)
    if locator is None:
        return field_create(symbol.p, symbol.m * m)
    if locator.p != symbol.p or locator.m % symbol.m or locator.q1 % n:
        raise FieldError(f"{locator} cannot serve as locator field for n={n} over {symbol}")
    return locator


@dataclass(eq=False)
class CyclicCode:
    """Cyclic code of length ``n`` over GF(q) with zeros ``alpha**i``, i in the defining set."""

    n: int
    symbol_field: Field
    locator_field: Field
    alpha: int
    defining_set: DefiningSet
    generator_poly: tuple[int, ...]
    code: LinearCode
    seeds: tuple[int, ...] = ()

    def __repr__(self) -> str:
        return (f"CyclicCode([{self.n},{self.k}] over {self.symbol_field}, "
                f"zeros {self.defining_set.representatives}, locator {self.locator_field})")

    @property
    def q(self) -> int:
        return self.symbol_field.order

    @property
    def k(self) -> int:
        return self.code.k

    @property
    def m(self) -> int:
        """Degree of the locator field over the symbol field."""
        return self.locator_field.m // self.symbol_field.m

    @property
    def zeros(self) -> frozenset[int]:
        return self.defining_set.exponents

    @cached_property
    def to_locator(self):
        return subfield_map(self.locator_field, self.symbol_field)

    def generator_in_locator(self) -> np.ndarray:
        return self.to_locator.embed(self.code.generator)

    def dual(self) -> "CyclicCode":
        return code_from_zeros(self.q, self.n, sorted(self.defining_set.dual().exponents),
                               locator=self.locator_field)

    def shifts_are_codewords(self) -> bool:
        return bool(np.all(self.code.contains(np.roll(self.code.generator, 1, axis=1))))


def minimal_polynomial(locator: Field, alpha: int, coset: Iterable[int]) -> list[int]:
    """Product of ``x - alpha**i`` over a coset, coefficients in the locator field."""
    poly = [1]
    for i in coset:
        root = locator.power(alpha, i)
        poly = locator.poly_mul(poly, [locator.neg(root), 1])
    return poly


def code_from_zeros(q: int, n: int, seeds: Iterable[int], locator: Field | None = None) -> CyclicCode:
    """Cyclic code over GF(q) whose zeros are the Frobenius closure of ``seeds``."""
    seeds = tuple(sorted(set(int(s) for s in seeds)))
    symbol = field_of_order(q)
    loc = _locator_for(symbol, n, locator)
    alpha = root_of_unity(loc, n).value
    z = complete_defining_set(seeds, n, q)
    smap = subfield_map(loc, symbol)
    g = [1]
    for rep in z.representatives:
        mp = minimal_polynomial(loc, alpha, coset_of(rep, n, q))
        if not np.all(smap.contains(mp)):
            raise InternalCheckError(f"minimal polynomial of alpha^{rep} is not over {symbol}")
        g = symbol.poly_mul(g, smap.pullback(mp).tolist())
    deg = len(g) - 1
    xn1 = [symbol.neg(1)] + [0] * (n - 1) + [1]
    _, rem = symbol.poly_divmod(xn1, g)
    if rem:
        raise InternalCheckError("generator polynomial does not divide x^n - 1")
    k = n - deg
    G = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        G[i, i:i + deg + 1] = g
    code = LinearCode(symbol, G, n=n)
    cc = CyclicCode(n, symbol, loc, alpha, z, tuple(g), code, seeds)
    if k and not cc.shifts_are_codewords():
        raise InternalCheckError("code is not invariant under the cyclic shift")
    return cc


def _expanded_parity(code: LinearCode, big: Field, small: Field) -> np.ndarray:
    """Parity checks over ``small`` of the subfield subcode of ``code`` (over ``big``)."""
    smap = subfield_map(big, small)
    H = subfield_map(big, code.field).embed(code.parity_check)
    coords = smap.coordinates(H)  # (rows, n, degree)
    return coords.transpose(0, 2, 1).reshape(-1, code.n)


def subfield_subcode(c: CyclicCode, q: int) -> CyclicCode:
    """Codewords of ``c`` with every coordinate in GF(q), as a cyclic code over GF(q).

    Computed twice: as the GF(q)-kernel of the expanded parity checks and as
    the cyclic code whose zeros are the q-closure of ``c``'s zeros.
    """
    p, e = prime_power(q)
    if p != c.symbol_field.p or c.symbol_field.m % e:
        raise FieldError(f"GF({q}) is not a subfield of {c.symbol_field}")
    small = field_of_order(q)
    loc = c.locator_field
    Hq = _expanded_parity(c.code, loc, small)
    kernel = LinearCode(small, Hq, n=c.n).dual()
    closed = code_from_zeros(q, c.n, sorted(c.zeros), locator=loc)
    if kernel != closed.code:
        raise InternalCheckError("subfield subcode: filter and closure constructions differ")
    return closed


def trace_code(c: LinearCode, q: int) -> LinearCode:
    """Coordinatewise trace image of ``c`` down to GF(q)."""
    small = field_of_order(q)
    big = c.field
    if small.p != big.p or big.m % small.m:
        raise FieldError(f"GF({q}) is not a subfield of {big}")
    if c.k == 0:
        return LinearCode(small, np.zeros((0, c.n), dtype=np.int64), n=c.n)
    smap = subfield_map(big, small)
    rows = [smap.trace(big.mul(gamma, c.generator)) for gamma in smap.basis]
    return LinearCode(small, np.concatenate(rows), n=c.n)


def irreducible_code(q: int, s: int, t: int | None = None) -> LinearCode:
    """The code {(T(gamma), T(gamma*beta), ..., T(gamma*beta**(s-1)))}.

    ``beta`` has multiplicative order ``t`` (default ``s``) in GF(q^m) with
    ``m = ord_s(q)`` and ``T`` is the trace to GF(q).  For ``t < s`` the code
    is ``s/t`` concatenated copies of the length-``t`` code.
    """
    t = s if t is None else t
    if s % t:
        raise ValueError(f"{t} does not divide {s}")
    if math.gcd(s, q) != 1:
        raise ValueError(f"gcd({s}, {q}) != 1")
    small = field_of_order(q)
    m = multiplicative_order(q, s)
    big = field_create(small.p, small.m * m)
    beta = root_of_unity(big, t).value
    powers = big.power(beta, np.arange(s))
    smap = subfield_map(big, small)
    rows = [smap.trace(big.mul(gamma, powers)) for gamma in smap.basis]
    code = LinearCode(small, np.array(rows), n=s)
    if t == s and code.k != m:
        raise InternalCheckError(f"irreducible code has dimension {code.k}, expected {m}")
    if t < s and not np.array_equal(code.generator, np.tile(code.generator[:, :t], s // t)):
        raise InternalCheckError("degenerate irreducible code is not a repetition")
    return code
