"""Finite fields GF(p^m) backed by discrete-log tables.

Elements are plain integers: the residue polynomial c_0 + c_1 x + ... is
packed as ``sum(c_i * p**i)``.  All arithmetic methods on :class:`Field`
accept Python ints or integer numpy arrays and broadcast, so the same code
paths serve scalar bookkeeping and vectorised codeword enumeration.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

MAX_FIELD_ORDER = 1 << 20


class FieldError(ValueError):
    """Invalid field parameters or arithmetic mixing unrelated fields."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**e``; raise :class:`FieldError` if ``q`` is no prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise FieldError(f"{q} is not a prime power")
    p = ps[0]
    e = 0
    while q > 1:
        q //= p
        e += 1
    return p, e


def multiplicative_order(a: int, n: int) -> int:
    """Smallest ``e >= 1`` with ``a**e = 1 (mod n)``."""
    if n == 1:
        return 1
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not invertible modulo {n}")
    e, x = 1, a % n
    while x != 1:
        x = x * a % n
        e += 1
    return e


# -- polynomials over GF(p) used while setting a field up ---------------------


def _gf2_mod(a: int, b: int) -> int:
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def _gf2_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _polymod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    # b is monic
    a = [c % p for c in a]
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return a[:db]


def _polymul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _pack(coeffs: Sequence[int], p: int) -> int:
    v = 0
    for c in reversed(coeffs):
        v = v * p + c
    return v


def _unpack(v: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        v, c = divmod(v, p)
        out.append(c)
    return out


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial division of a monic polynomial (low degree first) over GF(p)."""
    m = len(coeffs) - 1
    if m < 1 or coeffs[-1] % p != 1:
        raise FieldError("expected a monic polynomial of degree >= 1")
    if m == 1:
        return True
    if p == 2:
        f = _pack(coeffs, 2)
        for deg in range(1, m // 2 + 1):
            for d in range(1 << deg, 1 << (deg + 1)):
                if _gf2_mod(f, d) == 0:
                    return False
        return True
    for deg in range(1, m // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            if not any(_polymod(coeffs, list(tail) + [1], p)):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``m``.

    Coefficient vectors are compared low degree first.
    """
    for tail in itertools.product(range(p), repeat=m):
        coeffs = list(tail) + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# -- fields -------------------------------------------------------------------


class Field:
    """GF(p^m) with a fixed modulus and designated primitive element.

    Build instances with :func:`field_create`, which caches them so that two
    requests for the same field return the same object.
    """

    def __init__(self, p: int, m: int, modulus: Sequence[int]):
        self.p = p
        self.m = m
        self.order = p**m
        self.q1 = self.order - 1
        self.modulus = tuple(int(c) for c in modulus)
        self._powers = np.array([p**i for i in range(m)], dtype=np.int64)
        self.generator = self._find_generator()
        self._build_tables()

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    # setup ---------------------------------------------------------------

    def _slow_mul(self, a: int, b: int) -> int:
        if self.p == 2:
            return _gf2_mod(_gf2_mul(a, b), _pack(self.modulus, 2))
        prod = _polymul(_unpack(a, self.p, self.m), _unpack(b, self.p, self.m), self.p)
        return _pack(_polymod(prod, self.modulus, self.p), self.p)

    def _slow_pow(self, a: int, e: int) -> int:
        out = 1
        while e:
            if e & 1:
                out = self._slow_mul(out, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return out

    def _find_generator(self) -> int:
        primes = prime_factors(self.q1)
        for tail in itertools.product(range(self.p), repeat=self.m):
            v = _pack(tail, self.p)
            if v and all(self._slow_pow(v, self.q1 // ell) != 1 for ell in primes):
                return v
        raise AssertionError("field has no primitive element")  # unreachable

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.order
        # multiplication by the generator is GF(p)-linear: one matrix product
        # gives the successor of every element at once
        cols = np.array([_unpack(self._slow_mul(p**j, self.generator), p, m) for j in range(m)],
                        dtype=np.int64)
        succ = np.empty(q, dtype=np.int64)
        chunk = 1 << 16
        for lo in range(0, q, chunk):
            v = np.arange(lo, min(q, lo + chunk), dtype=np.int64)
            digits = (v[:, None] // self._powers[None, :]) % p
            succ[lo:lo + len(v)] = ((digits @ cols) % p) @ self._powers
        nxt = succ.tolist()
        seq = [0] * self.q1
        cur = 1
        for i in range(self.q1):
            seq[i] = cur
            cur = nxt[cur]
        if cur != 1:
            raise AssertionError("generator walk did not close")
        self.exp = np.array(seq, dtype=np.int64)
        self.log = np.full(q, -1, dtype=np.int64)
        self.log[self.exp] = np.arange(self.q1, dtype=np.int64)
        if np.count_nonzero(self.log[1:] < 0):
            raise AssertionError("designated generator is not primitive")
        self.exp.setflags(write=False)
        self.log.setflags(write=False)

    # elements ------------------------------------------------------------

    def element(self, value: int) -> "FieldElement":
        value = int(value)
        if not 0 <= value < self.order:
            raise FieldError(f"{value} is not an element of {self}")
        return FieldElement(self, value)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def gen(self) -> "FieldElement":
        return FieldElement(self, self.generator)

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def digits(self, a) -> np.ndarray:
        """Coefficient vectors (low degree first) along a new last axis."""
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._powers) % self.p

    # vectorised arithmetic ----------------------------------------------

    def _digitwise(self, a, b, sign: int):
        p = self.p
        out = 0
        for pw in self._powers.tolist():
            out = out + ((a // pw % p + sign * (b // pw % p)) % p) * pw
        return out

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        return self._digitwise(a, b, 1)

    def sub(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a - b) % self.p
        return self._digitwise(a, b, -1)

    def neg(self, a):
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        return self._digitwise(0 * a, a, -1)

    def mul(self, a, b):
        if self.m == 1:
            return a * b % self.p
        scalar = np.ndim(a) == 0 and np.ndim(b) == 0
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        r = self.exp[(self.log[a] + self.log[b]) % self.q1]
        r = np.where((a == 0) | (b == 0), 0, r)
        return int(r) if scalar else r

    def inv(self, a):
        scalar = np.ndim(a) == 0
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError(f"zero has no inverse in {self}")
        r = self.exp[(-self.log[a]) % self.q1]
        return int(r) if scalar else r

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, e):
        """``a**e`` elementwise; ``a`` and ``e`` broadcast, negative ``e`` inverts."""
        scalar = np.ndim(a) == 0 and np.ndim(e) == 0
        a = np.asarray(a, dtype=np.int64)
        e = np.asarray(e, dtype=np.int64)
        zero = a == 0
        if np.any(zero & (e < 0)):
            raise ZeroDivisionError(f"zero has no inverse in {self}")
        lg = np.where(zero, 0, self.log[a])
        r = np.where(zero, np.where(e == 0, 1, 0), self.exp[(lg * (e % self.q1)) % self.q1])
        return int(r) if scalar else r

    def order_of(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        return self.q1 // math.gcd(int(self.log[a]), self.q1) if self.q1 else 1

    def poly_eval(self, coeffs, x):
        """Evaluate a polynomial (low degree first) at ``x`` by Horner's rule."""
        acc = 0 * np.asarray(x) if np.ndim(x) else 0
        for c in reversed(list(coeffs)):
            acc = self.add(self.mul(acc, x), int(c))
        return acc

    def poly_mul(self, a, b) -> list[int]:
        a = [int(c) for c in a]
        b = np.asarray(b, dtype=np.int64)
        out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
        for i, c in enumerate(a):
            if c:
                out[i:i + len(b)] = self.add(out[i:i + len(b)], self.mul(c, b))
        return out.tolist()

    def poly_divmod(self, a, b) -> tuple[list[int], list[int]]:
        a = [int(c) for c in a]
        b = [int(c) for c in b]
        while b and b[-1] == 0:
            b.pop()
        if not b:
            raise ZeroDivisionError("division by the zero polynomial")
        inv_lead = self.inv(b[-1])
        quot = [0] * max(len(a) - len(b) + 1, 1)
        for i in range(len(a) - len(b), -1, -1):
            c = self.mul(a[i + len(b) - 1], inv_lead)
            quot[i] = c
            if c:
                for j, bj in enumerate(b):
                    a[i + j] = self.sub(a[i + j], self.mul(c, bj))
        rem = a[:len(b) - 1]
        while rem and rem[-1] == 0:
            rem.pop()
        return quot, rem


@dataclass(frozen=True, eq=False)
class FieldElement:
    """An element of a specific :class:`Field`; mixing fields raises."""

    field: Field
    value: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"cannot mix elements of {self.field} and {other.field}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        raise TypeError(f"unsupported operand {other!r}")

    def _new(self, v) -> "FieldElement":
        return FieldElement(self.field, int(v))

    def __add__(self, other):
        return self._new(self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._new(self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return self._new(self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return self._new(self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._new(self.field.div(self.value, self._coerce(other)))

    def __neg__(self):
        return self._new(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._new(self.field.power(self.value, e))

    def __eq__(self, other) -> bool:
        return self.value == self._coerce(other)

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.field}({self.value})"

    @property
    def coefficients(self) -> tuple[int, ...]:
        return tuple(_unpack(self.value, self.field.p, self.field.m))

    def order(self) -> int:
        return self.field.order_of(self.value)

    def is_one(self) -> bool:
        return self.value == 1


@lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus: tuple[int, ...]) -> Field:
    return Field(p, m, modulus)


def field_create(p: int, m: int = 1, modulus: Sequence[int] | None = None,
                 max_order: int = MAX_FIELD_ORDER) -> Field:
    """Return GF(p^m).

    Without ``modulus`` the lexicographically smallest monic irreducible
    polynomial of degree ``m`` is used (coefficients compared low degree
    first); a given modulus must be monic of degree ``m`` and irreducible.
    """
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldError("extension degree must be >= 1")
    if p**m > max_order:
        raise FieldError(f"GF({p}^{m}) exceeds the table cap of {max_order} elements")
    if modulus is None:
        modulus = _default_modulus(p, m)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {m}")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")
    return _cached_field(p, m, tuple(modulus))


@lru_cache(maxsize=None)
def _default_modulus(p: int, m: int) -> tuple[int, ...]:
    return smallest_irreducible(p, m)


def field_of_order(q: int) -> Field:
    p, e = prime_power(q)
    return field_create(p, e)


def root_of_unity(f: Field, n: int) -> FieldElement:
    """Primitive ``n``-th root of unity ``g**((q-1)/n)`` for the designated generator g."""
    if n < 1 or f.q1 % n:
        raise FieldError(f"{n} does not divide |{f}| - 1 = {f.q1}")
    a = FieldElement(f, int(f.exp[(f.q1 // n) % f.q1]) if f.q1 else 1)
    if a ** n != 1 or any(a ** (n // ell) == 1 for ell in prime_factors(n)):
        raise AssertionError("root of unity has the wrong order")
    return a


def geometric_root_sum(alpha: FieldElement, n: int) -> FieldElement:
    """Sum of ``alpha**i`` for i < n, for an ``n``-th root of unity ``alpha``.

    The sum telescopes to ``n mod p`` when ``alpha == 1`` and vanishes
    otherwise.
    """
    if alpha ** n != 1:
        raise FieldError(f"{alpha} is not an {n}-th root of unity")
    f = alpha.field
    return FieldElement(f, n % f.p) if alpha.is_one() else f.zero


class SubfieldMap:
    """Embedding of GF(p^e) into GF(p^m) (e | m) together with the trace.

    The small field's generator is sent to ``G**(j*(|big|-1)/(|small|-1))``
    for the smallest admissible ``j`` (``j = 1`` whenever that exponent is a
    conjugate of the small generator).
    """

    def __init__(self, big: Field, small: Field):
        if big.p != small.p or big.m % small.m:
            raise FieldError(f"{small} is not a subfield of {big}")
        self.big = big
        self.small = small
        self.degree = big.m // small.m
        self.embed_table = self._embedding()
        self.embed_table.setflags(write=False)
        pull = np.full(big.order, -1, dtype=np.int64)
        pull[self.embed_table] = np.arange(small.order, dtype=np.int64)
        self.pullback_table = pull
        self.pullback_table.setflags(write=False)

    def __repr__(self) -> str:
        return f"SubfieldMap({self.big} -> {self.small})"

    def _embedding(self) -> np.ndarray:
        big, small = self.big, self.small
        if small.m == 1:
            return np.arange(small.order, dtype=np.int64)
        if small == big:
            return big.elements()
        step = big.q1 // small.q1
        ks = np.arange(small.q1, dtype=np.int64)
        xs = small.elements()
        for j in range(1, small.q1 + 1):
            if math.gcd(j, small.q1) != 1:
                continue
            table = np.zeros(small.order, dtype=np.int64)
            table[small.exp] = big.exp[(step * j * ks) % big.q1]
            # multiplicative by construction; additive iff x -> x + 1 commutes
            if np.array_equal(table[small.add(xs, 1)], big.add(table, 1)):
                return table
        raise AssertionError("no field embedding found")  # unreachable

    def embed(self, a):
        r = self.embed_table[np.asarray(a, dtype=np.int64)]
        return int(r) if np.ndim(a) == 0 else r

    def contains(self, a):
        return self.pullback_table[np.asarray(a, dtype=np.int64)] >= 0

    def pullback(self, a):
        """Small-field preimage; raises if some entry lies outside the subfield."""
        r = self.pullback_table[np.asarray(a, dtype=np.int64)]
        if np.any(r < 0):
            raise FieldError(f"value does not lie in {self.small}")
        return int(r) if np.ndim(a) == 0 else r

    def trace_big(self, x):
        """Trace computed in the big field: sum of x**(Q**i), Q = |small|."""
        acc = x
        y = x
        for _ in range(self.degree - 1):
            y = self.big.power(y, self.small.order)
            acc = self.big.add(acc, y)
        return acc

    def trace(self, x):
        return self.pullback(self.trace_big(x))

    @cached_property
    def basis(self) -> list[int]:
        """A basis of the big field over the small one (big-field ints)."""
        if self.small.m == 1:
            return [self.big.p**i for i in range(self.big.m)]
        theta = self.big.generator
        return [self.big.power(theta, i) for i in range(self.degree)]

    @cached_property
    def _coordinate_table(self) -> np.ndarray:
        big, small, d = self.big, self.small, self.degree
        if small.m == 1:
            return big.digits(big.elements())
        coords = np.array(list(itertools.product(range(small.order), repeat=d)), dtype=np.int64)
        vals = np.zeros(len(coords), dtype=np.int64)
        for i, b in enumerate(self.basis):
            vals = big.add(vals, big.mul(self.embed(coords[:, i]), b))
        table = np.full((big.order, d), -1, dtype=np.int64)
        table[vals] = coords
        if np.any(table < 0):
            raise AssertionError("basis does not span the big field")
        return table

    def coordinates(self, x) -> np.ndarray:
        """Small-field coordinates of ``x`` in :attr:`basis`, on a new last axis."""
        return self._coordinate_table[np.asarray(x, dtype=np.int64)]


@lru_cache(maxsize=None)
def subfield_map(big: Field, small: Field) -> SubfieldMap:
    return SubfieldMap(big, small)


def trace(smap: SubfieldMap, x: FieldElement) -> FieldElement:
    """Relative trace of an element of ``smap.big`` down to ``smap.small``."""
    if x.field != smap.big:
        raise FieldError(f"{x} is not in {smap.big}")
    return FieldElement(smap.small, smap.trace(x.value))
