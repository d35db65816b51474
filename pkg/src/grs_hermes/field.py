"""Exact arithmetic in the tower GF(p) < GF(q) < GF(q^2).

Elements of GF(q^2) are plain integers in ``[0, q^2)``.  An element
``a + b*y`` with ``a, b`` in GF(q) is encoded as ``enc(a) + q*enc(b)``,
and an element of GF(q) is encoded by the base-p digits of its polynomial
coordinates (constant coefficient least significant).  So the subfield
GF(q) is exactly the set of encodings below ``q``.

All element-wise operations accept Python ints or integer numpy arrays and
broadcast like numpy ufuncs.  Scalar inputs give ``int`` results.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

# Largest supported q^2; keeps the log/antilog tables small.
MAX_ORDER = 1 << 20
# Fields up to this size also get full addition/multiplication tables.
FULL_TABLE_ORDER = 1024


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
    """Distinct prime factors of ``n`` in increasing order."""
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
    """Return ``(p, m)`` with ``q == p**m``, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    fs = prime_factors(q)
    if len(fs) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = fs[0]
    m = 0
    while q > 1:
        q //= p
        m += 1
    return p, m


# ---------------------------------------------------------------------------
# polynomials over GF(p), coefficient lists with the constant term first
# ---------------------------------------------------------------------------

def _poly_rem(a: list[int], mod: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``mod``."""
    a = list(a)
    d = len(mod) - 1
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i] % p
        if c:
            for j in range(d + 1):
                a[i - d + j] = (a[i - d + j] - c * mod[j]) % p
    return [x % p for x in a[:d]] + [0] * max(0, d - len(a))


def _is_irreducible(poly: list[int], p: int) -> bool:
    d = len(poly) - 1
    for deg in range(1, d // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not any(_poly_rem(poly, list(low) + [1], p)):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree ``m`` over GF(p).

    Coefficient tuples are compared constant term first.
    """
    for low in itertools.product(range(p), repeat=m):
        poly = list(low) + [1]
        if _is_irreducible(poly, p):
            return poly
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _digits(x: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(x % p)
        x //= p
    return out


def _undigits(ds: list[int], p: int) -> int:
    v = 0
    for d in reversed(ds):
        v = v * p + d
    return v


def _slow_mul(a: int, b: int, poly: list[int], p: int) -> int:
    m = len(poly) - 1
    da, db = _digits(a, p, m), _digits(b, p, m)
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _undigits(_poly_rem(prod, poly, p), p)


def _has_order(x: int, order: int, mul, one: int = 1) -> bool:
    """True iff ``x`` has multiplicative order exactly ``order``."""
    def pw(b, e):
        r = one
        while e:
            if e & 1:
                r = mul(r, b)
            b = mul(b, b)
            e >>= 1
        return r

    if pw(x, order) != one:
        return False
    return all(pw(x, order // f) != one for f in prime_factors(order))


class FieldTower:
    """The chain GF(p) < GF(q) < GF(q^2) with fixed bases and tables.

    Build instances with :func:`build_tower`, which caches them; a tower is
    never mutated after construction.
    """

    def __init__(self, p: int, m: int):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be at least 1")
        q = p ** m
        if q * q > MAX_ORDER:
            raise ValueError(f"q^2 = {q * q} exceeds the supported size {MAX_ORDER}")
        self.p, self.m, self.q = p, m, q
        self.order = q * q
        self.base_poly = [0, 1] if m == 1 else smallest_irreducible(p, m)

        # GF(q) tables
        a = np.arange(q, dtype=np.int64)
        add_q = np.zeros((q, q), dtype=np.int64)
        neg_q = np.zeros(q, dtype=np.int64)
        for i in range(m):
            pw = p ** i
            da = (a // pw) % p
            add_q += ((da[:, None] + da[None, :]) % p) * pw
            neg_q += ((p - da) % p) * pw
        self._add_q, self._neg_q = add_q, neg_q

        def mul_small(x, y):
            return _slow_mul(x, y, self.base_poly, p)

        h = next(x for x in range(1, q) if _has_order(x, q - 1, mul_small))
        exp_q = np.zeros(q - 1, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp_q[i] = x
            x = mul_small(x, h)
        log_q = np.zeros(q, dtype=np.int64)
        log_q[exp_q] = np.arange(q - 1)
        li = log_q[1:]
        mul_q = np.zeros((q, q), dtype=np.int64)
        mul_q[1:, 1:] = exp_q[(li[:, None] + li[None, :]) % (q - 1)]
        self._mul_q = mul_q

        # GF(q^2) = GF(q)[y] / (y^2 + t1*y + t0)
        sq = mul_q[a, a]
        self.top_poly = None
        for t0 in range(1, q):
            for t1 in range(q):
                vals = add_q[add_q[sq, mul_q[t1, a]], t0]
                if np.all(vals != 0):
                    self.top_poly = [t0, t1, 1]
                    break
            if self.top_poly:
                break

        n1 = self.order - 1

        def scalar_mul(x, y):
            return int(self._tower_mul(np.int64(x), np.int64(y)))

        self.generator = next(
            x for x in range(2, self.order) if _has_order(x, n1, scalar_mul)
        )
        exp = np.ones(1, dtype=np.int64)
        step = np.int64(self.generator)
        while len(exp) < n1:
            exp = np.concatenate([exp, self._tower_mul(exp, step)])
            step = self._tower_mul(step, step)
        exp = exp[:n1]
        log = np.zeros(self.order, dtype=np.int64)
        log[exp] = np.arange(n1)
        if len(set(exp.tolist())) != n1:
            raise AssertionError("generator is not primitive")
        self._exp = np.concatenate([exp, exp])
        self._log = log
        self._add_full = self._mul_full = None
        if self.order <= FULL_TABLE_ORDER:
            el = self.elements()
            self._add_full = self.add(el[:, None], el[None, :])
            self._mul_full = self.mul(el[:, None], el[None, :])
        for arr in (self._add_q, self._neg_q, self._mul_q, self._exp, self._log,
                    self._add_full, self._mul_full):
            if arr is not None:
                arr.setflags(write=False)

    def _tower_mul(self, x, y):
        q = self.q
        a0, a1 = x % q, x // q
        b0, b1 = y % q, y // q
        add, neg, mul = self._add_q, self._neg_q, self._mul_q
        t0, t1 = self.top_poly[0], self.top_poly[1]
        hh = mul[a1, b1]
        re = add[mul[a0, b0], neg[mul[t0, hh]]]
        im = add[add[mul[a0, b1], mul[a1, b0]], neg[mul[t1, hh]]]
        return re + q * im

    # -- element-wise arithmetic --------------------------------------------

    @staticmethod
    def _ret(r):
        r = np.asarray(r)
        return int(r) if r.ndim == 0 else r

    def add(self, x, y):
        x, y = np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64)
        if self.p == 2:
            return self._ret(x ^ y)
        if self._add_full is not None:
            return self._ret(self._add_full[x, y])
        q = self.q
        return self._ret(self._add_q[x % q, y % q] + q * self._add_q[x // q, y // q])

    def neg(self, x):
        x = np.asarray(x, dtype=np.int64)
        if self.p == 2:
            return self._ret(x)
        q = self.q
        return self._ret(self._neg_q[x % q] + q * self._neg_q[x // q])

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        x, y = np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64)
        if self._mul_full is not None:
            return self._ret(self._mul_full[x, y])
        r = self._exp[self._log[x] + self._log[y]]
        return self._ret(np.where((x == 0) | (y == 0), 0, r))

    def inv(self, x):
        x = np.asarray(x, dtype=np.int64)
        if np.any(x == 0):
            raise ZeroDivisionError("zero has no inverse")
        n1 = self.order - 1
        return self._ret(self._exp[(n1 - self._log[x]) % n1])

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def power(self, x, e: int):
        x = np.asarray(x, dtype=np.int64)
        e = int(e)
        if e == 0:
            return self._ret(np.ones_like(x))
        zero = x == 0
        if e < 0 and np.any(zero):
            raise ZeroDivisionError("zero to a negative power")
        n1 = self.order - 1
        r = self._exp[(self._log[x] * (e % n1)) % n1]
        return self._ret(np.where(zero, 0, r))

    def frobenius(self, x):
        """``x**q``; an involution fixing exactly GF(q)."""
        return self.power(x, self.q)

    def norm(self, x):
        """Relative norm ``x**(q+1)`` onto GF(q)."""
        return self.power(x, self.q + 1)

    def trace(self, x):
        return self.add(x, self.frobenius(x))

    def log(self, x):
        x = np.asarray(x, dtype=np.int64)
        if np.any(x == 0):
            raise ValueError("log of zero")
        return self._ret(self._log[x])

    def antilog(self, i):
        return self._ret(self._exp[np.asarray(i, dtype=np.int64) % (self.order - 1)])

    def in_base(self, x):
        return np.asarray(x) < self.q

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def element(self, low: int, high: int = 0) -> int:
        """Encode ``low + high*y`` for ``low, high`` in GF(q)."""
        return low + self.q * high

    def solve_norm_equation(self, c: int) -> int:
        """Smallest-encoded ``v`` with ``v**(q+1) == c`` for nonzero ``c`` in GF(q)."""
        c = int(c)
        if c == 0:
            raise ValueError("norm equation needs c != 0")
        if c >= self.q:
            raise ValueError(f"{c} does not lie in GF({self.q})")
        q = self.q
        s, rem = divmod(int(self._log[c]), q + 1)
        assert rem == 0
        cands = self._exp[(s + (q - 1) * np.arange(q + 1)) % (self.order - 1)]
        return int(cands.min())

    # -- identity and serialisation -----------------------------------------

    def _key(self):
        return (self.p, self.m, tuple(self.base_poly), tuple(self.top_poly), self.generator)

    def __eq__(self, other):
        return isinstance(other, FieldTower) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldTower(p={self.p}, m={self.m}, q={self.q})"

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "base_poly": list(self.base_poly),
            "top_poly": list(self.top_poly),
            "generator": self.generator,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FieldTower":
        t = build_tower(int(d["p"]), int(d["m"]))
        if t.to_dict() != {k: d[k] for k in t.to_dict()}:
            raise ValueError(
                "field description does not match the canonical tower for "
                f"p={d['p']}, m={d['m']}"
            )
        return t


@lru_cache(maxsize=None)
def build_tower(p: int, m: int) -> FieldTower:
    return FieldTower(p, m)


def tower_for(q: int) -> FieldTower:
    """Tower whose middle field has ``q`` elements."""
    return build_tower(*prime_power(q))
