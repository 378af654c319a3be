"""Exact arithmetic in GF(p^m) for desk-scale fields (q <= 2^20).

Elements are plain Python ints in ``[0, q)``.  The integer ``sum(c_i * p**i)``
encodes the polynomial-basis coordinates ``c_0 .. c_{m-1}`` of an element of
``GF(p)[T] / (modulus)``; this encoding is what every file format uses.

Scalar operations live on :class:`FieldSpec`; the ``v*`` methods are their
numpy counterparts used by the encoder and the brute-force oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    FieldTooLarge,
    InvalidModulus,
    NotPrime,
    Reducible,
    ZeroPolynomial,
)

MAX_Q = 1 << 20


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


# --- polynomials over the prime field, lists lowest degree first ----------

def _ptrim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f: list[int], g: list[int], p: int) -> list[int]:
    f = _ptrim([c % p for c in f])
    dg = len(g) - 1
    inv_lead = pow(g[-1], p - 2, p)
    while len(f) - 1 >= dg:
        c = f[-1] * inv_lead % p
        shift = len(f) - 1 - dg
        for i, gc in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gc) % p
        _ptrim(f)
    return f


def _pmulmod(f: list[int], g: list[int], mod: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return _pmod(out, mod, p)


def _pgcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = _ptrim(list(f)), _ptrim(list(g))
    while g:
        f, g = g, _pmod(f, g, p)
    return f


def _is_irreducible_over_prime_field(f: Sequence[int], p: int) -> bool:
    # f is irreducible of degree m iff gcd(f, X^(p^i) - X) = 1 for 1 <= i <= m // 2
    f = list(f)
    m = len(f) - 1
    if m <= 1:
        return True
    x = [0, 1]
    h = x
    for _ in range(m // 2):
        # h <- h^p mod f
        acc, base, e = [1], h, p
        while e:
            if e & 1:
                acc = _pmulmod(acc, base, f, p)
            base = _pmulmod(base, base, f, p)
            e >>= 1
        h = acc
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(f, _ptrim(diff), p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m whose base-p encoding is smallest."""
    for low in range(p**m):
        coeffs = [(low // p**i) % p for i in range(m)] + [1]
        if m > 1 and coeffs[0] == 0:
            continue
        if _is_irreducible_over_prime_field(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("an irreducible polynomial of every degree exists")


# --- the field ----------------------------------------------------------------

class FieldSpec:
    """GF(p^m) with a fixed polynomial basis.

    Build instances through :func:`make_field`.  Instances are immutable and
    compare equal when ``(p, m, modulus)`` agree.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.modulus = modulus
        self.q = p**m
        self._pw = [p**i for i in range(m)]
        self.primitive = self._find_primitive()
        self._build_tables()

    # identity
    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.m, self.modulus) == (
            other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    @property
    def characteristic(self) -> int:
        return self.p

    def to_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    # encoding
    def digits(self, a: int) -> list[int]:
        return [(a // w) % self.p for w in self._pw]

    def from_digits(self, ds: Iterable[int]) -> int:
        return sum((d % self.p) * w for d, w in zip(ds, self._pw))

    def embed(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not a canonical element of {self!r}")
        return a

    # reference multiplication straight from the polynomial basis; used to
    # bootstrap the log tables and by tests as an independent oracle
    def slow_mul(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return a * b % p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        mod = self.modulus
        for top in range(2 * m - 2, m - 1, -1):
            c = prod[top] % p
            if c:
                for i in range(m + 1):
                    prod[top - m + i] -= c * mod[i]
        return self.from_digits(prod[:m])

    def _slow_pow(self, a: int, e: int) -> int:
        acc = 1
        while e:
            if e & 1:
                acc = self.slow_mul(acc, a)
            a = self.slow_mul(a, a)
            e >>= 1
        return acc

    def _find_primitive(self) -> int:
        n = self.q - 1
        if n == 1:
            return 1
        factors = prime_factors(n)
        for g in range(2, self.q):
            if all(self._slow_pow(g, n // f) != 1 for f in factors):
                return g
        raise AssertionError("multiplicative group is cyclic")

    def _mul_matrix(self, h: int) -> np.ndarray:
        # row i = digits(T^i * h); digits(x * h) = digits(x) @ M mod p
        return np.array([self.digits(self.slow_mul(self._pw[i] if self.m > 1 else 1, h))
                         for i in range(self.m)], dtype=np.int64)

    def _build_tables(self):
        q, p, n = self.q, self.p, self.q - 1
        exp_digits = np.zeros((n, self.m), dtype=np.int64)
        baby = max(1, math.isqrt(n))
        step = self._mul_matrix(self.primitive)
        cur = np.array(self.digits(1), dtype=np.int64)
        for i in range(min(baby, n)):
            exp_digits[i] = cur
            cur = cur @ step % p
        giant = self._mul_matrix(self._slow_pow(self.primitive, baby))
        for start in range(baby, n, baby):
            stop = min(start + baby, n)
            exp_digits[start:stop] = exp_digits[start - baby:stop - baby] @ giant % p
        weights = np.array(self._pw, dtype=np.int64)
        exp = exp_digits @ weights
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(n, dtype=np.int64)
        if len(np.unique(exp)) != n:
            raise AssertionError("primitive element does not generate the group")
        self._exp = np.concatenate([exp, exp])
        self._log = log
        self._exp_list = self._exp.tolist()
        self._log_list = log.tolist()

    # scalar arithmetic
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        return sum((((a // w) + (b // w)) % p) * w for w in self._pw)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return -a % self.p
        p = self.p
        return sum((-(a // w) % p) * w for w in self._pw)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        return self._exp_list[self._log_list[a] + self._log_list[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp_list[(self.q - 1 - self._log_list[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        acc = 1
        while e:
            if e & 1:
                acc = self.mul(acc, a)
            a = self.mul(a, a)
            e >>= 1
        return acc

    def exp(self, k: int) -> int:
        """primitive ** k"""
        return self._exp_list[k % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("log of zero")
        return self._log_list[a]

    def order(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("order of zero")
        return (self.q - 1) // math.gcd(self.q - 1, self._log_list[a])

    def elements(self) -> range:
        return range(self.q)

    # vectorized arithmetic on int64 arrays of canonical elements
    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for w in self._pw:
            out += ((a // w + b // w) % self.p) * w
        return out

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        if self.m == 1:
            return -a % self.p
        out = np.zeros_like(a)
        for w in self._pw:
            out += (-(a // w) % self.p) * w
        return out

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return a * b % self.p
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def vpow(self, a, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        acc = np.ones_like(a)
        base = a
        while e:
            if e & 1:
                acc = self.vmul(acc, base)
            base = self.vmul(base, base)
            e >>= 1
        return acc

    def vdot(self, coeffs, rows) -> np.ndarray:
        """Field linear combination ``sum_t coeffs[t] * rows[t]``."""
        rows = np.asarray(rows, dtype=np.int64)
        out = np.zeros(rows.shape[1:], dtype=np.int64)
        for c, row in zip(coeffs, rows):
            if c:
                out = self.vadd(out, self.vmul(c, row))
        return out


def make_field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Construct GF(p^m).

    Without ``modulus`` the smallest-encoding monic irreducible of degree m is
    used, so repeated calls agree across runs and machines.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise InvalidModulus("extension degree must be >= 1")
    if p**m > MAX_Q:
        raise FieldTooLarge(f"q = {p}^{m} exceeds {MAX_Q}")
    if modulus is None:
        modulus = smallest_irreducible(p, m) if m > 1 else (0, 1)
    else:
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] % p != 1 or any(not 0 <= c < p for c in modulus):
            raise InvalidModulus(f"modulus must be monic of degree {m} with coefficients in [0, {p})")
        if not _is_irreducible_over_prime_field(list(modulus), p):
            raise Reducible(f"modulus {list(modulus)} factors over GF({p})")
    return FieldSpec(p, m, tuple(modulus))


def primitive_element(F: FieldSpec) -> int:
    """Smallest canonical integer of multiplicative order q - 1."""
    return F.primitive


# --- univariate polynomials over GF(q) ---------------------------------------

@dataclass(frozen=True)
class UniPoly:
    """Coefficients lowest degree first, trailing zeros stripped.

    The zero polynomial has no coefficients and degree -1.
    """

    coeffs: tuple[int, ...]

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "UniPoly":
        cs = list(int(c) for c in coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def pretty(self, var: str = "T") -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) or "0"


def poly_eval(F: FieldSpec, f: UniPoly, x: int) -> int:
    acc = 0
    for c in reversed(f.coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_eval_all(F: FieldSpec, f: UniPoly, xs=None) -> np.ndarray:
    """Horner evaluation at every element of ``xs`` (default: all of GF(q))."""
    xs = np.arange(F.q, dtype=np.int64) if xs is None else np.asarray(xs, dtype=np.int64)
    acc = np.zeros_like(xs)
    for c in reversed(f.coeffs):
        acc = F.vadd(F.vmul(acc, xs), c)
    return acc


def poly_roots(F: FieldSpec, f: UniPoly) -> list[int]:
    """Distinct roots in GF(q), ascending, by exhaustive scan."""
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial vanishes everywhere")
    return np.flatnonzero(poly_eval_all(F, f) == 0).tolist()


def poly_sub_const(F: FieldSpec, f: UniPoly, c: int) -> UniPoly:
    cs = list(f.coeffs) or [0]
    cs[0] = F.sub(cs[0], c)
    return UniPoly.from_coeffs(cs)


def poly_divmod_linear(F: FieldSpec, f: UniPoly, root: int) -> tuple[UniPoly, int]:
    """Synthetic division by (T - root); returns (quotient, remainder)."""
    out = []
    acc = 0
    for c in reversed(f.coeffs):
        acc = F.add(F.mul(acc, root), c)
        out.append(acc)
    rem = out.pop() if out else 0
    return UniPoly.from_coeffs(reversed(out)), rem


def roots_with_multiplicity(F: FieldSpec, f: UniPoly) -> list[int]:
    """Roots in GF(q) repeated by multiplicity (fewer than deg f if f does not split)."""
    out = []
    for r in poly_roots(F, f):
        g = f
        while g.degree >= 1:
            quo, rem = poly_divmod_linear(F, g, r)
            if rem:
                break
            out.append(r)
            g = quo
    return out
