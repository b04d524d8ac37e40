"""Exact arithmetic in F_p and F_{p^r} for odd p.

Elements of F_{p^r} are coefficient tuples ``(c0, c1, ..., c_{r-1})`` of a
polynomial in the generator, reduced modulo a monic irreducible polynomial of
degree ``r``.  Residues always live in ``[0, p-1]``.

Besides the scalar :class:`FieldElem`, a :class:`FieldCtx` offers vectorised
arithmetic on integer arrays of shape ``(..., r)`` (the last axis holds the
coefficients).  Polynomial and matrix code uses those to stay fast at
q of a few hundred.
"""
from __future__ import annotations

import functools
import itertools
import os
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np


class FieldError(ValueError):
    """Invalid field parameters or operands."""


class ContextMismatchError(FieldError):
    """Operands belong to different fields."""


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine for n < 10**12."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, r)`` with ``q == p**r``, or raise FieldError."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = next(d for d in itertools.count(2) if q % d == 0)
    r, rest = 0, q
    while rest % p == 0:
        rest //= p
        r += 1
    if rest != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, r


# --- dense polynomials over F_p as int lists, constant term first ---------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
           for i in range(n)]
    return _trim(out)


def _fp_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _fp_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = _trim([c % p for c in a])
    if len(rem) < len(b):
        return [], rem
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * (len(rem) - len(b) + 1)
    for shift in range(len(rem) - len(b), -1, -1):
        c = rem[shift + len(b) - 1] * inv_lead % p
        quot[shift] = c
        if c:
            for k, bk in enumerate(b):
                rem[shift + k] = (rem[shift + k] - c * bk) % p
    return _trim(quot), _trim(rem[: len(b) - 1])


def _fp_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _fp_divmod(a, b, p)[1]
    if a:
        inv_lead = pow(a[-1], -1, p)
        a = [c * inv_lead % p for c in a]
    return a


def _fp_frobenius_powers(f: Sequence[int], p: int, count: int) -> list[list[int]]:
    """[T^(p^k) mod f for k = 0..count]."""
    x = _fp_divmod([0, 1], f, p)[1]
    out = [x]
    for _ in range(count):
        # raise to the p-th power by square-and-multiply
        acc, base, e = [1], x, p
        while e:
            if e & 1:
                acc = _fp_divmod(_fp_mul(acc, base, p), f, p)[1]
            base = _fp_divmod(_fp_mul(base, base, p), f, p)[1]
            e >>= 1
        x = acc
        out.append(x)
    return out


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p (constant term first).

    ``poly`` is irreducible of degree d iff it divides T^(p^d) - T and is
    coprime to T^(p^(d/l)) - T for every prime l dividing d.
    """
    f = _trim([c % p for c in poly])
    if len(f) < 2:
        raise FieldError("irreducibility needs degree >= 1")
    if f[-1] != 1:
        raise FieldError("irreducibility test expects a monic polynomial")
    d = len(f) - 1
    if d == 1:
        return True
    frob = _fp_frobenius_powers(f, p, d)
    if _fp_sub(frob[d], [0, 1], p):
        return False
    for ell in _prime_factors(d):
        g = _fp_gcd(f, _fp_sub(frob[d // ell], [0, 1], p), p)
        if len(g) > 1:
            return False
    return True


# --- fields ----------------------------------------------------------------

@dataclass(frozen=True)
class FieldCtx:
    """The finite field F_q, q = p**r, built as F_p[T]/(modulus)."""

    p: int
    r: int
    modulus: tuple[int, ...]
    q: int = field(init=False, compare=False)

    def __post_init__(self):
        if not is_prime(self.p) or self.p == 2:
            raise FieldError(f"characteristic must be an odd prime, got {self.p}")
        if self.r < 1:
            raise FieldError(f"extension degree must be >= 1, got {self.r}")
        mod = tuple(int(c) % self.p for c in self.modulus)
        if len(mod) != self.r + 1 or mod[-1] != 1:
            raise FieldError("modulus must be monic of degree r")
        if not is_irreducible(mod, self.p):
            raise FieldError(f"modulus {mod} is reducible over F_{self.p}")
        object.__setattr__(self, "modulus", mod)
        object.__setattr__(self, "q", self.p ** self.r)

    def __repr__(self):
        return f"FieldCtx(q={self.q}, p={self.p}, r={self.r}, modulus={self.modulus})"

    def __call__(self, value: int | Sequence[int] | FieldElem) -> FieldElem:
        """Coerce an integer (prime subfield) or coefficient sequence."""
        if isinstance(value, FieldElem):
            if value.ctx != self:
                raise ContextMismatchError("element belongs to another field")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElem(self, (int(value) % self.p,) + (0,) * (self.r - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.r:
            raise FieldError(f"too many coefficients for F_{self.q}")
        return FieldElem(self, tuple(coeffs) + (0,) * (self.r - len(coeffs)))

    @property
    def zero(self) -> FieldElem:
        return self(0)

    @property
    def one(self) -> FieldElem:
        return self(1)

    def elements(self) -> Iterator[FieldElem]:
        """All q elements in canonical order, zero first."""
        for coeffs in itertools.product(range(self.p), repeat=self.r):
            yield FieldElem(self, coeffs)

    def enumerate_nonzero(self) -> list[FieldElem]:
        """The q-1 nonzero elements in canonical (lexicographic) order."""
        return [x for x in self.elements() if not x.is_zero()]

    # vectorised arithmetic on arrays of shape (..., r)

    def to_array(self, elems: Iterable[FieldElem] | Iterable) -> np.ndarray:
        """Nested sequences of FieldElem (or ints) -> int64 array of shape (..., r)."""
        def conv(x):
            if isinstance(x, (FieldElem, int, np.integer)):
                return list(self(x).coeffs)
            return [conv(y) for y in x]
        arr = np.asarray(conv(elems), dtype=np.int64)
        if arr.ndim == 1 and arr.shape[0] == 0:
            arr = arr.reshape(0, self.r)
        return arr

    def from_array(self, arr: np.ndarray):
        """Inverse of :meth:`to_array`; a single element for shape (r,)."""
        arr = np.asarray(arr)
        if arr.ndim == 1:
            return FieldElem(self, tuple(int(c) for c in arr))
        return [self.from_array(a) for a in arr]

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a + b) % self.p

    def vsub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a - b) % self.p

    def vneg(self, a: np.ndarray) -> np.ndarray:
        return (-a) % self.p

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise (broadcasting) product of coefficient arrays."""
        p, r = self.p, self.r
        if r == 1:
            return (a * b) % p
        shape = np.broadcast_shapes(a.shape, b.shape)[:-1]
        out = np.zeros(shape + (2 * r - 1,), dtype=np.int64)
        for i in range(r):
            for j in range(r):
                out[..., i + j] += a[..., i] * b[..., j]
        return self._vreduce(out)

    def _vreduce(self, out: np.ndarray) -> np.ndarray:
        p, r = self.p, self.r
        out %= p
        low = np.asarray(self.modulus[:r], dtype=np.int64)
        for d in range(out.shape[-1] - 1, r - 1, -1):
            c = out[..., d]
            out[..., d - r:d] = (out[..., d - r:d] - c[..., None] * low) % p
        return out[..., :r]

    def vzero_mask(self, a: np.ndarray) -> np.ndarray:
        return ~a.any(axis=-1)

    def encode(self, a: np.ndarray) -> np.ndarray:
        """Integer codes sum c_i p^i of coefficient arrays."""
        return a @ (self.p ** np.arange(self.r, dtype=np.int64))

    def vinv(self, a: np.ndarray) -> np.ndarray:
        """Elementwise inverse through a table of all q-1 inverses."""
        codes = self.encode(a)
        if (codes == 0).any():
            raise ZeroDivisionError(f"0 has no inverse in F_{self.q}")
        return _inverse_table(self)[codes]


@functools.lru_cache(maxsize=16)
def _inverse_table(ctx: FieldCtx) -> np.ndarray:
    table = np.zeros((ctx.q, ctx.r), dtype=np.int64)
    elems = ctx.enumerate_nonzero()
    codes = ctx.encode(ctx.to_array(elems))
    for code, x in zip(codes, elems):
        table[code] = x.inv().coeffs
    return table


def make_prime_field(p: int) -> FieldCtx:
    if not is_prime(p) or p == 2:
        raise FieldError(f"expected an odd prime, got {p}")
    return FieldCtx(p, 1, (0, 1))


def first_irreducible(p: int, r: int) -> tuple[int, ...]:
    """First monic irreducible of degree r, lexicographic with c0 most significant."""
    for low in itertools.product(range(p), repeat=r):
        if r > 1 and low[0] == 0:
            continue
        poly = low + (1,)
        if is_irreducible(poly, p):
            return poly
    raise AssertionError("unreachable: irreducibles exist in every degree")


class IrreducibleCache:
    """Append-only text cache of chosen moduli, one ``p r c0,c1,...,cr`` per line."""

    def __init__(self, path: str | os.PathLike):
        self.path = os.fspath(path)

    def _entries(self) -> Iterator[tuple[int, int, tuple[int, ...]]]:
        if not os.path.exists(self.path):
            return
        with open(self.path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    p_s, r_s, coeffs_s = line.split()
                    p, r = int(p_s), int(r_s)
                    coeffs = tuple(int(c) for c in coeffs_s.split(","))
                    if len(coeffs) != r + 1 or coeffs[-1] != 1 or \
                            any(not 0 <= c < p for c in coeffs):
                        raise ValueError("bad coefficient vector")
                except ValueError as exc:
                    warnings.warn(f"{self.path}:{lineno}: skipping corrupt line ({exc})")
                    continue
                yield p, r, coeffs

    def lookup(self, p: int, r: int) -> tuple[int, ...] | None:
        for ep, er, coeffs in self._entries():
            if (ep, er) == (p, r):
                return coeffs
        return None

    def store(self, p: int, r: int, modulus: Sequence[int]) -> None:
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(f"{p} {r} {','.join(str(c) for c in modulus)}\n")


def make_extension_field(p: int, r: int,
                         cache: IrreducibleCache | str | os.PathLike | None = None) -> FieldCtx:
    """F_{p^r} with the first monic irreducible modulus in canonical order."""
    if not is_prime(p) or p == 2:
        raise FieldError(f"expected an odd prime, got {p}")
    if not isinstance(r, int) or r < 1:
        raise FieldError(f"extension degree must be a positive integer, got {r}")
    if r == 1:
        return make_prime_field(p)
    if cache is not None and not isinstance(cache, IrreducibleCache):
        cache = IrreducibleCache(cache)
    if cache is not None:
        modulus = cache.lookup(p, r)
        if modulus is not None:
            if is_irreducible(modulus, p):
                return FieldCtx(p, r, modulus)
            warnings.warn(f"cached modulus for ({p}, {r}) is reducible; recomputing")
    modulus = first_irreducible(p, r)
    if cache is not None:
        cache.store(p, r, modulus)
    return FieldCtx(p, r, modulus)


def field_of_order(q: int, cache=None) -> FieldCtx:
    p, r = factor_prime_power(q)
    return make_extension_field(p, r, cache)


# --- elements --------------------------------------------------------------

@dataclass(frozen=True)
class FieldElem:
    ctx: FieldCtx
    coeffs: tuple[int, ...]

    def _coerce(self, other) -> FieldElem:
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise ContextMismatchError(
                    f"cannot combine elements of F_{self.ctx.q} and F_{other.ctx.q}")
            return other
        if isinstance(other, (int, np.integer)):
            return self.ctx(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return FieldElem(self.ctx, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ctx = self.ctx
        if ctx.r == 1:
            return FieldElem(ctx, (self.coeffs[0] * other.coeffs[0] % ctx.p,))
        prod = _fp_mul(_trim(list(self.coeffs)), _trim(list(other.coeffs)), ctx.p)
        rem = _fp_divmod(prod, ctx.modulus, ctx.p)[1]
        return FieldElem(ctx, tuple(rem) + (0,) * (ctx.r - len(rem)))

    __rmul__ = __mul__

    def inv(self) -> FieldElem:
        """Multiplicative inverse by the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError(f"0 has no inverse in F_{self.ctx.q}")
        ctx, p = self.ctx, self.ctx.p
        if ctx.r == 1:
            return FieldElem(ctx, (pow(self.coeffs[0], -1, p),))
        # invariant: s * self == r0 (mod modulus)
        r0, r1 = _trim(list(self.coeffs)), list(ctx.modulus)
        s0, s1 = [1], []
        while len(r0) > 1:
            quot, rem = _fp_divmod(r1, r0, p)
            r1, r0 = r0, rem
            s1, s0 = s0, _fp_sub(s1, _fp_mul(quot, s0, p), p)
        c = pow(r0[0], -1, p)
        s0 = [x * c % p for x in s0]
        return FieldElem(ctx, tuple(s0) + (0,) * (ctx.r - len(s0)))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, e: int) -> FieldElem:
        e = int(e)
        if e < 0:
            return self.inv() ** (-e)
        acc, base = self.ctx.one, self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            return self == self.ctx(other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.modulus, self.coeffs))

    def in_prime_subfield(self) -> bool:
        return not any(self.coeffs[1:])

    def __int__(self):
        if not self.in_prime_subfield():
            raise FieldError(f"{self!r} is not in the prime subfield")
        return self.coeffs[0]

    def is_square(self) -> bool:
        """Euler's criterion: x == 0 or x^((q-1)/2) == 1."""
        return self.is_zero() or self ** ((self.ctx.q - 1) // 2) == 1

    def __str__(self):
        if self.in_prime_subfield():
            return str(self.coeffs[0])
        return ":".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"F{self.ctx.q}({self})"


def inv(x: FieldElem) -> FieldElem:
    return x.inv()


def is_square(x: FieldElem) -> bool:
    return x.is_square()


def enumerate_nonzero(ctx: FieldCtx) -> list[FieldElem]:
    return ctx.enumerate_nonzero()
