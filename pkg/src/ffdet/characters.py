"""Quadratic characters and signs of permutations.

Signs are plain ints in {-1, 0, 1}; 0 only ever comes out of a character
evaluated at a non-coprime argument, never out of a permutation sign.
"""
from __future__ import annotations

from math import gcd
from typing import Mapping, Sequence

from .field_core import FieldCtx, FieldError, is_prime


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise FieldError(f"Legendre symbol needs an odd prime, got {p}")
    t = pow(a % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def jacobi(a: int, m: int) -> int:
    """Jacobi symbol (a/m) for odd m >= 1."""
    if m < 1 or m % 2 == 0:
        raise FieldError(f"Jacobi symbol needs an odd positive modulus, got {m}")
    a %= m
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


def chi3(k: int) -> int:
    """The quadratic character modulo 3."""
    return (0, 1, -1)[k % 3]


def chi3_bracket(k: int) -> int:
    """chi3(k) + chi3(1 - k): -2 when k = 2 (mod 3), else 1."""
    return -2 if k % 3 == 2 else 1


def lerch_sign(a: int, m: int) -> int:
    """Sign of x -> a*x on Z/m, by Lerch's closed form."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if gcd(a, m) != 1:
        raise ValueError(f"x -> {a}x is not a permutation of Z/{m}")
    if m % 2:
        return jacobi(a, m)
    if m % 4 == 2:
        return 1
    return -1 if a % 4 == 3 else 1


def perm_sign_bruteforce(perm: Mapping | Sequence) -> int:
    """Sign via cycle decomposition: (-1)^(#points - #cycles).

    ``perm`` is either a mapping over a finite set or a sequence where
    ``perm[i]`` is the image of ``i``.
    """
    mapping = dict(perm) if isinstance(perm, Mapping) else dict(enumerate(perm))
    if set(mapping.values()) != set(mapping):
        raise ValueError("not a bijection of a finite set onto itself")
    seen = set()
    cycles = 0
    for start in mapping:
        if start in seen:
            continue
        cycles += 1
        x = start
        while x not in seen:
            seen.add(x)
            x = mapping[x]
    return -1 if (len(mapping) - cycles) % 2 else 1


def multiplication_perm(a: int, m: int) -> dict[int, int]:
    return {x: a * x % m for x in range(m)}


def inversion_perm(ctx: FieldCtx) -> dict:
    """a -> 1/a on the nonzero elements of ``ctx``."""
    return {x: x.inv() for x in ctx.enumerate_nonzero()}


def sigma_inverse_sign(ctx: FieldCtx, *, check: bool = False) -> int:
    """Sign of inversion on F_q^x, (-1)^((q+1)/2).

    With ``check=True`` the inversion map is also built explicitly and its
    sign counted; a disagreement raises AssertionError.
    """
    q = ctx.q
    sign = -1 if ((q + 1) // 2) % 2 else 1
    if check:
        brute = perm_sign_bruteforce(inversion_perm(ctx))
        if brute != sign:
            raise AssertionError(f"inversion sign mismatch at q={q}: {brute} != {sign}")
    return sign
