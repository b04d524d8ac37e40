"""Exact determinants over finite fields and over Q.

Rationals are :class:`fractions.Fraction`.  Field matrices keep their
entries as an int64 coefficient array of shape ``(n, n, r)`` so elimination
runs vectorised over whole rows.
"""
from __future__ import annotations

import operator
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Sequence

import numpy as np

from .field_core import ContextMismatchError, FieldCtx, FieldElem


class SquareMatrix:
    """n x n matrix over a FieldCtx."""

    __slots__ = ("ctx", "array")

    def __init__(self, ctx: FieldCtx, array: np.ndarray):
        array = np.asarray(array, dtype=np.int64)
        if array.ndim != 3 or array.shape[0] != array.shape[1] or array.shape[2] != ctx.r:
            raise ValueError(f"expected an (n, n, {ctx.r}) coefficient array, got {array.shape}")
        self.ctx = ctx
        self.array = array % ctx.p

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows: Sequence[Sequence]) -> SquareMatrix:
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix is not square")
        return cls(ctx, ctx.to_array(rows).reshape(n, n, ctx.r))

    @property
    def n(self) -> int:
        return self.array.shape[0]

    def __getitem__(self, ij) -> FieldElem:
        i, j = ij
        return self.ctx.from_array(self.array[i, j])

    def rows(self) -> list[list[FieldElem]]:
        return self.ctx.from_array(self.array) if self.n else []

    def __matmul__(self, other: SquareMatrix) -> SquareMatrix:
        if other.ctx != self.ctx:
            raise ContextMismatchError("matrices over different fields")
        ctx = self.ctx
        # (i, k, 1) * (1, k, j) summed over k
        prod = ctx.vmul(self.array[:, :, None, :], other.array[None, :, :, :])
        return SquareMatrix(ctx, prod.sum(axis=1) % ctx.p)

    def permuted(self, perm: Sequence[int]) -> SquareMatrix:
        """Simultaneous row and column permutation P M P^T."""
        idx = np.asarray(perm)
        return SquareMatrix(self.ctx, self.array[np.ix_(idx, idx)])


def det_field(m: SquareMatrix) -> FieldElem:
    """Gaussian elimination, pivoting on the first nonzero entry of each column."""
    ctx, n = m.ctx, m.n
    a = m.array.copy()
    det = ctx.one
    for k in range(n):
        nz = np.flatnonzero(a[k:, k].any(axis=-1))
        if nz.size == 0:
            return ctx.zero
        piv = k + nz[0]
        if piv != k:
            a[[k, piv]] = a[[piv, k]]
            det = -det
        pivot = ctx.from_array(a[k, k])
        det = det * pivot
        if k + 1 == n:
            break
        factors = ctx.vmul(a[k + 1:, k], np.asarray(pivot.inv().coeffs))
        a[k + 1:, k:] = ctx.vsub(a[k + 1:, k:], ctx.vmul(factors[:, None, :], a[k, None, k:]))
    return det


class RationalMatrix:
    """n x n matrix of Fractions."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [[Fraction(x) for x in row] for row in rows]
        if any(len(row) != len(self.rows) for row in self.rows):
            raise ValueError("matrix is not square")

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"RationalMatrix({self.rows!r})"


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free elimination; every division below is exact."""
    a = [list(map(int, row)) for row in rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1] if n else 1


def det_rational(m: RationalMatrix | Sequence[Sequence]) -> Fraction:
    """Clear each row's denominators, run Bareiss on the integer matrix and
    divide by the accumulated scale."""
    rows = m.rows if isinstance(m, RationalMatrix) else RationalMatrix(m).rows
    scale = 1
    int_rows = []
    for row in rows:
        d = lcm(*(x.denominator for x in row)) if row else 1
        scale *= d
        int_rows.append([x.numerator * (d // x.denominator) for x in row])
    return Fraction(bareiss_det(int_rows), scale)


def charpoly_rational(m: RationalMatrix | Sequence[Sequence]) -> list[Fraction]:
    """Monic det(tI - M), constant term first, by Faddeev-LeVerrier.

    M is scaled by the lcm D of its denominators first; the recurrence then
    stays in the integers and coefficient k of the scaled matrix is divided
    by D**k at the end.
    """
    rows = m.rows if isinstance(m, RationalMatrix) else RationalMatrix(m).rows
    n = len(rows)
    if n == 0:
        raise ValueError("characteristic polynomial of an empty matrix")
    d = lcm(*(x.denominator for row in rows for x in row))
    a = np.array([[x.numerator * (d // x.denominator) for x in row] for row in rows], dtype=object)
    eye = np.identity(n, dtype=int).astype(object)
    coeffs = [0] * (n + 1)   # coeffs[k] multiplies t**(n-k)
    coeffs[0] = 1
    mk = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        mk = a.dot(mk) + coeffs[k - 1] * eye
        tr = int(np.trace(a.dot(mk)))
        assert tr % k == 0
        coeffs[k] = -tr // k
    return [Fraction(coeffs[k], d ** k) for k in range(n, -1, -1)]


def _product(values, one):
    return reduce(operator.mul, values, one)


def _one_like(x):
    return x * 0 + 1


def vandermonde_product(xs: Sequence):
    """prod over i < j of (x_j - x_i); 1 for fewer than two points."""
    if not xs:
        return 1
    return _product((xs[j] - xs[i] for j in range(len(xs)) for i in range(j)), _one_like(xs[0]))


def cauchy_like_det(p_coeffs: Sequence, xs: Sequence, ys: Sequence):
    """Closed form of det[P(x_i y_j)] for P = sum p_k T^k of degree < n:
    prod(p_k) * V(xs) * V(ys)."""
    n = len(p_coeffs)
    if n == 0 or len(xs) != n or len(ys) != n:
        raise ValueError(f"need n coefficients and n points each, got "
                         f"{len(p_coeffs)}, {len(xs)}, {len(ys)}")
    return _product(p_coeffs[1:], p_coeffs[0]) * vandermonde_product(xs) * vandermonde_product(ys)


def _horner(coeffs: Sequence, x):
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def cauchy_like_matrix(p_coeffs: Sequence, xs: Sequence, ys: Sequence) -> list[list]:
    return [[_horner(p_coeffs, x * y) for y in ys] for x in xs]


def det_generic(rows: Sequence[Sequence]):
    """Dispatch on entry type: FieldElem entries go to det_field, anything
    else is treated as rational."""
    if rows and isinstance(rows[0][0], FieldElem):
        return det_field(SquareMatrix.from_rows(rows[0][0].ctx, rows))
    return det_rational(rows)


def cauchy_like_check(p_coeffs: Sequence, xs: Sequence, ys: Sequence) -> tuple:
    """(closed form, determinant of the assembled matrix)."""
    return cauchy_like_det(p_coeffs, xs, ys), det_generic(cauchy_like_matrix(p_coeffs, xs, ys))
