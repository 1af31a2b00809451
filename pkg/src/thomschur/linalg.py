"""Exact determinants and linear solving.

Determinants work over any commutative ring whose elements support ``+ - *``
(ints, Fractions, :class:`Poly`).  Bareiss elimination additionally needs
exact division, dispatched through :func:`_exact_div`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .polyring import Poly

LAPLACE_MAX = 5


class Inconsistent(ValueError):
    """The linear system has no solution."""


class Underdetermined(ValueError):
    """The linear system has a positive-dimensional solution space."""

    def __init__(self, message: str, nullity: int):
        super().__init__(message)
        self.nullity = nullity


def _is_zero(a) -> bool:
    return a.is_zero() if isinstance(a, Poly) else a == 0


def _exact_div(a, b):
    if isinstance(a, Poly) or isinstance(b, Poly):
        if not isinstance(a, Poly):
            a = Poly.const(a)
        if not isinstance(b, Poly):
            b = Poly.const(b)
        return a.div_exact(b)
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"{a} not divisible by {b}")
        return q
    return Fraction(a) / b


def det_laplace(M: Sequence[Sequence]):
    """Cofactor expansion along rows, memoised on the set of used columns.

    Costs s * 2**(s-1) ring multiplications instead of s!.
    """
    s = len(M)
    if s == 0:
        return 1
    # level k holds minors on rows 0..k-1 keyed by the column bitmask used
    level = {0: 1}
    for row in M:
        nxt: dict = {}
        for mask, minor in level.items():
            if _is_zero(minor):
                continue
            # sign of placing this row's entry in column q is the parity of
            # used columns to the right of q
            for q in range(s):
                if mask >> q & 1:
                    continue
                a = row[q]
                if _is_zero(a):
                    continue
                right = bin(mask >> (q + 1)).count("1")
                term = minor * a
                if right & 1:
                    term = -term
                key = mask | (1 << q)
                prev = nxt.get(key)
                nxt[key] = term if prev is None else prev + term
        level = nxt
        if not level:
            return 0
    return level.get((1 << s) - 1, 0)


def det_bareiss(M: Sequence[Sequence]):
    """Fraction-free Gaussian elimination (Bareiss) with row pivoting."""
    A = [list(row) for row in M]
    s = len(A)
    if s == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(s - 1):
        if _is_zero(A[k][k]):
            for j in range(k + 1, s):
                if not _is_zero(A[j][k]):
                    A[k], A[j] = A[j], A[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = A[k][k]
        for i in range(k + 1, s):
            for j in range(k + 1, s):
                A[i][j] = _exact_div(A[i][j] * piv - A[i][k] * A[k][j], prev)
            A[i][k] = 0
        prev = piv
    d = A[s - 1][s - 1]
    return -d if sign < 0 else d


def det(M: Sequence[Sequence]):
    """Cofactor expansion up to size 5, Bareiss above."""
    if len(M) <= LAPLACE_MAX:
        return det_laplace(M)
    return det_bareiss(M)


def rref(rows: list, ncols: int):
    """Reduced row echelon form over Q, in place on Fraction rows.

    Returns the list of pivot columns.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        if p != 1:
            rows[r] = [v / p for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                ri, rr = rows[i], rows[r]
                rows[i] = [a - f * b for a, b in zip(ri, rr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def solve_unique(A: Sequence[Sequence], b: Sequence) -> list:
    """Exact unique solution of ``A x = b`` over Q.

    Raises :class:`Inconsistent` or :class:`Underdetermined`.
    """
    n = len(A[0]) if A else 0
    rows = [[Fraction(v) for v in row] + [Fraction(rhs)] for row, rhs in zip(A, b)]
    pivots = rref(rows, n + 1)
    if n in pivots:
        raise Inconsistent("linear system is inconsistent")
    if len(pivots) < n:
        raise Underdetermined(
            f"solution space has dimension {n - len(pivots)}", n - len(pivots))
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = rows[i][n]
    return x


def rank(A: Sequence[Sequence]) -> int:
    if not A:
        return 0
    rows = [[Fraction(v) for v in row] for row in A]
    return len(rref(rows, len(rows[0])))
