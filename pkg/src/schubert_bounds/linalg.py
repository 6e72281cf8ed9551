"""Exact linear algebra over the integers and rationals: ranks and characteristic polynomials."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def _as_integer_rows(rows):
    rows = [list(r) for r in rows]
    if any(isinstance(x, Fraction) and x.denominator != 1 for r in rows for x in r):
        # clear denominators row by row; rank is unchanged
        out = []
        for r in rows:
            scale = lcm(*(Fraction(x).denominator for x in r))
            out.append([int(Fraction(x) * scale) for x in r])
        return out
    return [[int(x) for x in r] for r in rows]


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer (or rational) matrix by fraction-free Bareiss elimination."""
    m = _as_integer_rows(rows)
    if not m:
        return 0
    ncols = len(m[0])
    if any(len(r) != ncols for r in m):
        raise ValueError("ragged matrix")
    nrows = len(m)
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            lead = m[r][col]
            row = m[r]
            top = m[rank]
            for c in range(col + 1, ncols):
                q, rem = divmod(p * row[c] - lead * top[c], prev)
                assert rem == 0, "Bareiss step left a remainder"
                row[c] = q
            row[col] = 0
        prev = p
        rank += 1
    return rank


def charpoly(matrix: Sequence[Sequence]) -> list:
    """Coefficients of det(t I - A), leading coefficient first.

    Berkowitz's division-free recurrence: each step borders the leading
    principal submatrix with one more row and column and multiplies the
    previous coefficient vector by a lower-triangular Toeplitz matrix.
    """
    a = [list(r) for r in matrix]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("characteristic polynomial needs a square matrix")
    coeffs = [1]
    for r in range(n):
        # leading block M = a[:r][:r], column S = a[:r][r], row R = a[r][:r], corner a[r][r]
        S = [a[i][r] for i in range(r)]
        R = a[r][:r]
        toeplitz = [1, -a[r][r]]
        vec = S
        for _ in range(r):
            toeplitz.append(-sum(x * y for x, y in zip(R, vec)))
            vec = [sum(a[i][j] * vec[j] for j in range(r)) for i in range(r)]
        coeffs = [
            sum(toeplitz[i - j] * coeffs[j] for j in range(max(0, i - len(toeplitz) + 1), min(i, r) + 1))
            for i in range(r + 2)
        ]
    return coeffs


def sign_variations(seq: Sequence) -> int:
    signs = [x > 0 for x in seq if x != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def eigen_sign_counts(matrix: Sequence[Sequence]) -> tuple[int, int, int]:
    """(#positive, #negative, #zero) eigenvalues of a real symmetric matrix.

    All roots of the characteristic polynomial are real, so Descartes' rule
    of signs is exact once the zero roots are factored out.
    """
    coeffs = charpoly(matrix)
    zeros = 0
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
        zeros += 1
    deg = len(coeffs) - 1
    pos = sign_variations(coeffs)
    # p(-t): the coefficient of t^k picks up (-1)^k
    neg = sign_variations([c * (-1) ** (deg - i) for i, c in enumerate(coeffs)])
    return pos, neg, zeros
