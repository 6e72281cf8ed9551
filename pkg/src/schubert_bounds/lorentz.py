"""Exact Lorentzian test for homogeneous polynomials with nonnegative coefficients.

The test implemented here: support is M-convex, and for every multi-index
mu of order d - 2 the quadratic form d^mu f has a Hessian with at most one
positive eigenvalue. Eigenvalue signs come from the characteristic
polynomial and Descartes' rule, so no floating point is involved.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .combinat import RangeError
from .linalg import eigen_sign_counts
from .polyring import Poly, partial_derivative


class NotHomogeneous(ValueError):
    pass


class SupportSet(frozenset):
    """Nonempty set of exponent vectors sharing one coordinate sum."""

    def __new__(cls, points: Iterable[Sequence[int]]):
        pts = frozenset(tuple(p) for p in points)
        if not pts:
            raise ValueError("support set must be nonempty")
        if len({len(p) for p in pts}) != 1:
            raise ValueError("support points have different lengths")
        if len({sum(p) for p in pts}) != 1:
            raise NotHomogeneous("support points have different degrees")
        return super().__new__(cls, pts)

    @property
    def degree(self) -> int:
        return sum(next(iter(self)))


def is_m_convex(points: Iterable[Sequence[int]]) -> bool:
    """Exchange axiom: a_i > b_i implies a - e_i + e_j in S for some j with a_j < b_j."""
    s = points if isinstance(points, SupportSet) else SupportSet(points)
    for a, b in itertools.permutations(s, 2):
        for i in range(len(a)):
            if a[i] <= b[i]:
                continue
            ok = False
            for j in range(len(a)):
                if a[j] < b[j]:
                    moved = list(a)
                    moved[i] -= 1
                    moved[j] += 1
                    if tuple(moved) in s:
                        ok = True
                        break
            if not ok:
                return False
    return True


def positive_eigenvalue_count(matrix: Sequence[Sequence]) -> int:
    m = [list(r) for r in matrix]
    if any(m[i][j] != m[j][i] for i in range(len(m)) for j in range(len(m))):
        raise ValueError("matrix is not symmetric")
    return eigen_sign_counts(m)[0]


def hessian(q: Poly) -> list[list]:
    """Hessian of a quadratic form (constant matrix)."""
    n = q.n
    h = [[0] * n for _ in range(n)]
    for e, c in q.terms():
        nz = [i for i, a in enumerate(e) if a]
        if len(nz) == 1:
            h[nz[0]][nz[0]] += 2 * c
        else:
            i, j = nz
            h[i][j] += c
            h[j][i] += c
    return h


def multi_indices(n: int, order: int) -> Iterator[tuple[int, ...]]:
    """All exponent vectors of length n with coordinate sum ``order``."""
    for bars in itertools.combinations(range(order + n - 1), n - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(order + n - 1 - prev - 1)
        yield tuple(out)


MAX_DEGREE = 8
MAX_VARS = 6


def is_lorentzian(f: Poly, max_degree: int = MAX_DEGREE, max_vars: int = MAX_VARS) -> bool:
    if not f:
        return True
    if not f.is_homogeneous() or any(c < 0 for _, c in f.terms()):
        return False
    d = f.degree()
    if d > max_degree or f.n > max_vars:
        raise RangeError(f"degree {d} / {f.n} variables exceeds the guard ({max_degree}, {max_vars})")
    if d <= 1:
        return True
    if not is_m_convex(f.support()):
        return False
    for mu in multi_indices(f.n, d - 2):
        q = partial_derivative(f, mu)
        if q and positive_eigenvalue_count(hessian(q)) > 1:
            return False
    return True
