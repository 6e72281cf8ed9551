"""Schubert polynomials by divided differences, key polynomials by Demazure operators."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .combinat import Composition, Permutation
from .polyring import Poly, demazure, divided_difference


def _staircase(n: int) -> Poly:
    return Poly.monomial(tuple(n - 1 - i for i in range(n)))


@lru_cache(maxsize=None)
def _schubert(w: Permutation) -> Poly:
    asc = w.ascents()
    if not asc:
        return _staircase(len(w))
    i = asc[0]
    return divided_difference(_schubert(w.swap(i)), i)


def schubert_poly(w: Sequence[int], ascent: int | None = None) -> Poly:
    """Schubert polynomial of w in len(w) variables.

    The recursion descends from the longest element via the first ascent.
    Passing ``ascent`` forces the first step through that position instead,
    which is how well-definedness gets checked.
    """
    w = Permutation(w)
    if ascent is None:
        return _schubert(w)
    if ascent not in w.ascents():
        raise ValueError(f"position {ascent} is not an ascent of {w}")
    return divided_difference(_schubert(w.swap(ascent)), ascent)


@lru_cache(maxsize=None)
def _key(a: Composition, n: int) -> Poly:
    for i in range(len(a) - 1):
        if a[i] < a[i + 1]:
            swapped = list(a)
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            return demazure(_key(Composition(swapped), n), i + 1)
    return Poly.monomial(tuple(a) + (0,) * (n - len(a)))


def key_poly(a: Sequence[int], n: int | None = None) -> Poly:
    """Key polynomial of a, in ``n`` variables (default len(a)).

    A partition gives the monomial x^a. Otherwise sort a toward a partition
    one adjacent swap at a time, applying pi_i at each rise a_i < a_{i+1}.
    """
    a = Composition(a)
    n = len(a) if n is None else n
    if n < len(a):
        raise ValueError(f"need at least {len(a)} variables, got {n}")
    return _key(a, n)


def clear_caches() -> None:
    _schubert.cache_clear()
    _key.cache_clear()
