"""Permutations, compositions and pattern containment."""

from __future__ import annotations

import itertools
import os
from typing import Iterator, Sequence


class RangeError(ValueError):
    """An enumeration or audit range exceeds its configured guard."""


ENUM_GUARD = int(os.environ.get("SCHUBERT_BOUNDS_ENUM_GUARD", "9"))


class Permutation(tuple):
    """One-line notation w_1 ... w_n of a bijection of {1..n}."""

    def __new__(cls, word: Sequence[int] = ()):
        word = tuple(int(v) for v in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"{word} is not a permutation of 1..{len(word)}")
        return super().__new__(cls, word)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """``1432`` (single digits) or ``1,4,3,2``."""
        text = text.strip()
        if "," in text:
            parts = [p.strip() for p in text.split(",")]
        else:
            parts = list(text)
        for pos, p in enumerate(parts):
            if not p.isdigit():
                raise ValueError(f"bad permutation entry {p!r} at position {pos + 1}")
        return cls(int(p) for p in parts)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(range(n, 0, -1))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def inversions(self) -> int:
        return sum(1 for a, b in itertools.combinations(self, 2) if a > b)

    def ascents(self) -> list[int]:
        """Positions i (1-based) with w_i < w_{i+1}."""
        return [i + 1 for i in range(len(self) - 1) if self[i] < self[i + 1]]

    def swap(self, i: int) -> "Permutation":
        """w s_i: exchange the entries in positions i and i+1."""
        w = list(self)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(w)

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))


class Composition(tuple):
    """Weak composition (alpha_1, ..., alpha_n) of nonnegative parts."""

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(v) for v in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"composition parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Composition":
        parts = [p.strip() for p in text.strip().strip("()").split(",")]
        for pos, p in enumerate(parts):
            if not p.isdigit():
                raise ValueError(f"bad composition part {p!r} at position {pos + 1}")
        return cls(int(p) for p in parts)

    def is_partition(self) -> bool:
        return all(a >= b for a, b in zip(self, self[1:]))

    def __str__(self) -> str:
        return ",".join(map(str, self))


def _perm_extend(w, p, chosen, start):
    k = len(chosen)
    if k == len(p):
        yield tuple(chosen)
        return
    # leave room for the remaining pattern letters
    for idx in range(start, len(w) - (len(p) - k) + 1):
        v = w[idx]
        if all((w[c] < v) == (p[j] < p[k]) for j, c in enumerate(chosen)):
            chosen.append(idx)
            yield from _perm_extend(w, p, chosen, idx + 1)
            chosen.pop()


def perm_occurrences(w: Sequence[int], p: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield 1-based position tuples where w contains p, in lexicographic order."""
    for occ in _perm_extend(tuple(w), tuple(p), [], 0):
        yield tuple(i + 1 for i in occ)


def perm_contains_pattern(w: Sequence[int], p: Sequence[int]) -> bool:
    if len(p) > len(w):
        return False
    return next(perm_occurrences(w, p), None) is not None


def _comp_compatible(a_s: int, a_t: int, b_s: int, b_t: int) -> bool:
    if (a_s <= a_t) != (b_s <= b_t) or (a_t <= a_s) != (b_t <= b_s):
        return False
    return abs(a_s - a_t) >= abs(b_s - b_t)


def comp_occurrences(a: Sequence[int], b: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Yield 1-based index tuples i_1 < ... < i_m at which a contains the composition pattern b."""
    a, b = tuple(a), tuple(b)
    m = len(b)

    def extend(chosen, start):
        k = len(chosen)
        if k == m:
            yield tuple(i + 1 for i in chosen)
            return
        for idx in range(start, len(a) - (m - k) + 1):
            if all(_comp_compatible(a[c], a[idx], b[j], b[k]) for j, c in enumerate(chosen)):
                chosen.append(idx)
                yield from extend(chosen, idx + 1)
                chosen.pop()

    yield from extend([], 0)


def comp_contains_pattern(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(b) > len(a):
        return False
    return next(comp_occurrences(a, b), None) is not None


SCHUBERT_MAX_PATTERNS = (Permutation((1, 4, 3, 2)), Permutation((1, 4, 2, 3)))

SCHUBERT_MIN_PATTERNS = tuple(
    Permutation.parse(s)
    for s in (
        "12543", "13254", "13524", "13542", "21543", "125364",
        "125634", "215364", "215634", "315264", "315624", "315642",
    )
)

KEY_MAX_PATTERNS = (Composition((0, 2)),)

KEY_MIN_PATTERNS = (
    Composition((0, 1, 2)),
    Composition((0, 0, 2, 2)),
    Composition((0, 0, 2, 1)),
    Composition((1, 0, 3, 2)),
    Composition((1, 0, 2, 2)),
)


def avoids_schubert_max(w: Sequence[int]) -> bool:
    return not any(perm_contains_pattern(w, p) for p in SCHUBERT_MAX_PATTERNS)


def avoids_schubert_min(w: Sequence[int]) -> bool:
    return not any(perm_contains_pattern(w, p) for p in SCHUBERT_MIN_PATTERNS)


def avoids_key_max(a: Sequence[int]) -> bool:
    return not any(comp_contains_pattern(a, p) for p in KEY_MAX_PATTERNS)


def avoids_key_min(a: Sequence[int]) -> bool:
    return not any(comp_contains_pattern(a, p) for p in KEY_MIN_PATTERNS)


def has_rise_of_two(a: Sequence[int]) -> bool:
    """Direct form of (0,2)-containment: some i < j with a_j - a_i >= 2."""
    low = None
    for v in a:
        if low is not None and v - low >= 2:
            return True
        low = v if low is None else min(low, v)
    return False


def enumerate_permutations(n: int, guard: int | None = None) -> Iterator[Permutation]:
    guard = ENUM_GUARD if guard is None else guard
    if n > guard:
        raise RangeError(f"n={n} exceeds the enumeration guard {guard}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


def enumerate_compositions(length: int, max_part: int, guard: int | None = None) -> Iterator[Composition]:
    guard = ENUM_GUARD if guard is None else guard
    if length > guard or max_part > guard:
        raise RangeError(f"length={length}, max_part={max_part} exceeds the enumeration guard {guard}")
    for parts in itertools.product(range(max_part + 1), repeat=length):
        yield Composition(parts)


def count_max_avoiders(n: int, guard: int | None = None) -> int:
    """Number of permutations of [n] avoiding both 1432 and 1423."""
    return sum(1 for w in enumerate_permutations(n, guard) if avoids_schubert_max(w))


def schroeder(k: int) -> int:
    """Large Schroeder number r_k: r_0 = 1, r_k = r_{k-1} + sum_{i<k} r_i r_{k-1-i}."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    r = [1]
    for m in range(1, k + 1):
        r.append(r[m - 1] + sum(r[i] * r[m - 1 - i] for i in range(m)))
    return r[k]
