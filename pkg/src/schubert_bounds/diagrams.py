"""Diagrams, column dominance and the Min/Max bound polynomials.

A diagram is a list of n columns, each a set of 1-based row indices in the
n x n grid. Columns are stored as sorted tuples so that comparing the k-th
least elements is positional.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from math import prod
from typing import Iterable, Iterator, Sequence

from .combinat import Composition, Permutation
from .polyring import Poly

Column = tuple[int, ...]


@dataclass(frozen=True)
class Diagram:
    n: int
    columns: tuple[Column, ...]

    def __post_init__(self):
        cols = tuple(tuple(sorted(set(c))) for c in self.columns)
        if len(cols) != self.n:
            raise ValueError(f"diagram needs {self.n} columns, got {len(cols)}")
        for j, col in enumerate(cols, start=1):
            if col and not (1 <= col[0] and col[-1] <= self.n):
                raise ValueError(f"column {j} has rows outside 1..{self.n}: {col}")
        object.__setattr__(self, "columns", cols)

    @classmethod
    def from_columns(cls, columns: Iterable[Iterable[int]], n: int | None = None) -> "Diagram":
        cols = [tuple(c) for c in columns]
        return cls(len(cols) if n is None else n, tuple(cols))

    @classmethod
    def empty(cls, n: int) -> "Diagram":
        return cls(n, ((),) * n)

    @classmethod
    def parse(cls, text: str) -> "Diagram":
        """Read the ``[[],[2,3],[2],[]]`` text form."""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"bad diagram text at position {exc.pos}: {exc.msg}") from None
        if not isinstance(data, list) or not all(isinstance(c, list) for c in data):
            raise ValueError("diagram text must be a list of lists of row indices")
        return cls.from_columns(data)

    def to_text(self) -> str:
        return json.dumps([list(c) for c in self.columns], separators=(",", ":"))

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, j: int) -> Column:
        """Column j, 1-based."""
        return self.columns[j - 1]

    def size(self) -> int:
        return sum(len(c) for c in self.columns)

    def boxes(self) -> set[tuple[int, int]]:
        return {(i, j) for j, col in enumerate(self.columns, start=1) for i in col}

    def __le__(self, other: "Diagram") -> bool:
        return diagram_leq(self, other)

    def __str__(self) -> str:
        return self.to_text()


def rothe_diagram(w: Sequence[int]) -> Diagram:
    """Boxes (i, j) with w_i > j and i < w^{-1}(j)."""
    w = Permutation(w)
    n = len(w)
    winv = w.inverse()
    cols = [tuple(i for i in range(1, n + 1) if w[i - 1] > j and i < winv[j - 1]) for j in range(1, n + 1)]
    return Diagram(n, tuple(cols))


def skyline_diagram(a: Sequence[int]) -> Diagram:
    """First a_i boxes of row i, in a grid of size max(len(a), max part)."""
    a = Composition(a)
    n = max(len(a), max(a, default=0))
    cols = [tuple(i for i, part in enumerate(a, start=1) if part >= j) for j in range(1, n + 1)]
    return Diagram(n, tuple(cols))


def column_leq(c: Iterable[int], d: Iterable[int]) -> bool:
    c, d = sorted(c), sorted(d)
    return len(c) == len(d) and all(x <= y for x, y in zip(c, d))


def diagram_leq(c: Diagram, d: Diagram) -> bool:
    return c.n == d.n and all(column_leq(x, y) for x, y in zip(c.columns, d.columns))


def column_bases(d: Sequence[int]) -> Iterator[Column]:
    """All C_j <= D_j in lexicographic order (bases of the Schubert matroid of D_j)."""
    d = tuple(sorted(d))
    k = len(d)

    def descend(prefix, lo):
        pos = len(prefix)
        if pos == k:
            yield tuple(prefix)
            return
        for v in range(lo, d[pos] + 1):
            prefix.append(v)
            yield from descend(prefix, v + 1)
            prefix.pop()

    yield from descend([], 1)


def count_column_bases(d: Sequence[int]) -> int:
    """#{C : C <= D_j} by a dynamic program over the sorted bounds."""
    d = sorted(d)
    if not d:
        return 1
    # ways[v] = number of valid prefixes whose last chosen element is v
    ways = {v: 1 for v in range(1, d[0] + 1)}
    for bound in d[1:]:
        nxt = {}
        running = 0
        for v in range(1, bound + 1):
            nxt[v] = running
            running += ways.get(v, 0)
        ways = {v: c for v, c in nxt.items() if c}
    return sum(ways.values())


def count_sub_diagrams(d: Diagram) -> int:
    return prod(count_column_bases(col) for col in d.columns)


def enumerate_sub_diagrams(d: Diagram) -> Iterator[Diagram]:
    per_column = [list(column_bases(col)) for col in d.columns]
    for cols in itertools.product(*per_column):
        yield Diagram(d.n, cols)


def monomial_of(c: Diagram) -> tuple[int, ...]:
    counts = Counter(i for col in c.columns for i in col)
    return tuple(counts.get(i, 0) for i in range(1, c.n + 1))


def max_poly(d: Diagram) -> Poly:
    return Poly(d.n, Counter(monomial_of(c) for c in enumerate_sub_diagrams(d)))


def min_poly(d: Diagram) -> Poly:
    return Poly(d.n, {monomial_of(c): 1 for c in enumerate_sub_diagrams(d)})
