"""Flagged Weyl module side: minors of the generic upper-triangular matrix Y.

Polynomials in the entries y_ij (i <= j) are ``YPoly`` objects: a mapping
from a monomial, written as a sorted tuple of (i, j) index pairs with
repetition, to an integer coefficient. The span of the products f_C over the
sub-diagrams C <= D with a fixed weight x^C has dimension equal to the
coefficient of x^C in the dual character of the module.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .combinat import SCHUBERT_MAX_PATTERNS, Permutation, RangeError, comp_occurrences, perm_occurrences
from .diagrams import Diagram, enumerate_sub_diagrams, monomial_of, rothe_diagram, skyline_diagram
from .linalg import exact_rank
from .polyring import DimensionError, Poly

YMonomial = tuple[tuple[int, int], ...]


class InvalidOccurrence(ValueError):
    """The supplied pattern occurrence is not the extremal one the construction needs."""


class YPoly:
    """Sparse integer polynomial in the upper-triangular indeterminates y_ij."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[YMonomial, int] | Iterable[tuple[YMonomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[YMonomial, int] = {}
        for mono, c in items:
            mono = tuple(sorted(tuple(p) for p in mono))
            for i, j in mono:
                if i > j:
                    raise ValueError(f"y_{i}{j} lies below the diagonal of an upper-triangular matrix")
            acc[mono] = acc.get(mono, 0) + c
        self._terms = {m: c for m, c in sorted(acc.items()) if c != 0}

    @classmethod
    def var(cls, i: int, j: int) -> "YPoly":
        return cls({((i, j),): 1})

    @classmethod
    def one(cls) -> "YPoly":
        return cls({(): 1})

    def terms(self):
        return iter(self._terms.items())

    def monomials(self) -> list[YMonomial]:
        return list(self._terms)

    def coeff(self, mono: YMonomial) -> int:
        return self._terms.get(tuple(sorted(mono)), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, YPoly):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __add__(self, other: "YPoly") -> "YPoly":
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return YPoly(acc)

    def __neg__(self) -> "YPoly":
        return YPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "YPoly") -> "YPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return YPoly({m: c * other for m, c in self._terms.items()})
        acc: dict[YMonomial, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = tuple(sorted(ma + mb))
                acc[m] = acc.get(m, 0) + ca * cb
        return YPoly(acc)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"YPoly({self._terms!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for m, c in self._terms.items():
            body = "*".join(f"y{i}_{j}" for i, j in m) or "1"
            if abs(c) != 1 or not m:
                body = f"{abs(c)}*{body}" if m else str(abs(c))
            out.append(("-" if c < 0 else "+", body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        return text + "".join(f" {s} {b}" for s, b in out[1:])


_ZERO = YPoly()


@lru_cache(maxsize=None)
def _det(rows: tuple[int, ...], cols: tuple[int, ...]) -> YPoly:
    if not rows:
        return YPoly.one()
    # the last row has the fewest nonzero entries: y_rc vanishes unless r <= c
    r = rows[-1]
    k = len(rows) - 1
    sub_rows = rows[:-1]
    total = _ZERO
    for pos, c in enumerate(cols):
        if r > c:
            continue
        minor_ = _det(sub_rows, cols[:pos] + cols[pos + 1:])
        if not minor_:
            continue
        term = YPoly.var(r, c) * minor_
        total = total + (term if (k + pos) % 2 == 0 else -term)
    return total


def minor(rows: Iterable[int], cols: Iterable[int]) -> YPoly:
    """det of Y restricted to the given row and column index sets."""
    rows, cols = tuple(sorted(rows)), tuple(sorted(cols))
    if len(rows) != len(cols):
        raise DimensionError(f"minor needs equal sizes, got {len(rows)} rows and {len(cols)} columns")
    return _det(rows, cols)


def f_C(c: Diagram, d: Diagram) -> YPoly:
    """Product over columns of det(Y with rows C_j and columns D_j)."""
    if c.n != d.n:
        raise DimensionError(f"diagrams of size {c.n} and {d.n}")
    out = YPoly.one()
    for j, (cj, dj) in enumerate(zip(c.columns, d.columns), start=1):
        if len(cj) != len(dj):
            raise DimensionError(f"column {j}: |C_j| = {len(cj)} but |D_j| = {len(dj)}")
        out = out * minor(cj, dj)
        if not out:
            return out
    return out


def span_rank(polys: Sequence[YPoly]) -> int:
    """Dimension of the linear span of the given y-polynomials."""
    columns = sorted({m for p in polys for m in p.monomials()})
    index = {m: k for k, m in enumerate(columns)}
    rows = []
    for p in polys:
        row = [0] * len(columns)
        for m, c in p.terms():
            row[index[m]] = c
        rows.append(row)
    return exact_rank(rows)


@dataclass(frozen=True)
class WeightSpaceReport:
    weight: tuple[int, ...]
    members: tuple[tuple[Diagram, YPoly], ...]
    rank: int

    def to_json(self) -> dict:
        return {
            "weight": list(self.weight),
            "members": [{"diagram": c.to_text(), "f_C": str(f)} for c, f in self.members],
            "rank": self.rank,
        }


def _report(d: Diagram, weight: tuple[int, ...], members: list[Diagram]) -> WeightSpaceReport:
    expanded = []
    for c in members:
        f = f_C(c, d)
        assert f, f"f_C vanished for a sub-diagram {c} <= {d}"
        expanded.append((c, f))
    rank = span_rank([f for _, f in expanded])
    return WeightSpaceReport(weight, tuple(expanded), rank)


def weight_space_rank(d: Diagram, weight: Sequence[int]) -> WeightSpaceReport:
    weight = tuple(weight)
    if len(weight) != d.n:
        raise DimensionError(f"weight has length {len(weight)}, diagram has size {d.n}")
    members = [c for c in enumerate_sub_diagrams(d) if monomial_of(c) == weight]
    return _report(d, weight, members)


def weight_spaces(d: Diagram) -> list[WeightSpaceReport]:
    """All nonzero weight spaces of the module of d, in canonical weight order."""
    groups: dict[tuple[int, ...], list[Diagram]] = defaultdict(list)
    for c in enumerate_sub_diagrams(d):
        groups[monomial_of(c)].append(c)
    return [_report(d, w, groups[w]) for w in sorted(groups, reverse=True)]


def dual_character(d: Diagram) -> Poly:
    """Sum over weights of (rank of the weight space) * x^weight."""
    return Poly(d.n, {r.weight: r.rank for r in weight_spaces(d)})


# dependent families built from a pattern occurrence

def _family(d: Diagram, i0: int, k0: int, j0: int, l0: int) -> list[Diagram]:
    t = k0 - i0 + 1
    family = []
    for m in range(1, t + 1):
        a_m = i0 + m - 1
        cols = list(d.columns)
        cols[l0 - 1] = tuple(sorted((set(d[l0]) - {k0}) | {a_m}))
        cols[j0 - 1] = tuple(sorted((set(d[j0]) | {i0}) - {a_m}))
        c = Diagram(d.n, tuple(cols))
        if not c <= d:
            raise InvalidOccurrence(f"constructed diagram {c} is not dominated by {d}")
        family.append(c)
    return family


def _canonical_perm_occurrence(w: Permutation, pattern) -> tuple[int, int, int, int] | None:
    occs = list(perm_occurrences(w, pattern))
    if not occs:
        return None
    i0 = max(o[0] for o in occs)
    k0 = min(o[1] for o in occs if o[0] == i0)
    return min(o for o in occs if o[0] == i0 and o[1] == k0)


def dependent_family(w: Sequence[int], occ: Sequence[int] | None = None) -> list[Diagram]:
    """Sub-diagrams C^(1..t) <= D(w) whose f_C are linearly dependent.

    ``occ`` = (i0, k0, p0, q0) are 1-based positions of an occurrence of 1432
    or 1423 with i0 as large as possible and then k0 as small as possible.
    When omitted, the 1432 occurrence is used if there is one, otherwise the
    1423 one, taking the lexicographically smallest (p0, q0).

    The two altered columns are the smaller and the larger of w_p0, w_q0; for
    1432 these are w_q0 and w_p0.
    """
    w = Permutation(w)
    if occ is None:
        for pattern in SCHUBERT_MAX_PATTERNS:
            occ = _canonical_perm_occurrence(w, pattern)
            if occ is not None:
                break
        else:
            raise InvalidOccurrence(f"{w} avoids 1432 and 1423")
    occ = tuple(occ)
    if len(occ) != 4 or not all(1 <= x <= len(w) for x in occ) or list(occ) != sorted(set(occ)):
        raise InvalidOccurrence(f"{occ} is not an increasing 4-tuple of positions in {w}")
    i0, k0, p0, q0 = occ
    values = [w[x - 1] for x in occ]
    pattern = next((p for p in SCHUBERT_MAX_PATTERNS if all(
        (values[a] < values[b]) == (p[a] < p[b]) for a in range(4) for b in range(4))), None)
    if pattern is None:
        raise InvalidOccurrence(f"positions {occ} of {w} do not form 1432 or 1423")
    occs = list(perm_occurrences(w, pattern))
    if i0 != max(o[0] for o in occs):
        raise InvalidOccurrence(f"i0={i0} is not the largest first position of a {pattern} occurrence")
    if k0 != min(o[1] for o in occs if o[0] == i0):
        raise InvalidOccurrence(f"k0={k0} is not the smallest second position for i0={i0}")
    j0, l0 = sorted((w[p0 - 1], w[q0 - 1]))
    return _family(rothe_diagram(w), i0, k0, j0, l0)


def dependent_family_skyline(a: Sequence[int]) -> list[Diagram]:
    """Analogue for a composition containing (0,2): i0 largest, then k0 smallest."""
    pairs = list(comp_occurrences(a, (0, 2)))
    if not pairs:
        raise InvalidOccurrence(f"{tuple(a)} avoids (0,2)")
    i0 = max(p[0] for p in pairs)
    k0 = min(p[1] for p in pairs if p[0] == i0)
    return _family(skyline_diagram(a), i0, k0, a[i0 - 1] + 1, a[k0 - 1])


DEPENDENCE_GUARD = 7


def dependence_terms(b: int) -> list[YPoly]:
    """g_1..g_b with g_m = y_{m b} * det(Y rows [b] minus m, columns 2..b)."""
    full = range(1, b + 1)
    return [YPoly.var(m, b) * minor([r for r in full if r != m], range(2, b + 1)) for m in full]


def verify_dependence_identity(b: int, guard: int = DEPENDENCE_GUARD) -> bool:
    """Check g_b = g_{b-1} - g_{b-2} + ... + (-1)^b g_1 as an exact identity."""
    if b < 2:
        raise ValueError("the identity needs b >= 2")
    if b > guard:
        raise RangeError(f"b={b} exceeds the guard {guard}")
    g = dependence_terms(b)
    rhs = YPoly()
    for m in range(1, b):
        term = g[m - 1]
        rhs = rhs + (term if (b - 1 - m) % 2 == 0 else -term)
    return g[b - 1] == rhs


def reduced_columns(d: Diagram) -> list[tuple[int, ...]]:
    """D_j minus its longest initial segment [a_j] = {1..a_j}."""
    out = []
    for col in d.columns:
        a = 0
        while a < len(col) and col[a] == a + 1:
            a += 1
        out.append(col[a:])
    return out


def reduced_columns_disjoint(d: Diagram) -> bool:
    seen: set[int] = set()
    for col in reduced_columns(d):
        if seen.intersection(col):
            return False
        seen.update(col)
    return True


def family_rank(family: Sequence[Diagram], d: Diagram) -> int:
    return span_rank([f_C(c, d) for c in family])
