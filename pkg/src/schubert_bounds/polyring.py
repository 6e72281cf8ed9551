"""Exact sparse polynomials in x1..xn.

A polynomial maps exponent tuples to nonzero coefficients. ``Poly`` holds
Python integers, ``RatPoly`` holds ``fractions.Fraction``. Both are immutable
and hashable; every operation returns a fresh object in canonical form.

    x1^2*x2 + 3  in 3 variables  ->  {(2, 1, 0): 1, (0, 0, 0): 3}

Canonical order is descending lexicographic on exponent vectors, so the
leading term is printed first.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Exponent = Tuple[int, ...]
Coeff = Union[int, Fraction]


class DimensionError(ValueError):
    """Raised when two polynomials live in different ambient variable counts."""


class Poly:
    """Sparse polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exponent, Coeff] | Iterable[tuple[Exponent, Coeff]] = ()):
        if n < 0:
            raise ValueError(f"variable count must be nonnegative, got {n}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Exponent, Coeff] = {}
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != n:
                raise DimensionError(f"exponent {exp} has length {len(exp)}, expected {n}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            acc[exp] = acc.get(exp, 0) + self._check_coeff(c)
        self.n = n
        self._terms = {e: c for e, c in sorted(acc.items(), reverse=True) if c != 0}
        self._hash = None

    @classmethod
    def _check_coeff(cls, c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise TypeError(f"{cls.__name__} needs integer coefficients, got {c}")
            return int(c)
        if isinstance(c, bool) or not isinstance(c, int):
            raise TypeError(f"{cls.__name__} needs integer coefficients, got {c!r}")
        return c

    # construction helpers

    @classmethod
    def zero(cls, n: int):
        return cls(n)

    @classmethod
    def one(cls, n: int):
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, exp: Iterable[int], coeff: Coeff = 1):
        exp = tuple(exp)
        return cls(len(exp), {exp: coeff})

    @classmethod
    def var(cls, n: int, i: int):
        """The variable x_i, 1-based."""
        if not 1 <= i <= n:
            raise IndexError(f"variable index {i} outside 1..{n}")
        exp = [0] * n
        exp[i - 1] = 1
        return cls(n, {tuple(exp): 1})

    # container protocol

    def terms(self) -> Iterator[tuple[Exponent, Coeff]]:
        return iter(self._terms.items())

    def coeff(self, exp: Iterable[int]) -> Coeff:
        return self._terms.get(tuple(exp), 0)

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.n}, {self._terms!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # arithmetic

    def _same_ring(self, other) -> None:
        if self.n != other.n:
            raise DimensionError(f"ambient variable counts differ: {self.n} vs {other.n}")

    def _result_type(self, other):
        return RatPoly if isinstance(self, RatPoly) or isinstance(other, RatPoly) else Poly

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            cls = RatPoly if isinstance(other, Fraction) else Poly
            return cls(self.n, {(0,) * self.n: other})
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        self._same_ring(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return self._result_type(other)(self.n, acc)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        self._same_ring(other)
        acc: Dict[Exponent, Coeff] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = tuple(a + b for a, b in zip(ea, eb))
                acc[e] = acc.get(e, 0) + ca * cb
        return self._result_type(other)(self.n, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = type(self).one(self.n)
        for _ in range(k):
            out = out * self
        return out

    # structure

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def swap(self, i: int):
        """s_i f: exchange x_i and x_{i+1} (1-based)."""
        self._check_index(i)
        k = i - 1
        out = {}
        for e, c in self._terms.items():
            e2 = list(e)
            e2[k], e2[k + 1] = e2[k + 1], e2[k]
            out[tuple(e2)] = c
        return type(self)(self.n, out)

    def extend(self, n: int):
        """Same polynomial viewed in n variables; trailing unused variables may be dropped."""
        if n < self.n:
            if any(any(e[n:]) for e in self._terms):
                raise DimensionError(f"cannot drop variables x{n + 1}.. that occur in the polynomial")
            return type(self)(n, {e[:n]: c for e, c in self._terms.items()})
        pad = (0,) * (n - self.n)
        return type(self)(n, {e + pad: c for e, c in self._terms.items()})

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.n - 1:
            raise IndexError(f"operator index {i} outside 1..{self.n - 1}")

    # serialization

    def to_json(self) -> list:
        return [{"exp": list(e), "coef": str(c)} for e, c in self._terms.items()]

    @classmethod
    def from_json(cls, data: list, n: int | None = None):
        if n is None:
            if not data:
                raise ValueError("cannot infer variable count of an empty term list; pass n")
            n = len(data[0]["exp"])
        terms = []
        rational = False
        for item in data:
            c = Fraction(item["coef"])
            rational |= c.denominator != 1
            terms.append((tuple(item["exp"]), c))
        if rational and cls is Poly:
            return RatPoly(n, terms)
        return cls(n, terms)


class RatPoly(Poly):
    """Sparse polynomial with rational coefficients."""

    __slots__ = ()

    @classmethod
    def _check_coeff(cls, c):
        if isinstance(c, bool) or not isinstance(c, (int, Fraction)):
            raise TypeError(f"RatPoly needs rational coefficients, got {c!r}")
        return Fraction(c)



def add(f: Poly, g: Poly) -> Poly:
    return f + g


def mul(f: Poly, g: Poly) -> Poly:
    return f * g


def _geometric_block(hi: int, lo: int) -> list[Tuple[int, int]]:
    # (u^hi v^lo - u^lo v^hi) / (u - v) for hi > lo
    # = (u v)^lo * sum_{r=0}^{hi-lo-1} u^(hi-lo-1-r) v^r
    span = hi - lo
    return [(lo + span - 1 - r, lo + r) for r in range(span)]


def divided_difference(f: Poly, i: int) -> Poly:
    """Apply the divided difference operator at position i (1-based).

    Each monomial x^a pairs with x^(s_i a); the quotient of the pair is a
    geometric sum, so no general polynomial division is needed.
    """
    f._check_index(i)
    k = i - 1
    acc: Dict[Exponent, Coeff] = {}
    for e, c in f.terms():
        p, q = e[k], e[k + 1]
        if p == q:
            continue
        sign = 1 if p > q else -1
        hi, lo = max(p, q), min(p, q)
        for a, b in _geometric_block(hi, lo):
            e2 = e[:k] + (a, b) + e[k + 2:]
            acc[e2] = acc.get(e2, 0) + sign * c
    return type(f)(f.n, acc)


def demazure(f: Poly, i: int) -> Poly:
    """pi_i f = d_i(x_i f)."""
    f._check_index(i)
    return divided_difference(f * type(f).var(f.n, i), i)


def _factorial_of(exp: Exponent) -> int:
    return math.prod(math.factorial(e) for e in exp)


def normalize_N(f: Poly) -> RatPoly:
    """Divide the coefficient of x^mu by mu_1! ... mu_n!."""
    return RatPoly(f.n, {e: Fraction(c) / _factorial_of(e) for e, c in f.terms()})


def coeffwise_leq(f: Poly, g: Poly) -> bool:
    """True iff every coefficient of f is at most the matching one of g."""
    f._same_ring(g)
    keys = set(f.support()) | set(g.support())
    return all(f.coeff(e) <= g.coeff(e) for e in keys)


def partial_derivative(f: Poly, exp: Iterable[int]) -> Poly:
    """Mixed partial derivative d^mu f, mu given as an exponent vector."""
    mu = tuple(exp)
    if len(mu) != f.n:
        raise DimensionError(f"derivative multi-index has length {len(mu)}, expected {f.n}")
    acc = {}
    for e, c in f.terms():
        if any(a < m for a, m in zip(e, mu)):
            continue
        factor = math.prod(math.perm(a, m) for a, m in zip(e, mu))
        acc[tuple(a - m for a, m in zip(e, mu))] = c * factor
    return type(f)(f.n, acc)


# text form

def _format_coeff(c: Coeff) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def format_poly(f: Poly) -> str:
    if not f:
        return "0"
    pieces = []
    for e, c in f.terms():
        factors = [f"x{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(e) if a]
        mag = abs(c)
        head = _format_coeff(mag)
        if factors:
            body = "*".join(factors if mag == 1 else [head] + factors)
        else:
            body = head
        pieces.append(("-" if c < 0 else "+", body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(text: str, n: int | None = None) -> Poly:
    """Inverse of ``format_poly``. ``n`` defaults to the largest variable index seen."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    raw = []
    top = 0
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at position {pos}: {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(1)
        powers: Dict[int, int] = {}
        for factor in m.group(2).strip().split("*"):
            factor = factor.strip()
            vm = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
            if vm:
                idx = int(vm.group(1))
                if idx < 1:
                    raise ValueError(f"variable index must be >= 1 in {factor!r}")
                powers[idx] = powers.get(idx, 0) + int(vm.group(2) or 1)
                top = max(top, idx)
            elif re.fullmatch(r"\d+(?:/\d+)?", factor):
                coeff *= Fraction(factor)
            else:
                raise ValueError(f"cannot parse factor {factor!r} at position {m.start(2)}")
        raw.append((powers, sign * coeff))
        pos = m.end()
    n = top if n is None else n
    if top > n:
        raise DimensionError(f"variable x{top} exceeds n={n}")
    terms = [(tuple(p.get(i, 0) for i in range(1, n + 1)), c) for p, c in raw]
    if all(c.denominator == 1 for _, c in terms):
        return Poly(n, [(e, int(c)) for e, c in terms])
    return RatPoly(n, terms)
