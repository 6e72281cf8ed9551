"""Exhaustive theorem audits over small ranges.

Each audit walks a deterministic range of instances, evaluates both sides of
a claimed relation independently and records whether they agree.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .characters import key_poly, schubert_poly
from .combinat import (
    ENUM_GUARD,
    Composition,
    RangeError,
    avoids_key_max,
    avoids_key_min,
    avoids_schubert_max,
    avoids_schubert_min,
    count_max_avoiders,
    enumerate_compositions,
    enumerate_permutations,
    has_rise_of_two,
    schroeder,
)
from .diagrams import max_poly, min_poly, rothe_diagram, skyline_diagram
from .lorentz import is_lorentzian
from .weyl import dual_character, reduced_columns_disjoint, verify_dependence_identity

IFF, IMPLIES, EQUALS = "iff", "implies", "equals"


@dataclass(frozen=True)
class AuditRecord:
    input: str
    lhs: Any
    rhs: Any
    agree: bool


@dataclass
class AuditReport:
    theorem: str
    search_range: dict
    relation: str
    lhs_label: str
    rhs_label: str
    records: list[AuditRecord] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def summary(self) -> dict:
        out = {
            "total": len(self.records),
            "agreements": sum(r.agree for r in self.records),
            "disagreements": sum(not r.agree for r in self.records),
        }
        if all(isinstance(r.lhs, bool) and isinstance(r.rhs, bool) for r in self.records):
            out["lhs_true"] = sum(r.lhs for r in self.records)
            out["rhs_true"] = sum(r.rhs for r in self.records)
            out["both_true"] = sum(r.lhs and r.rhs for r in self.records)
        return out

    @property
    def ok(self) -> bool:
        return all(r.agree for r in self.records)

    def to_json(self, timing: bool = False) -> dict:
        data = {
            "theorem": self.theorem,
            "range": self.search_range,
            "relation": self.relation,
            "lhs": self.lhs_label,
            "rhs": self.rhs_label,
            "records": [
                {"input": r.input, "lhs": r.lhs, "rhs": r.rhs, "agree": r.agree} for r in self.records
            ],
            "summary": self.summary,
        }
        if timing:
            data["wall_time"] = round(self.wall_time, 6)
        return data

    def to_text(self, timing: bool = False) -> str:
        def cell(v):
            return str(v).lower() if isinstance(v, bool) else str(v)

        rng = " ".join(f"{k}={v}" for k, v in self.search_range.items())
        lines = [
            f"# theorem: {self.theorem}",
            f"# range: {rng}",
            f"# relation: lhs {self.relation} rhs",
            f"# lhs: {self.lhs_label}",
            f"# rhs: {self.rhs_label}",
            "input\tlhs\trhs\tagree",
        ]
        lines += [f"{r.input}\t{cell(r.lhs)}\t{cell(r.rhs)}\t{cell(r.agree)}" for r in self.records]
        lines.append("# " + " ".join(f"{k}={v}" for k, v in self.summary.items()))
        if timing:
            lines.append(f"# wall_time={self.wall_time:.3f}s")
        return "\n".join(lines) + "\n"


def _agree(relation: str, lhs, rhs) -> bool:
    if relation == IMPLIES:
        # rhs is the hypothesis, lhs the conclusion
        return bool(lhs) or not rhs
    return lhs == rhs


@dataclass(frozen=True)
class Theorem:
    name: str
    axis: str  # "perm", "comp", "k" or "b"
    relation: str
    lhs_label: str
    rhs_label: str
    lhs: Callable
    rhs: Callable
    guard: dict


def _schubert_max_lhs(w):
    return schubert_poly(w) == max_poly(rothe_diagram(w))


def _schubert_min_lhs(w):
    return schubert_poly(w) == min_poly(rothe_diagram(w))


def _key_bound_lhs(bound):
    def lhs(a):
        d = skyline_diagram(a)
        return key_poly(a, d.n) == bound(d)
    return lhs


def _key_lorentzian_lhs(a):
    return is_lorentzian(key_poly(a), max_degree=max(sum(a), 2), max_vars=max(len(a), 1))


def _dual_schubert(w):
    return str(dual_character(rothe_diagram(w)))


def _dual_key(a):
    d = skyline_diagram(a)
    return str(dual_character(d))


def _reduced_disjoint(x):
    d = skyline_diagram(x) if _is_comp(x) else rothe_diagram(x)
    return reduced_columns_disjoint(d)


def _pattern_free(x):
    return avoids_key_max(x) if _is_comp(x) else avoids_schubert_max(x)


def _is_comp(x) -> bool:
    return isinstance(x, Composition)


THEOREMS: dict[str, Theorem] = {
    t.name: t
    for t in [
        Theorem("schubert-max", "perm", IFF, "S_w == Max_w", "w avoids 1432 and 1423",
                _schubert_max_lhs, avoids_schubert_max, {"n": 7}),
        Theorem("schubert-min", "perm", IFF, "S_w == Min_w", "w avoids the twelve patterns",
                _schubert_min_lhs, avoids_schubert_min, {"n": 7}),
        Theorem("key-max", "comp", IFF, "key_a == Max_a", "no i<j with a_j - a_i >= 2",
                _key_bound_lhs(max_poly), lambda a: not has_rise_of_two(a), {"len": 4, "max_part": 4}),
        Theorem("key-min", "comp", IFF, "key_a == Min_a", "a avoids the five composition patterns",
                _key_bound_lhs(min_poly), avoids_key_min, {"len": 4, "max_part": 4}),
        Theorem("key-lorentzian", "comp", IMPLIES, "key_a is Lorentzian", "a avoids (0,2)",
                _key_lorentzian_lhs, avoids_key_max, {"len": 4, "max_part": 4}),
        Theorem("schroeder-count", "k", EQUALS, "#{w in S_k avoiding 1432, 1423}", "r_(k-1)",
                count_max_avoiders, lambda k: schroeder(k - 1), {"n": 8}),
        Theorem("dualchar-schubert", "perm", EQUALS, "dual character of D(w)", "S_w",
                _dual_schubert, lambda w: str(schubert_poly(w)), {"n": 5}),
        Theorem("dualchar-key", "comp", EQUALS, "dual character of D(a)", "key_a",
                _dual_key, lambda a: str(key_poly(a, skyline_diagram(a).n)), {"len": 4, "max_part": 4}),
        Theorem("reduced-disjoint", "perm", IMPLIES, "reduced columns pairwise disjoint",
                "pattern-free (1432/1423, or (0,2) for compositions)",
                _reduced_disjoint, _pattern_free, {"n": 7, "len": 4, "max_part": 4}),
        Theorem("dependence-identity", "b", EQUALS, "g_b == g_(b-1) - g_(b-2) + ... + (-1)^b g_1", "true",
                lambda b: verify_dependence_identity(b, guard=b), lambda b: True, {"b": 7}),
    ]
}


def force_from_env() -> bool:
    return os.environ.get("SCHUBERT_BOUNDS_FORCE", "").lower() in {"1", "true", "yes", "on"}


def _check_guard(theorem: Theorem, values: dict, force: bool) -> None:
    for key, value in values.items():
        limit = theorem.guard.get(key)
        if limit is None:
            continue
        if force:
            limit = max(limit, ENUM_GUARD)
            if key == "b":
                limit = max(limit, value)
        if value > limit:
            hint = "" if force else " (use --force to raise it)"
            raise RangeError(f"{theorem.name}: {key}={value} exceeds the guard {limit}{hint}")


def _instances(theorem: Theorem, n=None, length=None, max_part=None, b=None) -> tuple[dict, Iterable]:
    axis = theorem.axis
    if theorem.name == "reduced-disjoint" and length is not None:
        axis = "comp"
    if axis == "perm":
        n = 5 if n is None else n
        return {"n": n}, enumerate_permutations(n, guard=max(n, 0))
    if axis == "comp":
        length = 3 if length is None else length
        max_part = 3 if max_part is None else max_part
        return {"len": length, "max_part": max_part}, enumerate_compositions(
            length, max_part, guard=max(length, max_part))
    if axis == "k":
        n = 8 if n is None else n
        return {"n": n}, range(1, n + 1)
    b = 6 if b is None else b
    if b < 2:
        raise ValueError("dependence-identity needs --b >= 2")
    return {"b": b}, range(2, b + 1)


def run_audit(name: str, n: int | None = None, length: int | None = None, max_part: int | None = None,
              b: int | None = None, force: bool = False) -> AuditReport:
    try:
        theorem = THEOREMS[name]
    except KeyError:
        raise ValueError(f"unknown theorem {name!r}; choose from {', '.join(THEOREMS)}") from None
    search_range, instances = _instances(theorem, n, length, max_part, b)
    _check_guard(theorem, search_range, force or force_from_env())
    report = AuditReport(theorem.name, search_range, theorem.relation, theorem.lhs_label, theorem.rhs_label)
    start = time.perf_counter()
    for x in instances:
        lhs, rhs = theorem.lhs(x), theorem.rhs(x)
        report.records.append(AuditRecord(str(x), lhs, rhs, _agree(theorem.relation, lhs, rhs)))
    report.wall_time = time.perf_counter() - start
    return report
