import itertools

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from schubert_bounds.characters import key_poly, schubert_poly
from schubert_bounds.combinat import (
    Permutation,
    avoids_key_max,
    avoids_schubert_max,
    enumerate_compositions,
    enumerate_permutations,
)
from schubert_bounds.diagrams import Diagram, column_leq, max_poly, min_poly, rothe_diagram, skyline_diagram
from schubert_bounds.polyring import DimensionError, Poly, coeffwise_leq, parse_poly
from schubert_bounds.weyl import (
    InvalidOccurrence,
    YPoly,
    dependence_terms,
    dependent_family,
    dependent_family_skyline,
    dual_character,
    f_C,
    family_rank,
    minor,
    reduced_columns,
    reduced_columns_disjoint,
    span_rank,
    verify_dependence_identity,
    weight_space_rank,
    weight_spaces,
)
from schubert_bounds.combinat import RangeError

D1432 = rothe_diagram(Permutation.parse("1432"))
C3 = Diagram.from_columns([[], [2, 3], [1], []])
C5 = Diagram.from_columns([[], [1, 3], [2], []])


def y(i, j):
    return YPoly.var(i, j)


def sym_Y(n):
    return sympy.Matrix(n, n, lambda i, j: sympy.Symbol(f"y{i + 1}_{j + 1}") if i <= j else 0)


def to_sympy(p):
    return sympy.Add(*[c * sympy.Mul(*[sympy.Symbol(f"y{i}_{j}") for i, j in m]) for m, c in p.terms()])


def sympy_minor(rows, cols, n=6):
    Y = sym_Y(n)
    return sympy.expand(Y.extract([r - 1 for r in rows], [c - 1 for c in cols]).det()) if rows else 1


def test_minor_examples():
    assert minor({2, 3}, {2, 3}) == y(2, 2) * y(3, 3)
    assert minor({1, 3}, {2, 3}) == y(1, 2) * y(3, 3)
    assert minor({2}, {1}) == 0
    with pytest.raises(DimensionError):
        minor({1}, {1, 2})


def test_no_entry_below_diagonal():
    with pytest.raises(ValueError):
        YPoly.var(2, 1)


def test_minors_match_sympy_and_vanish_exactly_off_dominance():
    n = 5
    for k in range(0, 4):
        for rows in itertools.combinations(range(1, n + 1), k):
            for cols in itertools.combinations(range(1, n + 1), k):
                m = minor(rows, cols)
                assert sympy.expand(to_sympy(m) - sympy_minor(rows, cols)) == 0
                assert bool(m) == column_leq(rows, cols)


def test_f_C_examples():
    assert f_C(C3, D1432) == y(1, 2) * y(2, 2) * y(3, 3)
    assert f_C(C5, D1432) == y(1, 2) * y(2, 2) * y(3, 3)
    d = rothe_diagram(Permutation.parse("25143"))
    diag = YPoly.one()
    for col in d.columns:
        for i in col:
            diag = diag * y(i, i)
    assert f_C(d, d) == diag
    assert f_C(Diagram.from_columns([[], [1, 4], [1], []]), D1432) == 0
    with pytest.raises(DimensionError):
        f_C(Diagram.from_columns([[], [1], [1], []]), D1432)


def test_spanning_set_of_1432():
    # the five distinct spanning polynomials of the module
    polys = {f_C(c, D1432) for c in [Diagram.from_columns(x) for x in [
        [[], [1, 2], [1], []], [[], [1, 3], [1], []], [[], [2, 3], [1], []],
        [[], [1, 2], [2], []], [[], [1, 3], [2], []], [[], [2, 3], [2], []]]]}
    assert len(polys) == 5
    assert span_rank(list(polys)) == 5


def test_weight_space_examples():
    r = weight_space_rank(D1432, (1, 1, 1, 0))
    assert {c for c, _ in r.members} == {C3, C5}
    assert r.rank == 1
    r = weight_space_rank(D1432, (2, 1, 0, 0))
    assert [c for c, _ in r.members] == [Diagram.from_columns([[], [1, 2], [1], []])]
    assert r.rank == 1
    r = weight_space_rank(D1432, (0, 0, 0, 3))
    assert r.members == () and r.rank == 0


def test_weight_space_ranks_against_sympy():
    d = rothe_diagram(Permutation.parse("15432"))
    for r in weight_spaces(d):
        monos = sorted({m for _, f in r.members for m in f.monomials()})
        mat = sympy.Matrix([[f.coeff(m) for m in monos] for _, f in r.members])
        assert r.rank == mat.rank()
        assert 1 <= r.rank <= len(r.members)


def test_dual_character_examples():
    assert dual_character(D1432) == parse_poly("x1^2*x2 + x1^2*x3 + x1*x2*x3 + x1*x2^2 + x2^2*x3", n=4)
    assert dual_character(skyline_diagram((0, 2))) == parse_poly("x1^2 + x1*x2 + x2^2", n=2)
    assert dual_character(skyline_diagram((0, 2))) == key_poly((0, 2))
    assert dual_character(Diagram.empty(3)) == Poly.one(3)


def test_dual_character_fixes_key_1302():
    d = skyline_diagram((1, 3, 0, 2))
    assert dual_character(d) == key_poly((1, 3, 0, 2), n=d.n)


@pytest.mark.parametrize("n", range(1, 5))
def test_dual_character_is_schubert(n):
    for w in enumerate_permutations(n):
        assert dual_character(rothe_diagram(w)) == schubert_poly(w)


@st.composite
def diagrams(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    cols = draw(st.lists(st.sets(st.integers(1, n), max_size=3), min_size=n, max_size=n))
    return Diagram.from_columns(cols)


@settings(max_examples=80, deadline=None)
@given(diagrams())
def test_sandwich_for_arbitrary_diagrams(d):
    ch = dual_character(d)
    assert coeffwise_leq(min_poly(d), ch)
    assert coeffwise_leq(ch, max_poly(d))
    for r in weight_spaces(d):
        assert 1 <= r.rank <= len(r.members)


def test_dependent_family_of_1432():
    fam = dependent_family(Permutation.parse("1432"), (1, 2, 3, 4))
    assert fam == [C3, C5]
    assert all(c <= D1432 for c in fam)
    assert family_rank(fam, D1432) == 1
    assert dependent_family(Permutation.parse("1432")) == fam


def test_dependent_family_rejects_non_extremal_occurrences():
    w = Permutation.parse("21543")
    # (1,3,4,5) is a 1432 occurrence but i0 = 1 is not the largest first position
    with pytest.raises(InvalidOccurrence):
        dependent_family(w, (1, 3, 4, 5))
    assert len(dependent_family(w, (2, 3, 4, 5))) == 2
    with pytest.raises(InvalidOccurrence):
        dependent_family(Permutation.parse("1234"))
    with pytest.raises(InvalidOccurrence):
        dependent_family(Permutation.parse("1432"), (1, 2, 4, 3))


@pytest.mark.parametrize("n", [4, 5])
def test_dependent_families_are_dependent(n):
    for w in enumerate_permutations(n):
        if avoids_schubert_max(w):
            continue
        d = rothe_diagram(w)
        fam = dependent_family(w)
        assert len(set(fam)) == len(fam) >= 2
        assert all(c <= d for c in fam)
        assert family_rank(fam, d) < len(fam)


def test_skyline_dependent_families():
    for a in enumerate_compositions(4, 4):
        if avoids_key_max(a):
            continue
        d = skyline_diagram(a)
        fam = dependent_family_skyline(a)
        assert all(c <= d for c in fam)
        assert family_rank(fam, d) < len(fam)


@pytest.mark.parametrize("b", range(2, 7))
def test_dependence_identity(b):
    assert verify_dependence_identity(b)


@pytest.mark.parametrize("b", [2, 3, 4])
def test_dependence_terms_against_sympy(b):
    Y = sym_Y(b)
    g = [sympy.Symbol(f"y{m}_{b}") * Y.extract([r - 1 for r in range(1, b + 1) if r != m], list(range(1, b))).det()
         for m in range(1, b + 1)]
    ours = dependence_terms(b)
    for a, e in zip(ours, g):
        assert sympy.expand(to_sympy(a) - e) == 0
    assert sympy.expand(g[-1] - sum((-1) ** (b - 1 - m) * g[m - 1] for m in range(1, b))) == 0


def test_dependence_identity_guard():
    with pytest.raises(RangeError):
        verify_dependence_identity(8)
    with pytest.raises(ValueError):
        verify_dependence_identity(1)


def test_reduced_columns_examples():
    assert reduced_columns(D1432) == [(), (2, 3), (2,), ()]
    assert not reduced_columns_disjoint(D1432)
    assert reduced_columns_disjoint(Diagram.empty(4))
    assert reduced_columns(Diagram.from_columns([[1, 2, 4], [1], [2], []])) == [(4,), (), (2,), ()]


def test_reduced_columns_disjoint_for_avoiders():
    for n in range(1, 7):
        for w in enumerate_permutations(n):
            if avoids_schubert_max(w):
                assert reduced_columns_disjoint(rothe_diagram(w))
    for length in range(1, 5):
        for a in enumerate_compositions(length, 4):
            if avoids_key_max(a):
                assert reduced_columns_disjoint(skyline_diagram(a))


def test_weight_space_json():
    data = weight_space_rank(D1432, (1, 1, 1, 0)).to_json()
    assert data["rank"] == 1 and len(data["members"]) == 2
    assert data["members"][0]["f_C"] == "y1_2*y2_2*y3_3"
