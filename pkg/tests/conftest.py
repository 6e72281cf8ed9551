import sympy
from hypothesis import strategies as st

from schubert_bounds.polyring import Poly


def sym_vars(n):
    return sympy.symbols(f"x1:{n + 1}")


def to_sympy(f):
    xs = sym_vars(f.n)
    return sympy.Add(*[c * sympy.Mul(*[x**a for x, a in zip(xs, e)]) for e, c in f.terms()])


def from_sympy(expr, n):
    xs = sym_vars(n)
    p = sympy.Poly(sympy.expand(expr), *xs)
    return Poly(n, {tuple(m): int(c) for m, c in p.terms()}) if p.as_expr() != 0 else Poly(n)


@st.composite
def polys(draw, n=None, max_degree=5, max_terms=6, coeffs=st.integers(-5, 5)):
    n = draw(st.integers(2, 4)) if n is None else n
    exps = st.lists(st.integers(0, max_degree), min_size=n, max_size=n).filter(lambda e: sum(e) <= max_degree)
    terms = draw(st.lists(st.tuples(exps, coeffs), max_size=max_terms))
    return Poly(n, [(tuple(e), c) for e, c in terms])


_ACCEPTANCE_LINES: list[str] = []


def record_criterion(number, label, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {label}" + (f" ({detail})" if detail else "")
    _ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
