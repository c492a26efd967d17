"""Hypothesis strategies for exact coefficient fields."""

from fractions import Fraction

from hypothesis import strategies as st

from teichcurves.exactfield import QQ, Matrix, PrimeField, QuadraticField, RationalFunctionField, UniPoly

SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 101, 65537)
QUAD_DS = (5, 8, 12, 13, 17, 21, 44, 53, 60, 97)


def rationals(bound: int = 60, max_den: int = 24):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, max_den))


def nonzero_rationals(bound: int = 60, max_den: int = 24):
    return rationals(bound, max_den).filter(bool)


@st.composite
def quad_elements(draw, D=None):
    D = draw(st.sampled_from(QUAD_DS)) if D is None else D
    K = QuadraticField(D)
    return K, K(draw(rationals())) + K.gen * draw(rationals())


@st.composite
def quad_triples(draw):
    D = draw(st.sampled_from(QUAD_DS))
    K = QuadraticField(D)
    xs = [K(draw(rationals())) + K.gen * draw(rationals()) for _ in range(3)]
    return K, xs


@st.composite
def fp_triples(draw):
    p = draw(st.sampled_from(SMALL_PRIMES))
    F = PrimeField(p)
    return F, [F(draw(st.integers(-10 ** 6, 10 ** 6))) for _ in range(3)]


def unipolys(field=QQ, max_degree: int = 5, var: str = "w", elements=None):
    elements = elements if elements is not None else rationals(20, 6)
    return st.lists(elements, min_size=0, max_size=max_degree + 1).map(lambda cs: UniPoly(cs, field, var))


@st.composite
def ratfunc_triples(draw):
    K = RationalFunctionField(QQ, "t")
    out = []
    for _ in range(3):
        num = draw(unipolys(QQ, 3, "t"))
        den = draw(unipolys(QQ, 2, "t").filter(bool))
        out.append(K.fraction(num, den))
    return K, out


@st.composite
def rational_matrices(draw, max_rows: int = 5, max_cols: int = 5, bound: int = 6):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    # bias toward rank deficiency by mixing rows
    rows = [[Fraction(draw(st.integers(-bound, bound))) for _ in range(n)] for _ in range(m)]
    if m > 1 and draw(st.booleans()):
        i, j = draw(st.integers(0, m - 1)), draw(st.integers(0, m - 1))
        c = draw(rationals(4, 3))
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])] if i != j else rows[i]
        rows[-1] = [c * x for x in rows[0]]
    return Matrix(rows, QQ)


@st.composite
def distinct_roots(draw, n: int = 5, bound: int = 10, max_den: int = 6):
    return draw(st.lists(rationals(bound * max_den, max_den).filter(lambda q: abs(q) <= bound),
                         min_size=n, max_size=n, unique=True))
