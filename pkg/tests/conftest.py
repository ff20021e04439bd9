from fractions import Fraction

from hypothesis import strategies as st

from horadam_gf.polyring import Polynomial

small_ints = st.integers(min_value=-50, max_value=50)
big_ints = st.integers(min_value=-(10**30), max_value=10**30)

exponents = st.tuples(*[st.integers(min_value=0, max_value=3)] * 6)


@st.composite
def polynomials(draw, max_terms=6, coeffs=small_ints, exps=exponents):
    terms = draw(st.dictionaries(exps, coeffs, max_size=max_terms))
    return Polynomial.from_terms(terms)


@st.composite
def x_polynomials(draw, max_degree=5):
    coeffs = draw(st.lists(small_ints, max_size=max_degree + 1))
    return Polynomial.from_x_coefficients(coeffs)


rationals = st.builds(
    Fraction,
    st.integers(min_value=-1000, max_value=1000),
    st.integers(min_value=1, max_value=1000),
)


def dense_mul(f, g):
    """Schoolbook convolution of coefficient lists: independent oracle for products."""
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return out


# one summary line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[number])
