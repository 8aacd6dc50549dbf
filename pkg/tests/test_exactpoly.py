from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from eqspringer.exactpoly import (
    Ambient, AmbientMismatch, InexactDivisionError, Polynomial, RationalFunction,
    divide_exact, divided_difference, lex_compare, rational_solve_divide, substitute,
)
from eqspringer.parse import parse_poly

AMB = Ambient(3, 1)
SYMS = sympy.symbols("x1 x2 x3 z1")

coeffs = st.one_of(st.integers(-6, 6), st.fractions(min_value=-5, max_value=5, max_denominator=4))
nonzero = coeffs.filter(bool)
exponents = st.tuples(*[st.integers(0, 2)] * AMB.nvars)
polys = st.dictionaries(exponents, coeffs, max_size=5).map(lambda d: Polynomial(d, AMB))
nonzero_polys = st.dictionaries(exponents, nonzero, min_size=1, max_size=4).map(lambda d: Polynomial(d, AMB))


def to_sympy(p: Polynomial):
    out = sympy.Integer(0)
    for exps, c in p.terms.items():
        term = sympy.Rational(Fraction(c).numerator, Fraction(c).denominator)
        for s, e in zip(SYMS, exps):
            term *= s**e
        out += term
    return sympy.expand(out)


def P(text):
    return parse_poly(text, AMB)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    zero, one = Polynomial.zero(AMB), Polynomial.one(AMB)
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + zero == a and a * one == a
    assert a - a == zero


@given(polys, polys)
def test_arithmetic_matches_sympy(a, b):
    assert to_sympy(a + b) == sympy.expand(to_sympy(a) + to_sympy(b))
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))
    assert to_sympy(a**2) == sympy.expand(to_sympy(a) ** 2)


@given(polys)
def test_print_parse_round_trip(a):
    assert parse_poly(str(a), AMB) == a


@given(polys, st.integers(1, 2))
def test_divided_difference_matches_sympy(a, i):
    xi, xj = SYMS[i - 1], SYMS[i]
    f = to_sympy(a)
    swapped = f.subs({xi: xj, xj: xi}, simultaneous=True)
    expected = sympy.expand(sympy.cancel((f - swapped) / (xi - xj)))
    assert to_sympy(divided_difference(i, a)) == expected


@given(polys)
def test_divided_difference_relations(a):
    assert divided_difference(1, divided_difference(1, a)).is_zero()
    lhs = divided_difference(1, divided_difference(2, divided_difference(1, a)))
    rhs = divided_difference(2, divided_difference(1, divided_difference(2, a)))
    assert lhs == rhs
    sym = a + a.swap(1, 2)
    assert divided_difference(1, sym).is_zero()


def test_schubert_style_divided_difference():
    # From the top seed the operator word is that of w^-1 w0 = s1 s2 s3.
    amb = Ambient(4)
    top = parse_poly("x1^3*x2^2*x3", amb)
    got = divided_difference(1, divided_difference(2, divided_difference(3, top)))
    assert got == parse_poly("x2^2*x3 + x1^2*x3 + x1^2*x2 + x1*x2*x3 + x1*x2^2", amb)
    # The reduced word of w itself does not reach it from the seed.
    assert divided_difference(2, divided_difference(3, divided_difference(2, top))) == parse_poly("x1^3", amb)
    assert divided_difference(1, parse_poly("x1", amb)) == Polynomial.one(amb)


@given(polys, st.integers(1, 2))
def test_divided_difference_vanishes_iff_symmetric(a, i):
    assert divided_difference(i, a).is_zero() == (a == a.swap(i, i + 1))


@given(polys, nonzero_polys)
def test_divide_exact_inverts_multiplication(a, b):
    assert divide_exact(a * b, b) == a


def test_divide_exact_rejects_remainder():
    with pytest.raises(InexactDivisionError):
        divide_exact(P("x1^2 + 1"), P("x1 - z1"))
    with pytest.raises(ZeroDivisionError):
        divide_exact(P("x1"), Polynomial.zero(AMB))


def test_rational_solve_divide():
    assert rational_solve_divide(P("x1^2 - z1^2"), P("x1 - z1")) == P("x1 + z1")
    assert rational_solve_divide(P("x1 + x2"), P("2")) == P("1/2*x1 + 1/2*x2")
    with pytest.raises(InexactDivisionError):
        rational_solve_divide(P("x1"), P("x2"))


def test_substitute():
    f = P("x1*x2 + z1")
    assert substitute(f, {"x1": P("z1"), "x2": P("z1")}) == P("z1^2 + z1")
    assert substitute(f, {"x2": Fraction(1, 2)}) == P("1/2*x1 + z1")
    assert substitute(f, {}) == f


@given(exponents, exponents)
def test_lex_compare_is_tuple_order(a, b):
    expected = (a > b) - (a < b)
    assert lex_compare(a, b) == expected


def test_lex_examples():
    assert lex_compare((1, 0, 0), (0, 2, 3)) == 1
    assert lex_compare((0, 1, 1, 0, 1), (0, 1, 1, 0, 0)) == 1
    assert lex_compare((0, 1), (0, 1)) == 0


def test_printing_is_canonical():
    assert str(P("(x1 - z1)*(x2 - z1)")) == "x1*x2 - x1*z1 - x2*z1 + z1^2"
    assert str(P("3/2*z1")) == "3/2*z1"
    assert str(Polynomial.zero(AMB)) == "0"
    assert P("6/3*x1").coefficient((1, 0, 0, 0)) == 2


def test_degrees_and_components():
    f = P("x1^2*z1 + x2 + 3")
    assert (f.degree(), f.x_degree(), f.z_degree()) == (3, 2, 1)
    assert not f.is_homogeneous()
    comps = f.homogeneous_components()
    assert sorted(comps) == [0, 1, 3]
    assert sum(comps.values(), Polynomial.zero(AMB)) == f
    assert Polynomial.zero(AMB).degree() == -1


def test_ambient_checks():
    with pytest.raises(AmbientMismatch):
        P("x1") + parse_poly("x1", (3, 0))
    with pytest.raises(KeyError):
        Polynomial.var("x4", AMB)
    assert P("x1").embed(Ambient(3, 2)) == parse_poly("x1", (3, 2))


@given(polys, st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_evaluate_matches_sympy(a, point):
    expected = to_sympy(a).subs(dict(zip(SYMS, point)))
    assert sympy.Rational(Fraction(a.evaluate(point))) == expected


@given(nonzero_polys, nonzero_polys, polys)
def test_rational_function_field(a, b, c):
    fa, fb = RationalFunction(c, a), RationalFunction(a, b)
    assert fa + fb == fb + fa
    assert (fa * fb) == RationalFunction(c * a, a * b)
    assert RationalFunction(a) * RationalFunction(a).inverse() == RationalFunction(Polynomial.one(AMB))
    assert RationalFunction(c * b, b).is_polynomial()
    assert RationalFunction(c * b, b).to_polynomial() == c
