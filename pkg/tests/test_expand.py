import itertools

import pytest
from hypothesis import given, strategies as st

from eqspringer.exactpoly import Ambient, Polynomial, RationalFunction
from eqspringer.expand import (
    build_p_delta, determinant, determinant_data, equal_in_quotient, evaluate_at_zero,
    expand_back_substitution, expand_determinant, localization_vector, project_monomial,
)
from eqspringer.parse import parse_poly
from eqspringer.springer import localize, shape_data, springer_monomials
from eqspringer.tableaux import enumerate_tableaux, inversion_vector, strong_compositions

import oracles

SHAPES_4 = [a for n in range(1, 5) for a in strong_compositions(n)]
SHAPES_5 = SHAPES_4 + list(strong_compositions(5))


def homogeneous_poly(ambient, degree):
    exps = st.lists(st.integers(0, ambient.nvars - 1), min_size=degree, max_size=degree).map(
        lambda idx: tuple(idx.count(v) for v in range(ambient.nvars)))
    return st.dictionaries(exps, st.integers(-4, 4), max_size=4).map(lambda d: Polynomial(d, ambient))


def any_poly(ambient):
    return st.integers(0, 3).flatmap(lambda d: homogeneous_poly(ambient, d)) \
        .flatmap(lambda p: homogeneous_poly(ambient, 1).map(lambda q: p + q))


# Worked examples -----------------------------------------------------------

def test_worked_expansion_and_sign():
    amb = (4, 2)
    forced = parse_poly("x1 + x2 + x3 - 2*z1 - z2", amb)
    assert [int(str(c)) for c in expand_back_substitution(forced, (2, 2)).coefficients] == [0, 1, 1, 1, 0, 0]
    # With +z2 the printed localization vector is not reproduced.
    printed = parse_poly("x1 + x2 + x3 - 2*z1 + z2", amb)
    assert localization_vector(printed, (2, 2))[0] == parse_poly("2*z2", amb)


def test_trivial_expansions():
    for alpha in [(2, 2), (2, 1), (1, 2, 1)]:
        sd = shape_data(alpha)
        one = Polynomial.one(sd.ambient)
        assert expand_determinant(one, alpha).coefficients[0] == one
        assert expand_back_substitution(Polynomial.zero(sd.ambient), alpha).support() == []
        for i, p in enumerate(sd.p):
            exp = expand_back_substitution(p, alpha)
            assert exp.support() == [i] and exp.coefficients[i] == one


def test_determinant_of_small_matrices():
    amb = Ambient(2, 2)
    z1, z2 = (RationalFunction(Polynomial.var(v, amb)) for v in ("z1", "z2"))
    one = RationalFunction(Polynomial.one(amb))
    zero = RationalFunction(Polynomial.zero(amb))
    assert determinant([[z1, z2], [one, one]]) == z1 - z2
    assert determinant([[zero, one], [one, zero]]) == -one
    assert determinant([[z1]]) == z1


def test_x_only_input_is_embedded():
    f = parse_poly("x1*x2", (4, 0))
    exp = expand_back_substitution(f, (2, 2))
    assert equal_in_quotient(exp.recombine(), f.embed(shape_data((2, 2)).ambient), (2, 2))


@pytest.mark.parametrize("alpha", [(2, 1), (1, 2), (2, 2), (1, 1, 1), (3, 1, 1)])
def test_determinant_intermediates_are_consistent(alpha):
    sd = shape_data(alpha)
    f = parse_poly("x1^2 - x2*z1 + 3*x1*z2", (sd.n, sd.ambient.k)) if sd.ambient.k >= 2 else \
        parse_poly("x1^2 - x2*z1", (sd.n, sd.ambient.k))
    data = determinant_data(f, alpha)
    for k in range(sd.size):
        diag = localize(sd.p[k], sd.tableaux[k])
        assert data.d[k] == RationalFunction(data.c[k]) * RationalFunction(diag)


# Property checks ------------------------------------------------------------

@given(st.sampled_from(SHAPES_5), st.data())
def test_back_substitution_matches_determinant(alpha, data):
    sd = shape_data(alpha)
    f = data.draw(any_poly(sd.ambient))
    a = expand_back_substitution(f, alpha)
    assert a == expand_determinant(f, alpha)
    assert expand_back_substitution(f, alpha, graded=False) == a
    assert expand_determinant(f, alpha, graded=False) == a


@given(st.sampled_from(SHAPES_5), st.data())
def test_reconstruction(alpha, data):
    sd = shape_data(alpha)
    f = data.draw(any_poly(sd.ambient))
    exp = expand_back_substitution(f, alpha)
    assert equal_in_quotient(exp.recombine(), f, alpha)
    assert localization_vector(exp.recombine(), alpha) == localization_vector(f, alpha)
    assert all(c.x_degree() <= 0 for c in exp.coefficients)


@given(st.sampled_from(SHAPES_5), st.data())
def test_expansion_is_linear(alpha, data):
    sd = shape_data(alpha)
    f, g = data.draw(any_poly(sd.ambient)), data.draw(any_poly(sd.ambient))
    ef, eg = expand_back_substitution(f, alpha), expand_back_substitution(g, alpha)
    both = expand_back_substitution(f + g, alpha)
    assert both.coefficients == tuple(a + b for a, b in zip(ef.coefficients, eg.coefficients))


@given(st.sampled_from(SHAPES_5), st.data())
def test_coefficient_grading(alpha, data):
    sd = shape_data(alpha)
    degree = data.draw(st.integers(0, 3))
    f = data.draw(homogeneous_poly(sd.ambient, degree))
    exp = expand_back_substitution(f, alpha)
    for c, p in zip(exp.coefficients, sd.p):
        if c:
            assert c.is_homogeneous() and c.degree() == degree - p.degree()


# P_delta and projection -----------------------------------------------------

def test_p_delta_examples():
    got = build_p_delta((0, 0, 2, 0, 4, 0, 1, 0), (2, 3, 1, 2))
    amb = tuple(got.ambient)
    assert got == parse_poly("x5*x7*(x5-z3)*(x3-z2)*(x3-z4)*(x5-z2)*(x5-z4)", amb)
    assert build_p_delta((0, 1, 1, 0, 1), (3, 3)) == parse_poly("(x5-z2)*(x2-z2)*(x3-z2)", (6, 2))
    sd = shape_data((2, 2))
    for g, p in zip(sd.gammas, sd.p):
        assert build_p_delta(g, (2, 2)) == p
    with pytest.raises(ValueError):
        build_p_delta((0, 0, 0, 1), (2, 2))


@pytest.mark.parametrize("alpha", SHAPES_4 + [(3, 2), (2, 1, 2), (1, 1, 1, 2)])
def test_p_delta_lifts_and_vanishes_below(alpha):
    sd = shape_data(alpha)
    n = sd.n
    for delta in itertools.product(range(3), repeat=n - 1):
        delta = delta + (0,)
        p = build_p_delta(delta, alpha)
        ev = evaluate_at_zero(p)
        assert ev == Polynomial.monomial(delta, Ambient(n))
        for t, g in zip(sd.tableaux, sd.gammas):
            if g < delta:
                assert localize(p, t).is_zero()


def test_project_monomial_examples():
    got = project_monomial((0, 1, 1, 0, 1), (3, 3))
    assert got.as_polynomial() == parse_poly("-x1*x3*x5 - x1*x2*x5 - x1*x2*x3", (6, 0))
    sd = shape_data((2, 3, 1))
    for i, g in enumerate(sd.gammas):
        proj = project_monomial(g, (2, 3, 1))
        assert proj.support() == [i] and proj.coefficients[i] == 1


@pytest.mark.parametrize("alpha", [a for n in range(1, 7) for a in strong_compositions(n)])
def test_support_bound_and_dual_routes(alpha):
    n = sum(alpha)
    sd = shape_data(alpha)
    deltas = [d + (0,) for d in itertools.product(range(5), repeat=n - 1) if sum(d) <= 4]
    for delta in deltas:
        fast = project_monomial(delta, alpha)
        for i in fast.support():
            assert sd.gammas[i] >= delta
        if n <= 4:
            assert project_monomial(delta, alpha, method="symbolic") == fast


@pytest.mark.parametrize("alpha", [(2, 2), (2, 1, 1), (3, 1), (1, 3), (2, 1), (1, 1, 1)])
def test_projection_against_ideal_oracle(alpha):
    # x^delta minus its projection must lie in the Tanisaki ideal.
    n = sum(alpha)
    lam = tuple(sorted(alpha, reverse=True))
    xs = oracles.symbols(n)
    for delta in itertools.product(range(3), repeat=n - 1):
        if sum(delta) > 3:
            continue
        delta += (0,)
        image = oracles.to_sympy(project_monomial(delta, alpha).as_polynomial(), n)
        diff = oracles.sympy.expand(oracles.sympy.Mul(*[x**e for x, e in zip(xs, delta)]) - image)
        assert oracles.in_ideal(lam, sum(delta), diff), (alpha, delta)


def test_equal_in_quotient_examples():
    amb = (4, 2)
    lhs, rhs = parse_poly("x2*x3", amb), parse_poly("-x1*x3 - x1*x2", amb)
    # The identity holds in ordinary cohomology only; equivariantly the
    # difference localizes to a non-zero symmetric function of z.
    assert equal_in_quotient(lhs, rhs, (2, 2), ordinary=True)
    assert not equal_in_quotient(lhs, rhs, (2, 2))
    assert not equal_in_quotient(parse_poly("x1*x2", amb), rhs, (2, 2), ordinary=True)
    f = parse_poly("x1 + z2", amb)
    assert equal_in_quotient(f, f, (2, 2))
    assert not equal_in_quotient(parse_poly("1", amb), parse_poly("0", amb), (2, 2))
    assert not equal_in_quotient(parse_poly("1", amb), parse_poly("0", amb), (2, 2), ordinary=True)


def test_evaluate_at_zero():
    amb = (4, 2)
    assert evaluate_at_zero(parse_poly("x3 - z1", amb)) == parse_poly("x3", (4, 0))
    assert evaluate_at_zero(parse_poly("z1*z2 + 5", amb)) == parse_poly("5", (4, 0))
    left = {inversion_vector(t) for t in enumerate_tableaux((2, 3, 1, 2))}
    right = {inversion_vector(t) for t in enumerate_tableaux((3, 2, 2, 1))}
    assert left == right == set(springer_monomials((3, 2, 2, 1)).monomials)
