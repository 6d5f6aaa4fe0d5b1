from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from apolarium.poly import (ParseError, Poly, VarMismatchError, apply,
                            boxtimes_power, dehomogenize, diff, format_poly,
                            homogenize, monomial_key, monomials_of_degree,
                            monomials_upto, parse, restrict_zero, twist)

F = Fraction


# -- parsing and printing ------------------------------------------------------

def test_parse_simple():
    f = parse("x1^2 + 2*x1*x2 - 3")
    assert f.vars == ("x1", "x2")
    assert f.coeff((2, 0)) == 1
    assert f.coeff((1, 1)) == 2
    assert f.coeff((0, 0)) == -3


def test_parse_fraction_coefficients():
    f = parse("1/2*x1 - 2/3")
    assert f.coeff((1,)) == F(1, 2)
    assert f.coeff((0,)) == F(-2, 3)


def test_parse_juxtaposition_and_parens():
    assert parse("(x1 + x2)^2") == parse("x1^2 + 2*x1*x2 + x2^2")
    assert parse("2x1(x1+1)") == parse("2*x1^2 + 2*x1")


def test_parse_natural_variable_order():
    f = parse("x10 + x2 + x1")
    assert f.vars == ("x1", "x2", "x10")


def test_parse_explicit_vars():
    f = parse("x2", vars=("x1", "x2", "x3"))
    assert f.vars == ("x1", "x2", "x3")
    with pytest.raises(ParseError):
        parse("x4", vars=("x1",))


def test_parse_errors():
    for bad in ("x1 + * x2", "((x1)", "x1^", "x1^x2", ""):
        with pytest.raises(ParseError):
            parse(bad)


def test_format_graded_ascending():
    f = parse("x2^2 + x1 + 1 + x1*x2")
    assert format_poly(f) == "1 + x1 + x1*x2 + x2^2"


def test_format_fractions_and_signs():
    f = parse("-1/2*x1^2 + x2 - 1")
    assert format_poly(f) == "-1 + x2 - 1/2*x1^2"


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3),
                          st.integers(-5, 5).filter(bool)),
                min_size=1, max_size=6))
def test_parse_format_roundtrip(triples):
    terms = {}
    for a, b, c in triples:
        terms[(a, b)] = terms.get((a, b), F(0)) + c
    terms = {e: c for e, c in terms.items() if c}
    f = Poly(("x1", "x2"), terms)
    assert parse(format_poly(f), vars=("x1", "x2")) == f


# -- ring structure ------------------------------------------------------------

def test_arithmetic_basics():
    x1, x2 = (Poly.variable(("x1", "x2"), v) for v in ("x1", "x2"))
    f = (x1 + x2) * (x1 - x2)
    assert f == x1 ** 2 - x2 ** 2
    assert (f / 2) * 2 == f
    assert f - f == Poly.zero(("x1", "x2"))


def test_var_mismatch():
    with pytest.raises(VarMismatchError):
        parse("x1") + parse("x2", vars=("x2",))


def test_degree_and_parts():
    f = parse("x1^3 + x1*x2 + 1")
    assert f.degree() == 3
    assert f.graded_part(2) == parse("x1*x2", vars=("x1", "x2"))
    assert f.truncate(1) == parse("1", vars=("x1", "x2"))
    assert Poly.zero(("x1",)).degree() == -1


def test_monomial_order():
    names = ["1", "x1", "x2", "x1^2", "x1*x2", "x2^2"]
    exps = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert sorted(exps, key=monomial_key) == exps, names


def test_monomials_of_degree_count():
    assert len(monomials_of_degree(3, 4)) == 15
    assert len(monomials_upto(2, 2)) == 6


# -- derivative action ---------------------------------------------------------

def test_apply_scaling():
    f = parse("x1^4")
    sig = parse("x1^2", vars=("x1",))
    assert apply(sig, f) == 12 * parse("x1^2", vars=("x1",))


def test_apply_kills_high_degree():
    assert apply(parse("x1^3", vars=("x1",)), parse("x1^2")).is_zero()


def test_diff_matches_apply():
    f = parse("x1^2*x2 + x2^3")
    assert diff(f, "x2") == apply(parse("x2", vars=f.vars), f)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2),
       st.integers(0, 2))
def test_apply_composition(a, b, c, d):
    # acting twice composes: sigma o (tau o f) = (sigma*tau) o f
    f = parse("(x1 + 2*x2)^4 + x1^2*x2^2")
    vs = f.vars
    sigma = Poly.monomial(vs, (a, b))
    tau = Poly.monomial(vs, (c, d))
    assert apply(sigma, apply(tau, f)) == apply(sigma * tau, f)


@settings(max_examples=40, deadline=None)
@given(st.integers(-3, 3), st.integers(-3, 3))
def test_apply_linear_in_operator(a, b):
    f = parse("x1^3*x2 + x2^4")
    vs = f.vars
    s = Poly.monomial(vs, (2, 0))
    t = Poly.monomial(vs, (1, 1))
    combo = s * a + t * b
    assert apply(combo, f) == apply(s, f) * a + apply(t, f) * b


# -- twist, homogenize, restrict ------------------------------------------------

def test_twist_divides_by_factorial():
    F2 = parse("x0^2*x1 + x0^3")
    tw = twist(F2, "x0")
    assert tw.coeff((2, 1)) == F(1, 2)
    assert tw.coeff((3, 0)) == F(1, 6)


def test_twist_identity_when_variable_absent():
    f = parse("x1*x2 + x2^2")
    g = twist(homogenize(f, "x0"), "x1")
    assert g.coeff(g.terms_sorted()[0][0]) is not None  # no crash
    assert twist(f, "x1") == parse("x1*x2 + x2^2")


def test_homogenize_dehomogenize_roundtrip():
    f = parse("x1^2 + x2 + 3")
    G = homogenize(f, "x0")
    assert G.is_homogeneous() and G.degree() == 2
    assert G.vars == ("x0", "x1", "x2")
    assert dehomogenize(G, "x0") == f


def test_homogenize_higher_degree_and_errors():
    f = parse("x1^2 + 1")
    G = homogenize(f, "x0", d=3)
    assert G.degree() == 3 and G.is_homogeneous()
    with pytest.raises(ValueError):
        homogenize(f, "x0", d=1)
    with pytest.raises(ValueError):
        homogenize(f, "x1")


def test_restrict_zero():
    g = parse("x1^2 + x1*y1 + y1^2 + x2")
    r = restrict_zero(g, ["y1"])
    assert r == parse("x1^2 + x2")
    assert r.vars == ("x1", "x2")


# -- disjoint-variable products --------------------------------------------------

def test_boxtimes_square_names_and_value():
    f = parse("x1^2 + x2")
    g = boxtimes_power(f, 2)
    assert g.vars == ("x11", "x21", "x12", "x22")
    assert g == parse("(x11^2 + x21)*(x12^2 + x22)",
                      vars=("x11", "x21", "x12", "x22"))


def test_boxtimes_one_renames():
    f = parse("x1^2 + x2")
    g = boxtimes_power(f, 1)
    assert g.vars == ("x11", "x21")


def test_boxtimes_collision_detected():
    # copy 11 of x1 and copy 1 of x11 would both be called x111
    f = parse("x1*x11", vars=("x1", "x11"))
    with pytest.raises(VarMismatchError):
        boxtimes_power(f, 11)
