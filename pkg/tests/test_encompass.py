"""Tests for encompass.py: the growth criterion, extensions, and the
twisted-power catalecticant check."""
from __future__ import annotations

from math import comb

import pytest

from apolarium.apolar import apolar_dim, hilbert_function
from apolarium.encompass import (
    check_maximal_growth,
    encompassing_extension,
    gradient_generic_rank,
    growth_table,
    is_almost_encompassing,
    is_encompassing,
    verify_main_theorem,
)
from apolarium.guards import LimitExceeded
from apolarium.poly import format_poly, parse, restrict_zero

V2 = ("x1", "x2")

# twenty-plus concise polynomials in one to three variables, mixing
# encompassing and non-encompassing cases
CORPUS = [
    "x1", "x1^2", "x1^3", "x1^2 + x1", "x1^3 + x1^2",
    "x1^2 + x2", "x1^3 + x2", "x1^3 + x1*x2", "x1^3 + 3*x1*x2",
    "x1^2 + x2^2", "x1*x2", "x1^3 + x2^3", "x1^2*x2",
    "x1^2 + x1*x2 + x2^3", "x1^4 + x2^2", "x1^2*x2 + x2^2",
    "x1*x2 + x1^3 + x2^3",
    "x1^2 + x2^2 + x3^2", "x1*x2*x3", "x1^2 + x2*x3",
    "x1^3 + x2^2 + x3^2", "x1*x2 + x3^2 + x3^3",
]


# -- the two flags ---------------------------------------------------------------


def test_encompassing_flags():
    assert is_encompassing(parse("x1"))
    assert is_encompassing(parse("x1^2 + x2"))
    # quotient dimension exceeds 1 + variable count: impossible to encompass
    assert not is_encompassing(parse("x1^2 + x1"))
    assert not is_encompassing(parse("x1^2"))
    assert not is_encompassing(parse("x1^2 + x2^2"))
    assert not is_encompassing(parse("x1*x2"))


def test_almost_encompassing_flags():
    assert is_almost_encompassing(parse("x1^2"))
    assert is_almost_encompassing(parse("x1^2 + x2^2"))
    assert is_almost_encompassing(parse("x1*x2"))
    assert is_almost_encompassing(parse("x1^3 + 3*x1*x2"))
    # second derivatives of x1^3 are collinear with the first
    assert not is_almost_encompassing(parse("x1^3"))
    # nonzero degree-<=1 part disqualifies immediately
    assert not is_almost_encompassing(parse("x1^2 + x2"))


# -- maximal growth ---------------------------------------------------------------


def test_check_maximal_growth_values():
    assert check_maximal_growth(parse("x1^2"), 2) == (5, 6, False)
    assert check_maximal_growth(parse("x1^2 + x2"), 2) == (6, 6, True)
    assert check_maximal_growth(parse("x1^2 + x2"), 3) == (10, 10, True)


def test_growth_tables():
    assert growth_table(parse("x1"), 2) == [2, 3]
    assert growth_table(parse("x1^2"), 3) == [3, 5, 7]
    assert growth_table(parse("x1^2 + x2"), 3) == [3, 6, 10]
    assert growth_table(parse("x1^2 + x2^2"), 3) == [4, 9, 16]


def test_growth_never_exceeds_binomial():
    for s in CORPUS[:12]:
        f = parse(s)
        ell = apolar_dim(f)
        for d in (1, 2, 3):
            lhs, rhs, _ = check_maximal_growth(f, d)
            assert lhs <= rhs == comb(ell + d - 1, d)


def test_encompassing_iff_maximal_growth_on_corpus():
    for s in CORPUS:
        f = parse(s)
        enc = is_encompassing(f)
        grows = all(check_maximal_growth(f, d)[2] for d in (2, 3))
        assert enc == grows, s


def test_encompassing_iff_gradient_dominant_on_corpus():
    for s in CORPUS:
        f = parse(s)
        dom = gradient_generic_rank(f) == apolar_dim(f) - 1
        assert is_encompassing(f) == dom, s


def test_growth_input_checks():
    with pytest.raises(ValueError):
        check_maximal_growth(parse("x1"), 0)
    with pytest.raises(LimitExceeded):
        check_maximal_growth(parse("x1*x2*x3"), 9, max_terms=50)


# -- the extension construction ----------------------------------------------------


def test_extension_of_square_quadric():
    ext = encompassing_extension(parse("x1^2 + x2^2"))
    assert ext.g == parse("x1^2 + x2^2 + y1", vars=("x1", "x2", "y1"))
    assert ext.G == parse("x1^2 + x2^2 + x0*y1", vars=("x0", "x1", "x2", "y1"))
    assert ext.y_vars == ["y1"]
    assert [format_poly(s) for s in ext.sigma_list] == ["1/2*x1^2"]


def test_extension_of_fermat_cubic():
    vs = ("x1", "x2", "y1", "y2", "y3")
    ext = encompassing_extension(parse("x1^3 + x2^3"))
    assert ext.g == parse("x1^3 + x2^3 + x1*y1 + x2*y2 + y3", vars=vs)
    assert ext.G.is_homogeneous() and ext.G.degree() == 3
    assert ext.G == parse("x1^3 + x2^3 + x0*x1*y1 + x0*x2*y2 + x0^2*y3",
                          vars=("x0",) + vs)


def test_extension_invariants():
    for s in ("x1^2 + x2^2", "x1^3 + x2^3", "x1*x2", "x1*x2*x3"):
        f = parse(s)
        ext = encompassing_extension(f)
        assert is_encompassing(ext.g)
        assert apolar_dim(ext.g) == apolar_dim(f)
        assert tuple(hilbert_function(ext.g)) == tuple(hilbert_function(f))
        assert restrict_zero(ext.g, ext.y_vars) == f
        assert ext.G.is_homogeneous() and ext.G.degree() == f.degree()


def test_extension_noop_when_already_spanned():
    # quotient dim equals 1 + variable count: no completion needed
    ext = encompassing_extension(parse("x1^2 + x2"))
    assert ext.y_vars == [] and ext.sigma_list == []
    assert ext.g == parse("x1^2 + x2")
    assert ext.G == parse("x1^2 + x0*x2", vars=("x0", "x1", "x2"))


def test_extension_with_override():
    f = parse("x1^3 + x2^3")
    ov = [parse("x1^2 + x2^2", vars=V2), parse("x1*x2 + x2^2", vars=V2),
          parse("x1^3", vars=V2)]
    ext = encompassing_extension(f, ov)
    assert ext.g == parse("x1^3 + x2^3 + x1*y1 + x2*y1 + x2*y2 + y3",
                          vars=("x1", "x2", "y1", "y2", "y3"))
    # normalization makes each sigma's image monic at its largest monomial
    assert [format_poly(s) for s in ext.sigma_list] == [
        "1/6*x1^2 + 1/6*x2^2", "1/6*x1*x2 + 1/6*x2^2", "1/6*x1^3"]
    assert is_encompassing(ext.g)


def test_extension_override_validation():
    f = parse("x1^3 + x2^3")
    with pytest.raises(ValueError):
        encompassing_extension(f, [parse("x1^2", vars=V2)])  # wrong count
    with pytest.raises(ValueError):
        encompassing_extension(f, [parse("x1", vars=V2),
                                   parse("x2^2", vars=V2),
                                   parse("x1^3", vars=V2)])  # degree-1 part
    with pytest.raises(ValueError):
        encompassing_extension(f, [parse("x1^2", vars=V2),
                                   parse("x1^2 + x2^2", vars=V2),
                                   parse("x2^2", vars=V2)])  # dependent image


def test_extension_requires_concise():
    with pytest.raises(ValueError):
        encompassing_extension(parse("x1^2", vars=V2))


# -- the twisted-power catalecticant check -------------------------------------------


def test_main_theorem_small_cases():
    cases = [("x0^2 + x1^2", 2), ("x0^3 + x1^3", 2), ("x0*x1*x2", 2),
             ("x0^2 + x1^2", 3)]
    for s, d in cases:
        rep = verify_main_theorem(parse(s), "x0", d)
        n = len(rep.form.vars) - 1
        assert rep.expected == comb(n + d, d)
        assert rep.equal and rep.rank == rep.expected


def test_main_theorem_reports_assumptions():
    rep = verify_main_theorem(parse("x0^2 + x1^2"), "x0", 2)
    assert rep.assumptions == {
        "homogeneous": True,
        "dehomogenization_nonzero": True,
        "concise": True,
        "encompassing_dehomogenization": False,
    }
    assert len(rep.out_of_scope) == 2


def test_main_theorem_concise_cubic_square():
    F = parse("x1^3 + x2^3 + x0*x1*y1 + x0*x2*y2 + x0^2*y0")
    rep = verify_main_theorem(F, "x0", 2)
    assert rep.assumptions["encompassing_dehomogenization"]
    assert rep.rank == rep.expected == comb(7, 2)
    assert rep.equal


def test_main_theorem_input_checks():
    with pytest.raises(ValueError):
        verify_main_theorem(parse("x0^2 + x1"), "x0", 2)  # inhomogeneous
    with pytest.raises(ValueError):
        verify_main_theorem(parse("x0^2 + x1^2"), "x0", 0)
    with pytest.raises(LimitExceeded):
        verify_main_theorem(parse("x0*x1*x2"), "x0", 6, max_terms=10)
