"""Encompassing polynomials, growth of powers, and the extension construction.

A polynomial f is *encompassing* when truncation to degree <= 1 is injective
on the span of its derivatives; equivalently the dimension of the partials
space of f^d achieves the multiset bound binom(l+d-1, d) for every d, and
equivalently the total gradient map of the basis partials is dominant.  The
extension construction embeds any concise f as a restriction of an
encompassing polynomial g in extra variables without changing the quotient
algebra's dimensions.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import guards
from .exact import EchelonState, SparseEchelon, rank
from .poly import (Poly, apply, diff, homogenize, ldf, monomial_key,
                   restrict_zero, twist)
from .apolar import (_divisor_exponents, apolar_dim, catalecticant_rank,
                     hilbert_function, is_concise, partials_space)


def _truncation_injective(vars: Tuple[str, ...], basis: Sequence[Poly]) -> bool:
    """Is P -> (degree <= 1 part of P) injective on the span of the basis?"""
    ncols = 1 + len(vars)
    state = EchelonState(ncols)
    for p in basis:
        t = p.truncate(1)
        row = [t.constant_term()] + [t.coeff(tuple(1 if i == j else 0
                                                   for i in range(len(vars))))
                                     for j in range(len(vars))]
        if not state.insert(row):
            return False
    return True


def is_encompassing(f: Poly) -> bool:
    """No nonzero derivative combination has vanishing degree-<=1 part."""
    ps = partials_space(f)
    return _truncation_injective(f.vars, ps.basis)


def is_almost_encompassing(f: Poly) -> bool:
    """f itself has zero degree-<=1 part, but truncation is injective on the
    span of the proper derivatives."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if not f.truncate(1).is_zero():
        return False
    from .apolar import _closure
    seeds = [diff(f, v) for v in f.vars]
    ech = _closure(f.vars, seeds)
    basis = [Poly(f.vars, row) for row in ech.basis()]
    return _truncation_injective(f.vars, basis)


def check_maximal_growth(f: Poly, d: int,
                         max_terms: Optional[int] = None) -> Tuple[int, int, bool]:
    """Compare dim of the partials space of f^d with binom(l+d-1, d)."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if d < 1:
        raise ValueError("need d >= 1")
    ell = apolar_dim(f)
    rhs = math.comb(ell + d - 1, d)
    guards.check_terms(rhs, max_terms)
    guards.check_degree(f.degree() * d)
    lhs = apolar_dim(f ** d)
    return lhs, rhs, lhs == rhs


def growth_table(f: Poly, dmax: int,
                 max_terms: Optional[int] = None) -> List[int]:
    """[dim of partials space of f^d for d = 1..dmax]."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    out = []
    for d in range(1, dmax + 1):
        guards.check_degree(f.degree() * d)
        p = f ** d
        guards.check_terms(len(p.terms), max_terms)
        out.append(apolar_dim(p))
    return out


def basis_partials(f: Poly) -> List[Poly]:
    """Greedy monomial-derivative basis of the partials space (images)."""
    from .apolar import greedy_monomial_basis
    return [apply(Poly.monomial(f.vars, a), f) for a in greedy_monomial_basis(f)]


def gradient_generic_rank(f: Poly, seed: int = 0) -> int:
    """Rank of the Jacobian of the non-constant basis partials at random
    integer points (coordinates in [-1000, 1000], up to 3 tries, returning
    the best rank seen).  Rank l-1 certifies dominance of the gradient map.
    """
    if not is_concise(f):
        raise ValueError("gradient probe needs a concise polynomial")
    parts = [p for p in basis_partials(f) if p.degree() >= 1]
    target = apolar_dim(f) - 1
    jac = [[diff(p, v) for v in f.vars] for p in parts]
    rng = random.Random(seed)
    best = 0
    for _ in range(3):
        point = [rng.randint(-1000, 1000) for _ in f.vars]
        m = [[entry.evaluate(point) for entry in row] for row in jac]
        best = max(best, rank(m))
        if best == target:
            break
    return best


# -- the extension construction ------------------------------------------------


@dataclass
class ExtensionResult:
    g: Poly                     # in the enlarged variable set (x..., y...)
    sigma_list: List[Poly]      # normalized dual elements of degree >= 2
    G: Poly                     # homogenization of g, degree = deg g
    y_vars: List[str] = field(default_factory=list)


def _normalize_sigma(sigma: Poly, f: Poly) -> Poly:
    """Rescale sigma so that sigma∘f is monic at its largest monomial."""
    img = apply(sigma, f)
    if img.is_zero():
        raise ValueError(f"override element {sigma} annihilates the input")
    lead = max(img.terms, key=monomial_key)
    return sigma * (Fraction(1) / img.terms[lead])


def _default_sigmas(f: Poly, needed: int) -> List[Poly]:
    """Smallest monomial operators of degree >= 2 completing the basis."""
    ech = SparseEchelon(monomial_key)
    ech.insert(f.terms)
    for v in f.vars:
        ech.insert(diff(f, v).terms)
    out: List[Poly] = []
    for deg in range(2, f.degree() + 1):
        for a in _divisor_exponents(f, deg):
            img = apply(Poly.monomial(f.vars, a), f)
            if not img.is_zero() and ech.insert(img.terms):
                out.append(Poly.monomial(f.vars, a))
                if len(out) == needed:
                    return out
    return out


def encompassing_extension(f: Poly,
                           sigma_override: Optional[Sequence[Poly]] = None
                           ) -> ExtensionResult:
    """Build g = sum over multi-exponents a of y^a/a! * (sigma^a ∘ f).

    The sigma_j are operators of degree >= 2 whose classes complete
    {1, first-order operators} to a basis of the quotient algebra; by default
    the smallest such monomials (scalar-normalized so the image is monic).
    An override list is validated against the same completion property.
    """
    if not is_concise(f):
        raise ValueError("extension needs a concise polynomial")
    n = len(f.vars)
    ell = apolar_dim(f)
    needed = ell - n - 1
    if sigma_override is not None:
        if len(sigma_override) != needed:
            raise ValueError(f"need exactly {needed} completion elements, "
                             f"got {len(sigma_override)}")
        sigmas = []
        for s in sigma_override:
            if s.is_zero() or ldf(s).degree() < 2:
                raise ValueError(f"override element {s} has a part of degree < 2")
            if len(s.vars) != n:
                raise ValueError("override arity mismatch")
            sigmas.append(_normalize_sigma(s, f))
        ech = SparseEchelon(monomial_key)
        ech.insert(f.terms)
        for v in f.vars:
            ech.insert(diff(f, v).terms)
        for s in sigmas:
            if not ech.insert(apply(s, f).terms):
                raise ValueError(f"override element {s} does not extend the basis")
    else:
        sigmas = [_normalize_sigma(s, f) for s in _default_sigmas(f, needed)]
        if len(sigmas) != needed:
            raise ValueError("could not complete a basis with degree >= 2 monomials")

    y_names = [f"y{i + 1}" for i in range(needed)]
    for y in y_names:
        if y in f.vars:
            raise ValueError(f"variable name {y} already taken")
    big_vars = f.vars + tuple(y_names)
    x_pad = [0] * needed

    def lift(p: Poly, y_exp: Sequence[int]) -> Poly:
        return Poly(big_vars, {e + tuple(y_exp): c for e, c in p.terms.items()})

    g = Poly.zero(big_vars)
    degf = f.degree()

    def expand(j: int, current: Poly, y_exp: List[int], scale: Fraction):
        nonlocal g
        if current.is_zero():
            return
        if j == len(sigmas):
            g = g + lift(current, y_exp) * scale
            return
        power = current
        a = 0
        while not power.is_zero():
            y_exp[j] = a
            expand(j + 1, power, y_exp, scale / math.factorial(a))
            power = apply(sigmas[j], power)
            a += 1
            if a > degf:
                break
        y_exp[j] = 0

    expand(0, f, list(x_pad), Fraction(1))
    G = homogenize(g, "x0", g.degree())
    return ExtensionResult(g, sigmas, G, y_names)


# -- twisted-power catalecticant check -----------------------------------------


@dataclass
class MainTheoremReport:
    form: Poly
    variable: str
    d: int
    rank: int
    expected: int
    equal: bool
    assumptions: dict
    out_of_scope: List[str]


OUT_OF_SCOPE_NOTES = [
    "smoothable-rank equality: implied by the catalecticant identity, "
    "not independently checked",
    "cactus/border-rank equality: implied, not independently checked",
]


def verify_main_theorem(F: Poly, v: str, d: int,
                        max_terms: Optional[int] = None) -> MainTheoremReport:
    """Rank of the degree-d catalecticant of the twisted d-th power vs the
    saturated value binom(n+d, d), where n+1 is the number of variables."""
    if F.is_zero():
        raise ValueError("zero form")
    if d < 1:
        raise ValueError("need d >= 1")
    assumptions = {"homogeneous": F.is_homogeneous()}
    if not assumptions["homogeneous"]:
        raise ValueError("expected a homogeneous form")
    from .poly import dehomogenize
    f = dehomogenize(F, v)
    assumptions["dehomogenization_nonzero"] = not f.is_zero()
    assumptions["concise"] = is_concise(F)
    assumptions["encompassing_dehomogenization"] = (
        not f.is_zero() and is_encompassing(f))
    n = len(F.vars) - 1
    expected = math.comb(n + d, d)
    guards.check_terms(expected, max_terms)
    guards.check_degree(F.degree() * d)
    P = twist(F ** d, v)
    r = catalecticant_rank(P, d)
    return MainTheoremReport(F, v, d, r, expected, r == expected,
                             assumptions, list(OUT_OF_SCOPE_NOTES))
