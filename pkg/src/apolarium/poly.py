"""Sparse multivariate polynomials over Q, plus the differentiation pairing.

A polynomial is a mapping from exponent vectors (fixed-length int tuples,
one slot per variable) to nonzero Fractions.  The variable tuple is part of
the value; binary arithmetic requires identical variable tuples, while the
differentiation pairing `apply` is positional (variable i of the operator
differentiates variable i of the argument, names are cosmetic).

Canonical term order is graded: lower total degree first, and within a degree
the monomial with the larger exponent on an earlier variable comes first
(so 1 < x1 < x2 < x1^2 < x1*x2 < x2^2).  All printed output and all
echelonized bases elsewhere follow this order.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .exact import Rat, rat

Exponent = Tuple[int, ...]
TermMap = Dict[Exponent, Rat]


class VarMismatchError(ValueError):
    pass


class ParseError(ValueError):
    pass


def monomial_key(e: Exponent):
    """Sort token for the canonical graded order (ascending)."""
    return (sum(e), tuple(-x for x in e))


_NAT_SPLIT = re.compile(r"(\d+)")


def natural_key(name: str):
    """Sort token treating digit runs numerically, so x2 < x10."""
    parts = _NAT_SPLIT.split(name)
    return tuple(int(p) if p.isdigit() else p for p in parts)


class Poly:
    """Immutable-by-convention sparse polynomial."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Dict[Exponent, object]):
        vs = tuple(vars)
        if len(set(vs)) != len(vs):
            raise ValueError(f"duplicate variable names in {vs}")
        tm: TermMap = {}
        for e, c in terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != len(vs):
                raise ValueError(f"exponent {e} has wrong length for vars {vs}")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            c = rat(c)
            if c:
                tm[e] = tm.get(e, Fraction(0)) + c
                if not tm[e]:
                    del tm[e]
        self.vars = vs
        self.terms = tm

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "Poly":
        return cls(vars, {})

    @classmethod
    def const(cls, vars: Sequence[str], c) -> "Poly":
        return cls(vars, {(0,) * len(tuple(vars)): rat(c)})

    @classmethod
    def variable(cls, vars: Sequence[str], name: str) -> "Poly":
        vs = tuple(vars)
        i = vs.index(name)
        e = [0] * len(vs)
        e[i] = 1
        return cls(vs, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, vars: Sequence[str], exp: Sequence[int], c=1) -> "Poly":
        return cls(vars, {tuple(exp): rat(c)})

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; the zero polynomial has degree -1."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def coeff(self, exp: Sequence[int]) -> Rat:
        return self.terms.get(tuple(exp), Fraction(0))

    def constant_term(self) -> Rat:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def terms_sorted(self) -> List[Tuple[Exponent, Rat]]:
        return [(e, self.terms[e]) for e in sorted(self.terms, key=monomial_key)]

    def graded_part(self, d: int) -> "Poly":
        return Poly(self.vars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def truncate(self, d: int) -> "Poly":
        """Sum of the homogeneous parts of degree <= d."""
        return Poly(self.vars, {e: c for e, c in self.terms.items() if sum(e) <= d})

    def evaluate(self, point: Sequence) -> Rat:
        if len(point) != len(self.vars):
            raise VarMismatchError("point has wrong length")
        pt = [rat(x) for x in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v *= x ** k
            total += v
        return total

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.vars != other.vars:
            raise VarMismatchError(f"{self.vars} vs {other.vars}")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(self.vars, other)
        self._check(other)
        tm = dict(self.terms)
        for e, c in other.terms.items():
            tm[e] = tm.get(e, Fraction(0)) + c
        return Poly(self.vars, tm)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.const(self.vars, other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = rat(other)
            return Poly(self.vars, {e: c * v for e, v in self.terms.items()})
        self._check(other)
        tm: TermMap = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                tm[e] = tm.get(e, Fraction(0)) + c1 * c2
        return Poly(self.vars, tm)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (Fraction(1) / rat(other))

    def __pow__(self, d: int):
        if d < 0:
            raise ValueError("negative power")
        out = Poly.const(self.vars, 1)
        base = self
        while d:
            if d & 1:
                out = out * base
            base = base * base if d > 1 else base
            d >>= 1
        return out

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.vars == other.vars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Poly({','.join(self.vars)}: {format_poly(self)})"

    def __str__(self):
        return format_poly(self)


# -- the differentiation pairing --------------------------------------------


def apply(sigma: Poly, f: Poly) -> Poly:
    """Apply a dual operator to a polynomial: sigma ∘ f.

    Positional pairing: the k-th variable of sigma differentiates the k-th
    variable of f.  On monomials, a^k ∘ x^m = m!/(m-k)! * x^(m-k) when
    k <= m componentwise, else 0; extended bilinearly.
    """
    if len(sigma.vars) != len(f.vars):
        raise VarMismatchError(
            f"operator arity {len(sigma.vars)} != polynomial arity {len(f.vars)}")
    tm: TermMap = {}
    for s, cs in sigma.terms.items():
        for m, cf in f.terms.items():
            if any(k > mm for k, mm in zip(s, m)):
                continue
            scale = 1
            for k, mm in zip(s, m):
                if k:
                    scale *= math.perm(mm, k)
            e = tuple(mm - k for mm, k in zip(m, s))
            tm[e] = tm.get(e, Fraction(0)) + cs * cf * scale
    return Poly(f.vars, tm)


def diff(f: Poly, name: str) -> Poly:
    """Partial derivative with respect to one variable."""
    return apply(Poly.variable(f.vars, name), f)


def twist(F: Poly, v: str) -> Poly:
    """Divide each term's coefficient by (exponent of v)!."""
    if v not in F.vars:
        raise VarMismatchError(f"unknown variable {v!r}")
    i = F.vars.index(v)
    return Poly(F.vars, {e: c / math.factorial(e[i]) for e, c in F.terms.items()})


# -- variable plumbing -------------------------------------------------------


def dehomogenize(F: Poly, v: str) -> Poly:
    """Substitute v = 1 and drop v from the variable tuple."""
    if v not in F.vars:
        raise VarMismatchError(f"unknown variable {v!r}")
    i = F.vars.index(v)
    new_vars = F.vars[:i] + F.vars[i + 1:]
    tm: TermMap = {}
    for e, c in F.terms.items():
        ne = e[:i] + e[i + 1:]
        tm[ne] = tm.get(ne, Fraction(0)) + c
    return Poly(new_vars, tm)


def homogenize(f: Poly, v: str, d: Optional[int] = None,
               index: Optional[int] = None) -> Poly:
    """Multiply each term by v^(d - its degree); v must be fresh.

    d defaults to deg f.  The new variable is inserted where it belongs under
    the natural name order (x0 goes in front of x1), unless an explicit index
    is given.
    """
    if v in f.vars:
        raise VarMismatchError(f"variable {v!r} already present")
    if d is None:
        d = f.degree()
    if d < f.degree():
        raise ValueError(f"target degree {d} < deg f = {f.degree()}")
    if index is None:
        index = 0
        key = natural_key(v)
        while index < len(f.vars) and natural_key(f.vars[index]) < key:
            index += 1
    new_vars = f.vars[:index] + (v,) + f.vars[index:]
    tm: TermMap = {}
    for e, c in f.terms.items():
        ne = e[:index] + (d - sum(e),) + e[index:]
        tm[ne] = c
    return Poly(new_vars, tm)


def restrict_zero(F: Poly, vars_to_kill: Iterable[str]) -> Poly:
    """Substitute 0 for the listed variables and drop them from the tuple."""
    kill = list(vars_to_kill)
    for v in kill:
        if v not in F.vars:
            raise VarMismatchError(f"unknown variable {v!r}")
    kill_idx = {F.vars.index(v) for v in kill}
    new_vars = tuple(v for i, v in enumerate(F.vars) if i not in kill_idx)
    tm: TermMap = {}
    for e, c in F.terms.items():
        if any(e[i] for i in kill_idx):
            continue
        ne = tuple(x for i, x in enumerate(e) if i not in kill_idx)
        tm[ne] = c
    return Poly(new_vars, tm)


def mul(f: Poly, g: Poly) -> Poly:
    return f * g


def power(f: Poly, d: int) -> Poly:
    return f ** d


def boxtimes_power(f: Poly, d: int) -> Poly:
    """Product of d copies of f in pairwise-disjoint variables.

    Copy t (1-based) renames every variable v to v + str(t), e.g.
    boxtimes_power on vars (x1, x2) with d = 2 lives on (x11, x21, x12, x22).
    """
    if d < 1:
        raise ValueError("need d >= 1")
    n = len(f.vars)
    new_vars: List[str] = []
    for t in range(1, d + 1):
        new_vars.extend(v + str(t) for v in f.vars)
    if len(set(new_vars)) != len(new_vars):
        raise VarMismatchError(f"copy renaming collides on {f.vars}")
    out = Poly.const(new_vars, 1)
    for t in range(d):
        tm: TermMap = {}
        for e, c in f.terms.items():
            ne = [0] * (n * d)
            ne[t * n:(t + 1) * n] = e
            tm[tuple(ne)] = c
        out = out * Poly(new_vars, tm)
    return out


def ldf(f: Poly) -> Poly:
    """Lowest-degree homogeneous part."""
    if f.is_zero():
        raise ValueError("ldf of the zero polynomial")
    return f.graded_part(min(sum(e) for e in f.terms))


def tdf(f: Poly) -> Poly:
    """Top-degree homogeneous part."""
    if f.is_zero():
        raise ValueError("tdf of the zero polynomial")
    return f.graded_part(f.degree())


def _compositions(total: int, parts: int):
    """All nonnegative integer tuples of given length summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def monomials_of_degree(nvars: int, d: int) -> List[Exponent]:
    """Exponent vectors of total degree d, in canonical (graded) order."""
    return sorted(_compositions(d, nvars), key=monomial_key)


def monomials_upto(nvars: int, d: int) -> List[Exponent]:
    """Exponent vectors of total degree <= d, in canonical order."""
    out: List[Exponent] = []
    for k in range(d + 1):
        out.extend(monomials_of_degree(nvars, k))
    return out


# -- text form ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|(.))")


def _tokenize(text: str):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        pos = m.end()
        num, name, sym = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("var", name))
        elif sym.strip():
            out.append(("sym", sym))
    return out


class _Parser:
    """Recursive descent for the polynomial grammar.

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor (('*')? factor)*      -- juxtaposition allowed
    factor := atom ('^' integer)?
    atom   := number | variable | '(' expr ')'
    number := integer ('/' integer)?

    Identifiers are greedy ([A-Za-z][A-Za-z0-9]*), so products of variables
    need '*' or parentheses between them: "x1*x2", not "x1x2".
    """

    def __init__(self, tokens, vars: Tuple[str, ...]):
        self.toks = tokens
        self.i = 0
        self.vars = vars

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect_sym(self, s):
        kind, val = self.take()
        if kind != "sym" or val != s:
            raise ParseError(f"expected {s!r}, got {val!r}")

    def parse_expr(self) -> Poly:
        kind, val = self.peek()
        neg = False
        if kind == "sym" and val in "+-":
            self.take()
            neg = val == "-"
        p = self.parse_term()
        if neg:
            p = -p
        while True:
            kind, val = self.peek()
            if kind == "sym" and val in "+-":
                self.take()
                q = self.parse_term()
                p = p - q if val == "-" else p + q
            else:
                return p

    def parse_term(self) -> Poly:
        p = self.parse_factor()
        while True:
            kind, val = self.peek()
            if kind == "sym" and val == "*":
                self.take()
                p = p * self.parse_factor()
            elif kind in ("num", "var") or (kind == "sym" and val == "("):
                p = p * self.parse_factor()
            else:
                return p

    def parse_factor(self) -> Poly:
        p = self.parse_atom()
        kind, val = self.peek()
        if kind == "sym" and val == "^":
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer")
            p = p ** val
        return p

    def parse_atom(self) -> Poly:
        kind, val = self.take()
        if kind == "num":
            kind2, val2 = self.peek()
            if kind2 == "sym" and val2 == "/":
                self.take()
                kind3, val3 = self.take()
                if kind3 != "num" or val3 == 0:
                    raise ParseError("bad rational coefficient")
                return Poly.const(self.vars, Fraction(val, val3))
            return Poly.const(self.vars, val)
        if kind == "var":
            if val not in self.vars:
                raise ParseError(f"unknown variable {val!r}")
            return Poly.variable(self.vars, val)
        if kind == "sym" and val == "(":
            p = self.parse_expr()
            self.expect_sym(")")
            return p
        raise ParseError(f"unexpected token {val!r}")


def _collect_names(tokens) -> Tuple[str, ...]:
    seen = []
    for kind, val in tokens:
        if kind == "var" and val not in seen:
            seen.append(val)
    return tuple(sorted(seen, key=natural_key))


def parse(text: str, vars: Optional[Sequence[str]] = None) -> Poly:
    """Parse polynomial text.

    When vars is omitted, the variable tuple is the set of names appearing in
    the text in natural order (x0 < x1 < ... < x10).  Pass vars explicitly to
    fix the ambient ring (e.g. to include variables the text does not use).
    """
    tokens = _tokenize(text)
    vs = tuple(vars) if vars is not None else _collect_names(tokens)
    if not tokens:
        raise ParseError("empty input")
    parser = _Parser(tokens, vs)
    p = parser.parse_expr()
    if parser.i != len(tokens):
        raise ParseError(f"trailing input at token {parser.i}")
    return p


def _format_coeff(c: Rat) -> str:
    return str(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Poly) -> str:
    """Canonical text: graded term order, '*' products, 'p/q' coefficients."""
    if p.is_zero():
        return "0"
    chunks: List[str] = []
    for e, c in p.terms_sorted():
        factors = [f"{v}^{k}" if k > 1 else v
                   for v, k in zip(p.vars, e) if k]
        mono = "*".join(factors)
        a = abs(c)
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)
