"""Spaces of partial derivatives, dimensions, and annihilators.

Everything below is exact: coefficients are fractions, dimensions are ranks
of sparse echelon forms, no floats anywhere.
"""
from __future__ import annotations

from apolarium.apolar import annihilator_upto, apolar_dim, hilbert_function
from apolarium.poly import format_poly, parse

# The span of all derivatives of f is finite-dimensional; its dimension is
# the degree of the quotient algebra of dual operators modulo everything
# that kills f.
for text in ("x1^2", "x1*x2", "x1^2 + x2", "(x1^2 + x2)^2",
             "x1*x2*x3*x4*x5*x6*x7*x8*x9"):
    f = parse(text)
    print(f"{text!s:40s} dim {apolar_dim(f):4d}   "
          f"HF {tuple(hilbert_function(f))}")

print()

# Annihilators up to a degree bound.  For x1*x2 the squares of both duals
# kill the product; for x1^2 + x2 the interesting generator is the operator
# alpha1^2 - 2*alpha2 witnessing that the second variable is a square in
# disguise.
for text in ("x1*x2", "x1^2 + x2"):
    gens = annihilator_upto(parse(text), 2)
    print(f"operators of degree <= 2 killing {text}:")
    for g in gens:
        print("   ", format_poly(g))
