"""Multiplication tensors of apolar algebras and the stock constructions.

The apolar algebra of x1^2 + ... + xm^2 multiplies exactly like the
(m+2)-dimensional three-sum tensor: a unit row, a unit column, and the
middle square landing on the top basis vector.
"""
from __future__ import annotations

from apolarium.apolar import structure_tensor_of_apolar
from apolarium.poly import format_poly, parse
from apolarium.tensor3 import (AbelianGroup, cw, group_tensor,
                               kronecker_power, one_generic_extension)

T, basis = structure_tensor_of_apolar(parse("x1^2 + x2^2"))
print("basis of the quotient:", [format_poly(b) for b in basis])
print("matches the 4-dim three-sum tensor:", T == cw(4))
print("support:", T.support())
print()

# Group addition tables are tensors too; the cyclic group of order three
# sits over the same 3x3x3 grid as the smallest three-sum tensor.
G = group_tensor(AbelianGroup([3]))
print("Z/3 table:", G.dims, "with", G.nnz(), "unit entries")
print("cw(3):    ", cw(3).dims, "with", cw(3).nnz(), "unit entries")
print()

# Kronecker powers and the one-generic repair of a concise tensor.
K = kronecker_power(cw(3), 2)
print("second power:", K.dims, "nnz", K.nnz())
E = one_generic_extension(cw(3), 1)
print("extension with identity slice:", E.dims, "nnz", E.nnz())
print("identity slice:")
for row in E.slice(0, 0):
    print("   ", [int(v) for v in row])
