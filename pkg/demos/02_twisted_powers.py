"""Why the twist matters: catalecticant ranks of powers.

Raw powers of a form can have middle catalecticants larger than the count
realizable by a product-of-points scheme; dividing each term by the
factorial of its distinguished-variable exponent fixes that, and the twisted
powers land exactly on the binomial value.
"""
from __future__ import annotations

from math import comb

from apolarium.apolar import catalecticant_rank
from apolarium.encompass import verify_main_theorem
from apolarium.poly import parse, twist

# A four-variable quadric: every twisted power saturates binom(3+d, d).
Q = parse("x0*x3 + x1^2 + x2^2")
for d in (1, 2, 3):
    r = catalecticant_rank(twist(Q ** d, "x0"), d)
    print(f"d = {d}: rank {r}  (binomial value {comb(3 + d, d)})")

print()

# The control: a concise cubic in six variables whose square overshoots.
F = parse("x1^3 + x2^3 + x0*x1*y1 + x0*x2*y2 + x0^2*y0")
S = F ** 2
print("untwisted middle rank:", catalecticant_rank(S, 3))
print("twisted   middle rank:", catalecticant_rank(twist(S, "x0"), 3),
      " = binom(7,2) =", comb(7, 2))

print()

# The packaged check reports the rank comparison together with the
# assumptions it could verify and the claims that stay out of scope.
rep = verify_main_theorem(F, "x0", 2)
print("equal:", rep.equal, "| assumptions:", rep.assumptions)
for note in rep.out_of_scope:
    print("out of scope:", note)
