"""
Exact arithmetic in Z[2cos(pi/L)]
=================================

Root coordinates live in rings generated by 2cos(pi/L).  Elements are
integer polynomials reduced modulo the minimal polynomial, and signs are
decided exactly from an isolating interval for the generator.
"""

from __future__ import annotations

from minroots.cyclo import embed, get_ring, minimal_polynomial, sign

# The golden ratio appears as c_5 = 2cos(pi/5), a root of x^2 - x - 1.
print("minimal polynomial for L=5:", minimal_polynomial(5))
R5 = get_ring(5)
phi = R5.gen
print("phi^2 - phi - 1 =", (phi * phi - phi - 1).render())

# The same weight embedded in a larger ring keeps its value.
R15 = get_ring(15)
print("c_5 in the level-15 ring:", embed(5, R15).render(), "~", float(embed(5, R15)))

# Exact sign tests, even for numbers very close to zero.
sqrt2 = embed(4, get_ring(12))
sqrt3 = embed(6, get_ring(12))
diff = sqrt2 * 99 - sqrt3 * 80  # 140.007... - 138.564...
print("sign(99 sqrt2 - 80 sqrt3) =", sign(diff), "float", float(diff))
