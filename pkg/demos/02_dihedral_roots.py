"""
Minimal roots of a dihedral group
=================================

In rank two every positive root is minimal.  The coefficients follow a
Chebyshev-like recurrence, and the roots pair up so that each generator
swaps them along the two chains.
"""

from __future__ import annotations

from minroots.dihedral import coeff_C, dihedral_system

for m in (3, 4, 5, 6, 7):
    print(f"m={m}: C_n =", [round(float(coeff_C(n, m)), 4) for n in range(m + 1)])

print()
print("roots of I2(7), with coordinates and images under s and t:")
for r in dihedral_system(0, 1, 7):
    coords = ", ".join(c.render() for c in r.coeffs)
    print(f"  #{r.k} depth {r.depth}: ({coords})  s->{r.s_image}  t->{r.t_image}")
