"""
Cross-checking against brute force
==================================

The verifier compares both builders, runs the structural invariants and
checks every left product in a ball of the Cayley graph against a
reflection-representation oracle that never looks at a table.
"""

from __future__ import annotations

import random

from minroots.catalog import SYSTEMS, random_system
from minroots.core import INF
from minroots.verify import cross_check

print(cross_check(SYSTEMS["fig1"], 6))
print()
rng = random.Random(1)
for k in range(3):
    sys = random_system(4, [2, 3, 4, 5, INF], rng)
    rep = cross_check(sys, 5)
    print(f"random rank-4 system {k}: {'PASS' if rep.passed else 'FAIL'}")
