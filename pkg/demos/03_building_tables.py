"""
Building reflection tables two ways
===================================

The naive builder reflects coordinates and classifies each product; the
structural builder derives every entry from root decompositions.  Both
produce the same table once put in canonical order.
"""

from __future__ import annotations

import time

from minroots import build_table, build_table_naive, canonicalize, serialize
from minroots.catalog import SYSTEMS

for name in ("A3", "H3", "F4", "A2~", "fig1", "triangle(2,3,7)"):
    sys = SYSTEMS[name]
    t0 = time.perf_counter()
    a = canonicalize(build_table_naive(sys))
    t1 = time.perf_counter()
    b = canonicalize(build_table(sys))
    t2 = time.perf_counter()
    same = serialize(a) == serialize(b)
    print(f"{name:16s} N={b.N:3d}  naive {t1 - t0:.3f}s  structural {t2 - t1:.3f}s  identical={same}")

# A small table printed in full; -1 marks the negative root, -2 a '+' entry.
t = canonicalize(build_table(SYSTEMS["fig1"]))
print()
for i in range(t.N):
    coords = ", ".join(c.render() for c in t.coords[i])
    print(f"  root {i} depth {t.depth[i]} ({coords}): {t.refl[i]}")
