"""
Decomposing a minimal root
==========================

On the affine F4 diagram (a path with labels 3, 3, 4, 3) the root
(1, 1, 1, sqrt2, sqrt2) is built from three smaller indecomposable roots.
Reflecting it at the shared node is done by passing to the star of that
node and replacing one component.
"""

from __future__ import annotations

from minroots.brink import BrinkBuilder
from minroots.catalog import _path

b = BrinkBuilder(_path([3, 3, 4, 3])).run()


def show(i):
    return "(" + ", ".join(f"{float(x):.3f}".rstrip("0").rstrip(".") for x in b.coordinates(i)) + ")"


lam = next(r.index for r in b.records
           if not r.indecomposable and len(r.support) == 5 and r.depth == min(
               q.depth for q in b.records if not q.indecomposable and len(q.support) == 5))
rec = b.records[lam]
print("lambda", show(lam), "tag", rec.tag)
for c in rec.comps:
    print("  component", show(c), "on nodes", sorted(b.records[c].support))

mu = b.star(lam, 2)
print("star at node 2:", show(mu))
print("s_2 applied to the star:", show(b.records[mu].row[2]))
print("s_2 applied to lambda:", show(rec.row[2]), "via", b.records[rec.row[2]].tag)
print("provenance problems:", b.verify_provenance() or "none")
