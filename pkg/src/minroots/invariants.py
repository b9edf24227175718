"""Structural checks on a finished minimal-root table.

Every check returns a list of human-readable problems; an empty list means
the property holds.  Checks that need coordinates skip tables built
without them.
"""

from __future__ import annotations

from typing import Callable

from .core import INF, CoxeterSystem
from .cyclo import embed, sign
from .naive import doubled_product
from .table import NEG, PLUS, MinimalRootTable

Problems = list[str]


def check_involution(table: MinimalRootTable) -> Problems:
    out = []
    for i, row in enumerate(table.refl):
        for s, j in enumerate(row):
            if j >= 0 and j != i and table.refl[j][s] != i:
                out.append(f"s={s}: root {i} -> {j} but root {j} -> {table.refl[j][s]}")
    return out


def check_neg_placement(table: MinimalRootTable) -> Problems:
    out = []
    for s in range(table.rank):
        where = [i for i in range(table.N) if table.refl[i][s] == NEG]
        if len(where) != 1:
            out.append(f"generator {s}: {len(where)} negative entries")
            continue
        i = where[0]
        if table.depth[i] != 1 or any(e == NEG for t, e in enumerate(table.refl[i]) if t != s):
            out.append(f"generator {s}: negative entry at root {i}, which is not alpha_{s}")
    return out


def check_depths(table: MinimalRootTable) -> Problems:
    out = []
    for i, row in enumerate(table.refl):
        for s, j in enumerate(row):
            if j < 0:
                continue
            gap = table.depth[j] - table.depth[i]
            if (j == i) != (gap == 0) or abs(gap) > 1:
                out.append(f"s={s}: root {i} (depth {table.depth[i]}) -> {j} (depth {table.depth[j]})")
    return out


def check_descents(table: MinimalRootTable) -> Problems:
    out = []
    for i, row in enumerate(table.refl):
        want = 0
        for s, e in enumerate(row):
            if e == NEG or (e >= 0 and table.depth[e] < table.depth[i]):
                want |= 1 << s
        if want != table.descents[i]:
            out.append(f"root {i}: stored descents {table.descents[i]:x}, rows give {want:x}")
    return out


def check_trichotomy(sys: CoxeterSystem, table: MinimalRootTable) -> Problems:
    """The table entry agrees with the sign of the doubled product.

    Among ascents, ``+`` must appear exactly when the product is at most -2.
    """
    if table.coords is None:
        return []
    out = []
    for i, lam in enumerate(table.coords):
        for s in range(table.rank):
            prod = doubled_product(sys, table.ring, lam, s)
            p = sign(prod)
            e = table.refl[i][s]
            if e == NEG or (e >= 0 and table.depth[e] < table.depth[i]):
                ok = p > 0
            elif e == i:
                ok = p == 0
            else:
                ok = p < 0 and (e == PLUS) == (sign(prod + 2) <= 0)
            if not ok:
                out.append(f"root {i}, s={s}: entry {e} but product sign {p}")
    return out


def check_locks(table: MinimalRootTable) -> Problems:
    """A + entry survives every ascent."""
    out = []
    for i, row in enumerate(table.refl):
        locked = [s for s, e in enumerate(row) if e == PLUS]
        if not locked:
            continue
        for u, j in enumerate(row):
            if j >= 0 and table.depth[j] > table.depth[i]:
                for s in locked:
                    if table.refl[j][s] != PLUS:
                        out.append(f"root {i} locked at {s} but its ascent {j} (via {u}) is not")
    return out


def check_monotone(table: MinimalRootTable) -> Problems:
    """Coordinates never decrease along an ascent."""
    if table.coords is None:
        return []
    out = []
    for i, row in enumerate(table.refl):
        for s, j in enumerate(row):
            if j >= 0 and table.depth[j] > table.depth[i]:
                for a, (x, y) in enumerate(zip(table.coords[i], table.coords[j])):
                    if x != y and sign(y - x) < 0:
                        out.append(f"root {i} -> {j} via {s}: coordinate {a} decreases")
    return out


def check_coefficients(sys: CoxeterSystem, table: MinimalRootTable) -> Problems:
    """Nonzero coefficients are 1, at least sqrt 2, and those below 2 are some c_m."""
    if table.coords is None:
        return []
    ring = table.ring
    allowed = [embed(m, ring) for m in sorted(sys.finite_orders()) if m >= 3]
    out = []
    for i, lam in enumerate(table.coords):
        for a, c in enumerate(lam):
            if not c or c.is_one():
                continue
            if sign(c * c - 2) < 0:
                out.append(f"root {i}: coefficient {c.render()} at {a} lies strictly between 0 and sqrt 2")
            elif sign(c - 1) > 0 and sign(c - 2) < 0 and not any(c == w for w in allowed):
                out.append(f"root {i}: coefficient {c.render()} at {a} is below 2 but no c_m")
    return out


def _support(lam) -> frozenset:
    return frozenset(a for a, c in enumerate(lam) if c)


def support_problems(sys: CoxeterSystem, support) -> Problems:
    out = []
    nodes = sorted(support)
    edges = [(u, v) for u in nodes for v in nodes if u < v and v in sys.neighbors(u)]
    if any(sys.m[u][v] is INF for u, v in edges):
        out.append(f"support {nodes} spans an infinite link")
    if len(edges) != len(nodes) - 1:
        out.append(f"support {nodes} has {len(edges)} links, not a tree")
    seen, stack = {nodes[0]}, [nodes[0]]
    while stack:
        u = stack.pop()
        for v in sys.neighbors(u):
            if v in support and v not in seen:
                seen.add(v)
                stack.append(v)
    if len(seen) != len(nodes):
        out.append(f"support {nodes} is disconnected")
    return out


def check_supports(sys: CoxeterSystem, table: MinimalRootTable) -> Problems:
    if table.coords is None:
        return []
    out = []
    for i, lam in enumerate(table.coords):
        out += [f"root {i}: {p}" for p in support_problems(sys, _support(lam))]
    return out


def check_forbidden_patterns(sys: CoxeterSystem, table: MinimalRootTable) -> Problems:
    """No simple link carries (c, 1) with 1 < c < 2; no multiple link carries (1, 1)."""
    if table.coords is None:
        return []
    out = []
    for i, lam in enumerate(table.coords):
        for u, v in sys.edges():
            m = sys.m[u][v]
            x, y = lam[u], lam[v]
            if not x or not y or m is INF:
                continue
            if m == 3:
                for a, b in ((x, y), (y, x)):
                    if b.is_one() and sign(a - 1) > 0 and sign(a - 2) < 0:
                        out.append(f"root {i}: simple link {u}-{v} carries ({a.render()}, 1)")
            elif x.is_one() and y.is_one():
                out.append(f"root {i}: link {u}-{v} of degree {m} carries (1, 1)")
    return out


def check_single_multiple_link(sys: CoxeterSystem, supports) -> Problems:
    """Each given support (of an indecomposable root) spans at most one link of degree above 3."""
    out = []
    for k, sup in supports:
        multi = [(u, v) for u, v in sys.edges()
                 if u in sup and v in sup and sys.m[u][v] is not INF and sys.m[u][v] > 3]
        if len(multi) > 1:
            out.append(f"indecomposable root {k}: links {multi} all have degree > 3")
    return out


TABLE_CHECKS: dict[str, Callable] = {
    "involution": lambda sys, t: check_involution(t),
    "neg-placement": lambda sys, t: check_neg_placement(t),
    "depth-steps": lambda sys, t: check_depths(t),
    "descent-sets": lambda sys, t: check_descents(t),
    "trichotomy": check_trichotomy,
    "lock-inheritance": lambda sys, t: check_locks(t),
    "monotone-coefficients": lambda sys, t: check_monotone(t),
    "coefficient-bounds": check_coefficients,
    "support-shape": check_supports,
    "forbidden-patterns": check_forbidden_patterns,
}


def table_invariants(sys: CoxeterSystem, table: MinimalRootTable) -> dict[str, Problems]:
    return {name: fn(sys, table) for name, fn in TABLE_CHECKS.items()}
