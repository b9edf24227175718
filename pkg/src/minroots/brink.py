"""Production construction of the minimal-root table.

No coordinate lookup is used.  A minimal root is stored either as an
*indecomposable* record with its own coefficients in an elementary ring
Z[c_m], or as a *composite* record listing indecomposable components that
overlap only at nodes with coefficient 1.  New roots come from reflecting
an existing root in one of five ways:

* extension: an indecomposable root grows by one node,
* promotion: an indecomposable root changes one coefficient in place,
* fusion: the components meeting at a junction merge into one,
* composition: a dihedral piece is glued on at a unit node,
* replacement: the components around ``s`` are swapped for their image.

Composites are found again through a key made of their sorted component
indices.  Descents of a new root come from walking down its rank-2 orbits,
and ``+`` entries are inherited from lower roots.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Optional

from .core import INF, BuildInvariantError, CoxeterSystem, ResourceLimitError, base_level
from .cyclo import RingElem, get_ring, lift, sign
from .dihedral import dihedral_system
from .table import NEG, PLUS, MinimalRootTable, make_table

DEFAULT_MAX_ROOTS = 1_000_000

INDECOMPOSABLE_TAGS = ("simple", "dihedral", "extension", "promotion", "fusion")
COMPOSITE_TAGS = ("composition", "replacement")


@dataclass
class Record:
    """One minimal root as the builder sees it."""

    index: int
    depth: int
    comps: tuple[int, ...]
    support: frozenset
    unit: frozenset
    tag: str
    parent: Optional[int] = None
    via: Optional[int] = None
    # indecomposable only
    level: int = 3
    coeffs: Optional[dict] = None
    special: tuple = ()
    row: list = field(default_factory=list)
    descents: int = 0

    @property
    def indecomposable(self) -> bool:
        return self.coeffs is not None

    @property
    def degree(self) -> int:
        return self.level


@dataclass(frozen=True)
class Step:
    """Result of reflecting a root: ``fixed``, ``plus``, ``indecomposable`` or ``composite``."""

    kind: str
    tag: str = ""
    support: frozenset = frozenset()
    level: int = 3
    coeffs: Optional[dict] = None
    comps: tuple = ()


FIXED = Step("fixed")
PLUS_STEP = Step("plus")


def _lcm_level(levels) -> int:
    out = 1
    for m in levels:
        if m is not INF and m > 3:
            out = out * m // math.gcd(out, m)
    return 3 if out == 1 else out


def _is_tree(sys: CoxeterSystem, support) -> bool:
    """Connected, acyclic, and free of infinite links."""
    nodes = list(support)
    if not nodes:
        return False
    edges = 0
    for u in nodes:
        for v in sys.neighbors(u):
            if v in support and u < v:
                if sys.m[u][v] is INF:
                    return False
                edges += 1
    if edges != len(nodes) - 1:
        return False
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        u = stack.pop()
        for v in sys.neighbors(u):
            if v in support and v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(nodes)


def t_components(sys: CoxeterSystem, support, T) -> list[frozenset]:
    """Split a tree support at the nodes of ``T``.

    Each component of ``support - T`` is returned together with the ``T``
    nodes attached to it, and each edge joining two ``T`` nodes is its own
    piece.  A single node gives a single piece.
    """
    support = frozenset(support)
    T = frozenset(T) & support
    if len(support) == 1:
        return [support]
    rest = support - T
    out = []
    seen: set = set()
    for start in sorted(rest):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v in sys.neighbors(u):
                if v in rest and v not in comp:
                    comp.add(v)
                    stack.append(v)
        seen |= comp
        attached = {v for u in comp for v in sys.neighbors(u) if v in T}
        out.append(frozenset(comp | attached))
    for u in sorted(T):
        for v in sorted(sys.neighbors(u)):
            if v in T and u < v:
                out.append(frozenset((u, v)))
    return out


class BrinkBuilder:
    """Stateful builder; call :meth:`run` once, then :meth:`table`."""

    def __init__(self, sys: CoxeterSystem, max_roots: int = DEFAULT_MAX_ROOTS):
        self.sys = sys
        self.n = sys.rank
        self.max_roots = max_roots
        self.records: list[Record] = []
        self.by_key: dict[tuple, int] = {}
        self.queue: deque = deque()
        self.finish_order: list[int] = []
        self.census: Counter = Counter()
        self.common = get_ring(base_level(sys))
        self._finished: list[bool] = []

    # records

    def _register(self, rec: Record) -> int:
        if len(self.records) >= self.max_roots:
            raise ResourceLimitError(f"more than {self.max_roots} minimal roots")
        key = rec.comps
        if key in self.by_key:
            raise BuildInvariantError(
                f"composite {key} defined twice (roots {self.by_key[key]} and {rec.index})"
            )
        self.records.append(rec)
        self._finished.append(False)
        self.by_key[key] = rec.index
        self.census[rec.tag] += 1
        return rec.index

    def _new_indecomposable(self, support, coeffs, level, depth, tag, parent=None, via=None) -> int:
        idx = len(self.records)
        ring = get_ring(level)
        coeffs = {u: lift(c, ring) for u, c in coeffs.items()}
        unit = frozenset(u for u, c in coeffs.items() if c.is_one())
        rec = Record(
            idx, depth, (idx,), frozenset(support), unit, tag, parent, via,
            level=ring.level, coeffs=coeffs, row=[None] * self.n,
        )
        self._check_indecomposable(rec)
        return self._register(rec)

    def _new_composite(self, comps, depth, tag, parent, via) -> int:
        idx = len(self.records)
        comps = tuple(sorted(comps))
        support = frozenset().union(*(self.records[c].support for c in comps))
        unit = frozenset().union(*(self.records[c].unit for c in comps))
        rec = Record(idx, depth, comps, support, unit, tag, parent, via, row=[None] * self.n)
        self._check_composite(rec)
        return self._register(rec)

    def coefficient(self, i: int, u: int) -> Optional[RingElem]:
        rec = self.records[i]
        for c in rec.comps:
            co = self.records[c].coeffs
            if u in co:
                return co[u]
        return None

    def coordinates(self, i: int) -> tuple:
        """Coordinates of root ``i`` in the common ring."""
        out = [self.common.zero] * self.n
        for c in self.records[i].comps:
            for u, v in self.records[c].coeffs.items():
                out[u] = lift(v, self.common)
        return tuple(out)

    def locks(self, i: int) -> frozenset:
        return frozenset(s for s, e in enumerate(self.records[i].row) if e == PLUS)

    # structural checks

    def _multiple_links(self, support):
        m = self.sys.m
        return [(u, v, m[u][v]) for u in support for v in self.sys.neighbors(u)
                if v in support and u < v and m[u][v] is not INF and m[u][v] > 3]

    def _boundary(self, support) -> frozenset:
        return frozenset(u for u in support
                         if len(support) == 1 or sum(1 for v in self.sys.neighbors(u) if v in support) <= 1)

    def _check_indecomposable(self, rec: Record) -> None:
        sup = rec.support
        if not _is_tree(self.sys, sup):
            raise BuildInvariantError(f"root {rec.index}: support {sorted(sup)} is not a tree")
        multi = self._multiple_links(sup)
        if len(multi) > 1:
            raise BuildInvariantError(f"root {rec.index}: several links of degree > 3: {multi}")
        expected = multi[0][2] if multi else 3
        if rec.level != expected:
            raise BuildInvariantError(
                f"root {rec.index}: coefficient ring level {rec.level} but support degree {expected}"
            )
        if len(sup) > 1 and not rec.unit <= self._boundary(sup):
            raise BuildInvariantError(
                f"root {rec.index}: unit nodes {sorted(rec.unit)} not on the support boundary"
            )
        if multi and expected > 6:
            u, v, _ = multi[0]
            rec.special = (u, v)
            if len(sup) >= 3 and not self._special_form(rec, u, v):
                detail = {w: c.render() for w, c in sorted(rec.coeffs.items())}
                raise BuildInvariantError(
                    f"root {rec.index}: degree {expected} coefficients {detail} "
                    f"break the n*c_m pattern at special nodes {u},{v}"
                )

    def _special_form(self, rec: Record, u: int, v: int) -> bool:
        ring = get_ring(rec.level)
        c = ring.gen
        bnd = self._boundary(rec.support)

        def multiple_of_c(x: RingElem) -> bool:
            return x.c[0] == 0 and x.c[1] >= 1 and not any(x.c[2:])

        for a, b in ((u, v), (v, u)):
            if a not in bnd:
                continue
            la = rec.coeffs[a]
            if la.is_one():
                if all(multiple_of_c(x) for w, x in rec.coeffs.items() if w != a):
                    return True
            elif sign(la - 2) > 0 and rec.coeffs[b] == c:
                if all(multiple_of_c(x) for w, x in rec.coeffs.items() if w not in (a, b)):
                    return True
        return False

    def _check_composite(self, rec: Record) -> None:
        comps = [self.records[c] for c in rec.comps]
        for i, a in enumerate(comps):
            if not a.indecomposable:
                raise BuildInvariantError(f"root {rec.index}: component {a.index} is not indecomposable")
            for b in comps[i + 1:]:
                shared = a.support & b.support
                if not shared <= (a.unit & b.unit):
                    raise BuildInvariantError(
                        f"root {rec.index}: components {a.index},{b.index} share non-unit nodes "
                        f"{sorted(shared - (a.unit & b.unit))}"
                    )
        if not _is_tree(self.sys, rec.support):
            raise BuildInvariantError(f"root {rec.index}: glued support {sorted(rec.support)} is not a tree")

    # arithmetic

    def _product(self, terms_of, lam_s, s, support, rings):
        """Doubled product 2 lambda_s - sum w * lambda_u over links of s in ``support``."""
        level = _lcm_level(list(rings) + [self.sys.m[s][u] for u in support if u in self.sys.neighbors(s)])
        ring = get_ring(level)
        p = lift(lam_s, ring) * 2 if lam_s is not None else ring.zero
        for u in self.sys.neighbors(s):
            if u in support:
                p = p - ring.weight(self.sys.m[s][u]) * lift(terms_of(u), ring)
        return p

    def _arith(self, i: int, s: int, coeffs: dict, levels, support, tag: str) -> Step:
        """Classify ``s`` applied to the indecomposable vector ``coeffs`` exactly."""
        lam_s = coeffs.get(s)
        p = self._product(coeffs.get, lam_s, s, support, levels)
        sg = sign(p)
        if sg > 0:
            raise BuildInvariantError(f"root {i}: generator {s} is an unrecorded descent")
        if sg == 0:
            return FIXED
        if sign(p + 2) <= 0:
            return PLUS_STEP
        new_support = frozenset(support) | {s}
        multi = self._multiple_links(new_support)
        orders = {mm for _, _, mm in multi}
        if len(orders) > 1 or len(multi) > 1:
            raise BuildInvariantError(
                f"root {i}: reflecting at {s} gives a minimal root with mixed links {multi}"
            )
        level = orders.pop() if orders else 3
        ring = get_ring(level)
        out = {u: lift(c, ring) for u, c in coeffs.items()}
        p = self._product(out.get, out.get(s), s, support, [level])
        out[s] = (out[s] if s in out else ring.zero) - lift(p, ring)
        return Step("indecomposable", tag, new_support, level, out)

    # the five operations

    def extend(self, i: int, s: int) -> Step:
        rec = self.records[i]
        if s in rec.support:
            raise ValueError(f"generator {s} is in the support of root {i}")
        links = [u for u in self.sys.neighbors(s) if u in rec.support]
        if not links:
            return FIXED
        if len(links) > 1 or self.sys.m[s][links[0]] is INF:
            return PLUS_STEP
        t = links[0]
        if t in rec.unit and len(rec.support) > 1:
            return self.compose([i, self.records[t].row[s]])
        if rec.indecomposable:
            return self._arith(i, s, rec.coeffs, [rec.level], rec.support, "extension")
        (c,) = [c for c in rec.comps if t in self.records[c].support]
        return self.replace(i, c, s)

    def promote(self, i: int, s: int) -> Step:
        rec = self.records[i]
        if not rec.indecomposable or s not in rec.support:
            raise ValueError(f"promotion needs an indecomposable root containing {s}")
        return self._arith(i, s, rec.coeffs, [rec.level], rec.support, "promotion")

    def fuse(self, i: int, s: int) -> Step:
        rec = self.records[i]
        comps = [self.records[c] for c in rec.comps]
        if not all(s in c.support for c in comps):
            raise ValueError(f"generator {s} is not shared by every component of root {i}")
        coeffs: dict = {}
        for c in comps:
            coeffs.update(c.coeffs)
        if not coeffs[s].is_one():
            raise ValueError(f"junction {s} of root {i} does not carry coefficient 1")
        return self._arith(i, s, coeffs, [c.level for c in comps], rec.support, "fusion")

    def compose(self, parts) -> Step:
        """Glue existing roots at shared unit nodes; validation only, no registration."""
        comps: set = set()
        for p in parts:
            comps.update(self.records[p].comps)
        recs = [self.records[p] for p in parts]
        for a_i, a in enumerate(recs):
            for b in recs[a_i + 1:]:
                shared = a.support & b.support
                bad = shared - (a.unit & b.unit)
                if bad:
                    raise BuildInvariantError(
                        f"cannot glue roots {a.index},{b.index} at non-unit nodes {sorted(bad)}"
                    )
        support = frozenset().union(*(r.support for r in recs))
        if not _is_tree(self.sys, support):
            raise BuildInvariantError(f"glued support {sorted(support)} is not a tree")
        return Step("composite", "composition", support, comps=tuple(sorted(comps)))

    def star(self, i: int, s: int) -> int:
        rec = self.records[i]
        key = tuple(c for c in rec.comps if s in self.records[c].support)
        if not key:
            raise ValueError(f"generator {s} is not in the support of root {i}")
        try:
            return self.by_key[key]
        except KeyError:
            raise BuildInvariantError(f"star of root {i} at {s} (components {key}) was never defined") from None

    def replace(self, i: int, old: int, s: int) -> Step:
        e = self.records[old].row[s]
        if e is None:
            raise BuildInvariantError(f"root {old} is not finished at {s} while finishing root {i}")
        if e == old:
            return FIXED
        if e == PLUS:
            return PLUS_STEP
        if e == NEG or self.records[e].depth < self.records[old].depth:
            raise BuildInvariantError(f"root {i}: generator {s} is an unrecorded descent")
        comps = (set(self.records[i].comps) - set(self.records[old].comps)) | set(self.records[e].comps)
        return Step("composite", "replacement", comps=tuple(sorted(comps)))

    def reflect(self, i: int, s: int) -> Step:
        """Dispatch an unassigned ``(s, root i)`` to the right operation."""
        rec = self.records[i]
        if s not in rec.support:
            return self.extend(i, s)
        holders = [c for c in rec.comps if s in self.records[c].support]
        if len(holders) == 1:
            if rec.indecomposable:
                return self.promote(i, s)
            return self.replace(i, holders[0], s)
        if len(holders) == len(rec.comps):
            return self.fuse(i, s)
        return self.replace(i, self.star(i, s), s)

    # descents and locks

    def _ascend(self, x: int, first: int, other: int, steps: int) -> int:
        letters = (first, other)
        for k in range(steps):
            e = self.records[x].row[letters[k % 2]]
            if e is None or e < 0 or self.records[e].depth != self.records[x].depth + 1:
                raise BuildInvariantError(f"orbit walk left the finished region at root {x}")
            x = e
        return x

    def descents_by_walk(self, mu: int, lam: int, s: int) -> dict[int, int]:
        """Descents t != s of ``mu = s lam`` with their images ``t mu``."""
        R = self.records
        out = {}
        for t in range(self.n):
            if t == s or not (R[lam].descents >> t & 1):
                continue
            m = self.sys.m[s][t]
            if m is INF or R[lam].row[t] == NEG:
                continue
            x, k = lam, 0
            letters = (t, s)
            while True:
                e = R[x].row[letters[k % 2]]
                if e is None:
                    raise BuildInvariantError(f"orbit walk from root {lam} hit unfinished root {x}")
                if e < 0 or R[e].depth >= R[x].depth:
                    break
                x, k = e, k + 1
            if R[mu].depth - R[x].depth != m:
                continue
            ends = [self._ascend(x, s, t, m - 1), self._ascend(x, t, s, m - 1)]
            others = [y for y in ends if y != lam]
            if len(others) != 1:
                raise BuildInvariantError(f"orbit of root {lam} under ({s},{t}) is not dihedral")
            out[t] = others[0]
        return out

    def _set(self, i: int, s: int, e: int) -> None:
        cur = self.records[i].row[s]
        if cur is not None and cur != e:
            raise BuildInvariantError(f"root {i}: entry for {s} already {cur}, now {e}")
        self.records[i].row[s] = e

    def inherit_locks(self, mu: int) -> None:
        R = self.records
        for t in range(self.n):
            if not (R[mu].descents >> t & 1):
                continue
            low = R[mu].row[t]
            for u, e in enumerate(R[low].row):
                if e == PLUS and u != t:
                    self._set(mu, u, PLUS)

    # build

    def _define(self, i: int, s: int, step: Step) -> int:
        depth = self.records[i].depth + 1
        if step.kind == "indecomposable":
            j = self._new_indecomposable(step.support, step.coeffs, step.level, depth, step.tag, i, s)
        else:
            j = self._new_composite(step.comps, depth, step.tag, i, s)
        R = self.records
        self._set(i, s, j)
        self._set(j, s, i)
        R[j].descents |= 1 << s
        for t, low in self.descents_by_walk(j, i, s).items():
            self._set(j, t, low)
            self._set(low, t, j)
            R[j].descents |= 1 << t
        self.inherit_locks(j)
        return j

    def finish(self, i: int) -> list[int]:
        """Fill every missing entry of root ``i``; return the roots it created."""
        created = []
        row = self.records[i].row
        for s in range(self.n):
            if row[s] is not None:
                continue
            step = self.reflect(i, s)
            if step.kind == "fixed":
                row[s] = i
            elif step.kind == "plus":
                row[s] = PLUS
            else:
                created.append(self._define(i, s, step))
        self._finished[i] = True
        self.finish_order.append(i)
        return created

    def _stage(self) -> None:
        sys, R = self.sys, self.records
        one = get_ring(3).one
        for s in range(self.n):
            self._new_indecomposable({s}, {s: one}, 3, 1, "simple")
            R[s].row[s] = NEG
            R[s].descents = 1 << s
        for s in range(self.n):
            for t in range(self.n):
                if s == t:
                    continue
                m = sys.m[s][t]
                if m == 2:
                    R[s].row[t] = s
                elif m is INF:
                    R[s].row[t] = PLUS
        deep = []
        batches: dict[int, list] = {2: [], 3: []}
        for s, t in sys.edges():
            m = sys.m[s][t]
            if m is INF:
                continue
            roots = dihedral_system(s, t, m)
            idx = {0: s, m - 1: t}
            for d in sorted(roots, key=lambda r: r.depth):
                if d.k in idx:
                    continue
                idx[d.k] = self._new_indecomposable(
                    {s, t}, {s: d.coeffs[0], t: d.coeffs[1]}, m, d.depth, "dihedral"
                )
            for d in roots:
                i = idx[d.k]
                for g, img in ((s, d.s_image), (t, d.t_image)):
                    self._set(i, g, img if img < 0 else idx[img])
                    if img == NEG or (img >= 0 and roots[img].depth < d.depth):
                        R[i].descents |= 1 << g
                if d.k not in (0, m - 1):
                    (batches[d.depth] if d.enqueue else deep).append(i)
        for s in range(self.n):
            self._finished[s] = True
            self.finish_order.append(s)
        # locks flow upward through the dihedral orbits in depth order
        for i in sorted(batches[2] + batches[3] + deep, key=lambda i: R[i].depth):
            self.inherit_locks(i)
        for i in deep:
            if self.finish(i):
                raise BuildInvariantError(f"dihedral root {i} of depth >= 4 produced a new root")
        self.queue.extend(batches[2])
        self.queue.extend(batches[3])

    def run(self) -> "BrinkBuilder":
        self._stage()
        last = 2
        while self.queue:
            i = self.queue.popleft()
            d = self.records[i].depth
            if d < last:
                raise BuildInvariantError("queue depth decreased")
            last = d
            self.queue.extend(self.finish(i))
        for rec in self.records:
            if any(e is None for e in rec.row):
                raise BuildInvariantError(f"root {rec.index} left unfinished")
        return self

    def table(self, coords: bool = True) -> MinimalRootTable:
        R = self.records
        return make_table(
            self.n,
            [r.row for r in R],
            [r.depth for r in R],
            [r.descents for r in R],
            [self.coordinates(r.index) for r in R] if coords else None,
            self.common if coords else None,
        )

    # post hoc checks

    def verify_provenance(self) -> list[str]:
        """Re-check the preconditions of every tagged defining step; return problems."""
        R = self.records
        bad = []
        for r in R:
            if r.tag in ("simple", "dihedral"):
                continue
            p, s = R[r.parent], r.via
            ok = True
            if r.tag == "extension":
                ok = r.indecomposable and p.indecomposable and s not in p.support and r.support == p.support | {s}
            elif r.tag == "promotion":
                ok = r.indecomposable and p.indecomposable and s in p.support and r.support == p.support
            elif r.tag == "fusion":
                ok = (r.indecomposable and not p.indecomposable and s in p.unit
                      and all(s in R[c].support for c in p.comps) and r.support == p.support)
            elif r.tag == "composition":
                ok = not r.indecomposable and s not in p.support and s in r.support
            elif r.tag == "replacement":
                ok = not r.indecomposable and not p.indecomposable and r.support >= p.support
            if not ok:
                bad.append(f"root {r.index}: {r.tag} from root {p.index} at {s} fails its precondition")
        return bad

    def decomposition_problems(self) -> list[str]:
        """Every composite's components must be roots of the table."""
        bad = []
        for r in self.records:
            if r.indecomposable:
                continue
            for c in r.comps:
                if self.by_key.get((c,)) != c:
                    bad.append(f"root {r.index}: component {c} not registered")
            pieces = t_components(self.sys, r.support, r.unit)
            got = sorted(tuple(sorted(self.records[c].support)) for c in r.comps)
            want = sorted(tuple(sorted(p)) for p in pieces)
            if got != want:
                bad.append(f"root {r.index}: components {got} differ from T-components {want}")
        return bad


def build_table(sys: CoxeterSystem, max_roots: int = DEFAULT_MAX_ROOTS, coords: bool = True) -> MinimalRootTable:
    return BrinkBuilder(sys, max_roots).run().table(coords)
