"""Reference construction of the minimal-root table.

Roots are processed through a FIFO queue in order of increasing depth and
deduplicated by exact coordinates.  Every reflection is classified by the
doubled inner product ``p = 2 (lambda . alpha_s)``: positive is a descent,
zero fixes the root, ``p <= -2`` leaves the minimal roots and anything in
between gives a new minimal root.

This path deliberately avoids the descent walks and lock inheritance used
by :mod:`minroots.brink`, so the two can be compared.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .core import CoxeterSystem, ResourceLimitError, base_level
from .cyclo import BaseRing, RingElem, get_ring, sign
from .table import NEG, PLUS, MinimalRootTable, descents_from_rows, make_table

DEFAULT_MAX_ROOTS = 1_000_000


@dataclass(frozen=True)
class Classification:
    """Outcome of reflecting a minimal root.

    ``kind`` is one of ``"neg"``, ``"fixed"``, ``"descent"``, ``"new"`` or
    ``"plus"``; ``coords`` holds the reflected coordinates for the last three
    (None for plus).
    """

    kind: str
    coords: Optional[tuple[RingElem, ...]] = None


def _weights(sys: CoxeterSystem, ring: BaseRing):
    return [[(t, ring.weight(sys.m[s][t])) for t in sorted(sys.neighbors(s))] for s in range(sys.rank)]


def doubled_product(sys, ring, lam, s, weights=None) -> RingElem:
    """2 (lambda . alpha_s) = 2 lambda_s - sum over neighbours of weight * lambda_t."""
    w = (weights or _weights(sys, ring))[s]
    p = lam[s] * 2
    for t, wt in w:
        if lam[t]:
            p = p - wt * lam[t]
    return p


def reflect_coordinates(sys, ring, lam, s, weights=None):
    """s(lambda): only the s coordinate changes, to lambda_s - 2 (lambda . alpha_s)."""
    p = doubled_product(sys, ring, lam, s, weights)
    out = list(lam)
    out[s] = lam[s] - p
    return tuple(out)


def classify(sys, ring, lam, s, is_simple_s: bool, weights=None) -> Classification:
    if is_simple_s:
        return Classification("neg")
    p = doubled_product(sys, ring, lam, s, weights)
    sg = sign(p)
    if sg == 0:
        return Classification("fixed", tuple(lam))
    new = list(lam)
    new[s] = lam[s] - p
    new = tuple(new)
    if sg > 0:
        return Classification("descent", new)
    if sign(p + 2) <= 0:
        return Classification("plus")
    return Classification("new", new)


def _key(coords):
    return tuple(c.c for c in coords)


def build_table_naive(
    sys: CoxeterSystem,
    max_roots: int = DEFAULT_MAX_ROOTS,
    ring: BaseRing | None = None,
    finish_order: list | None = None,
) -> MinimalRootTable:
    """Breadth-first construction with a coordinate lookup table.

    ``finish_order``, when given, receives root indices in the order they
    are finished.
    """
    n = sys.rank
    ring = ring or get_ring(base_level(sys))
    weights = _weights(sys, ring)
    coords: list[tuple] = []
    depth: list[int] = []
    refl: list[list] = []
    lookup: dict = {}

    def define(c, d):
        if len(coords) >= max_roots:
            raise ResourceLimitError(f"more than {max_roots} minimal roots")
        idx = len(coords)
        coords.append(c)
        depth.append(d)
        refl.append([None] * n)
        lookup[_key(c)] = idx
        return idx

    for s in range(n):
        define(tuple(ring.one if t == s else ring.zero for t in range(n)), 1)
        refl[s][s] = NEG

    queue = deque(range(n))
    last_depth = 1
    while queue:
        i = queue.popleft()
        if depth[i] < last_depth:
            raise AssertionError("queue depth decreased")
        last_depth = depth[i]
        if finish_order is not None:
            finish_order.append(i)
        for s in range(n):
            if refl[i][s] is not None:
                continue
            cl = classify(sys, ring, coords[i], s, False, weights)
            if cl.kind == "fixed":
                refl[i][s] = i
            elif cl.kind == "plus":
                refl[i][s] = PLUS
            elif cl.kind == "descent":
                # descents are recorded when the lower root is finished
                raise AssertionError(f"unrecorded descent s={s} of root {i}")
            else:
                j = lookup.get(_key(cl.coords))
                if j is None:
                    j = define(cl.coords, depth[i] + 1)
                    queue.append(j)
                refl[i][s] = j
                refl[j][s] = i

    return make_table(n, refl, depth, descents_from_rows(refl, depth), coords, ring)
