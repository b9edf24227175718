"""Brute-force reference computations in the standard realization.

Nothing here uses a reflection table.  Group elements are tracked through
exact matrices over the common coefficient ring, and normal forms come from
plain breadth-first search of the Cayley graph.  This module must not import
either table builder.
"""

from __future__ import annotations

from collections import deque
from typing import Optional

from .core import CoxeterSystem, ResourceLimitError, base_level
from .cyclo import BaseRing, RingElem, get_ring, sign

DEFAULT_MAX_ELEMENTS = 500_000


def default_radius(sys: CoxeterSystem) -> int:
    return 10 if sys.rank <= 3 else 6


def _weights(sys: CoxeterSystem, ring: BaseRing):
    return [[ring.zero if s == t or sys.m[s][t] == 2 else ring.weight(sys.m[s][t]) for t in range(sys.rank)]
            for s in range(sys.rank)]


def realization_matrices(sys: CoxeterSystem, ring: BaseRing | None = None) -> list[list[list[RingElem]]]:
    """Matrix of each generator in the basis of simple roots.

    ``s(alpha_t) = alpha_t + w_st alpha_s`` with ``w_st = -2 alpha_s . alpha_t``,
    so column t of ``M_s`` is the identity column plus ``w_st`` in row s.
    """
    ring = ring or get_ring(base_level(sys))
    w = _weights(sys, ring)
    n = sys.rank
    out = []
    for s in range(n):
        M = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
        for t in range(n):
            M[s][t] = -ring.one if t == s else w[s][t]
        out.append(M)
    return out


def mat_mul(A, B):
    n = len(A)
    ring = A[0][0].ring
    return [[sum((A[i][k] * B[k][j] for k in range(n) if A[i][k] and B[k][j]), ring.zero) for j in range(n)]
            for i in range(n)]


def identity(n: int, ring: BaseRing):
    return [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]


def apply(M, v):
    ring = M[0][0].ring
    return tuple(sum((M[i][k] * v[k] for k in range(len(v)) if v[k]), ring.zero) for i in range(len(M)))


class CayleyBall:
    """Elements of length at most ``radius`` with their normal forms.

    Each element ``w`` is stored by the row vector ``v_j = rho(w alpha_j)``
    where ``rho`` sums coordinates.  Since ``rho`` is positive on every simple
    root it lies inside the fundamental chamber, whose stabilizer is trivial,
    so the vector determines ``w``.  It updates cheaply under right
    multiplication:
    ``ws`` changes entry s to ``-v_s`` and entry j to ``v_j + w_sj v_s``.
    ``w s`` is shorter than ``w`` exactly when ``w alpha_s`` is negative,
    which is the sign of ``v_s``.
    """

    def __init__(self, sys: CoxeterSystem, radius: int, max_elements: int = DEFAULT_MAX_ELEMENTS,
                 ring: BaseRing | None = None):
        self.sys = sys
        self.radius = radius
        self.ring = ring or get_ring(base_level(sys))
        self._w = _weights(sys, self.ring)
        n = sys.rank
        start = tuple(self.ring.one for _ in range(n))
        self.vectors: list[tuple] = [start]
        self.lengths: list[int] = [0]
        self.index: dict = {self._key(start): 0}
        self.edges: list[list[Optional[int]]] = [[None] * n]
        q = deque([0])
        while q:
            i = q.popleft()
            if self.lengths[i] == radius:
                continue
            v = self.vectors[i]
            for s in range(n):
                if self.edges[i][s] is not None:
                    continue
                u = self.right(v, s)
                k = self._key(u)
                j = self.index.get(k)
                if j is None:
                    if len(self.vectors) >= max_elements:
                        raise ResourceLimitError(f"Cayley ball exceeds {max_elements} elements")
                    j = len(self.vectors)
                    self.vectors.append(u)
                    self.lengths.append(self.lengths[i] + 1)
                    self.index[k] = j
                    self.edges.append([None] * n)
                    q.append(j)
                self.edges[i][s] = j
                self.edges[j][s] = i
        self._nf: dict[int, tuple] = {0: ()}
        for i in range(len(self.vectors)):
            self.normal_form(i)

    @staticmethod
    def _key(v):
        return tuple(x.c for x in v)

    def right(self, v, s):
        vs = v[s]
        w = self._w[s]
        return tuple(-vs if j == s else (v[j] + w[j] * vs if w[j] else v[j]) for j in range(len(v)))

    def __len__(self) -> int:
        return len(self.vectors)

    def descends(self, i: int, s: int) -> bool:
        """Whether l(w s) < l(w)."""
        return sign(self.vectors[i][s]) < 0

    def normal_form(self, i: int) -> tuple:
        nf = self._nf.get(i)
        if nf is not None:
            return nf
        chain = []
        j = i
        while j not in self._nf:
            s = next(s for s in range(self.sys.rank) if self.descends(j, s))
            nxt = self.edges[j][s]
            if nxt is None or self.lengths[nxt] != self.lengths[j] - 1:
                raise AssertionError("descent does not shorten inside the ball")
            chain.append((j, s))
            j = nxt
        for j2, s in reversed(chain):
            self._nf[j2] = self._nf[self.edges[j2][s]] + (s,)
        out = self._nf[i]
        if len(out) != self.lengths[i]:
            raise AssertionError("normal form length differs from BFS distance")
        return out

    def element_of_word(self, word) -> tuple:
        v = tuple(self.ring.one for _ in range(self.sys.rank))
        for s in word:
            v = self.right(v, s)
        return v

    def normal_form_of_word(self, word) -> tuple:
        """Normal form of any word, by peeling least descents (works outside the ball)."""
        v = self.element_of_word(word)
        out = []
        while True:
            s = next((s for s in range(self.sys.rank) if sign(v[s]) < 0), None)
            if s is None:
                break
            out.append(s)
            v = self.right(v, s)
        return tuple(reversed(out))

    def left_neighbor(self, s: int, i: int) -> tuple:
        """Normal form of ``s w`` for element ``i``."""
        return self.normal_form_of_word((s,) + self.normal_form(i))

    def sizes(self) -> list[int]:
        counts = [0] * (self.radius + 1)
        for d in self.lengths:
            counts[d] += 1
        return counts


def cayley_normal_forms(sys: CoxeterSystem, maxlen: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> dict:
    """Map each element of the ball (by exact vector key) to its normal form."""
    ball = CayleyBall(sys, maxlen, max_elements)
    return {ball._key(v): ball.normal_form(i) for i, v in enumerate(ball.vectors)}


def root_closure(sys: CoxeterSystem, max_depth: int, ring: BaseRing | None = None) -> dict[tuple, int]:
    """Positive roots of depth at most ``max_depth`` with their depths.

    Depth of a positive root is the least number of simple reflections
    needed to reach it from a simple root, plus one.
    """
    ring = ring or get_ring(base_level(sys))
    n = sys.rank
    M = realization_matrices(sys, ring)
    start = [tuple(ring.one if j == s else ring.zero for j in range(n)) for s in range(n)]
    depth = {tuple(x.c for x in v): 1 for v in start}
    layer = start
    for d in range(2, max_depth + 1):
        nxt = []
        for v in layer:
            for s in range(n):
                u = apply(M[s], v)
                if any(sign(x) < 0 for x in u):
                    continue
                k = tuple(x.c for x in u)
                if k not in depth:
                    depth[k] = d
                    nxt.append(u)
        layer = nxt
    return depth

