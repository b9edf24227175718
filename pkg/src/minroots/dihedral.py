"""Closed-form root systems of rank-2 (dihedral) Coxeter groups.

For an edge s, t of order m write alpha, beta for the simple roots and
c = 2cos(pi/m).  The numbers C_n satisfy C_0 = 0, C_1 = 1 and
C_{n+2} = c C_{n+1} - C_n.  For finite m the positive roots are
C_{k+1} alpha + C_k beta for k = 0..m-1, so k = 0 is alpha and k = m-1 is
beta.  Reflections act on this index by

    s: k -> m - k          t: k -> m - k - 2

with results outside 0..m-1 meaning the root went negative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import INF
from .cyclo import RingElem, chebyshev_D, get_ring
from .table import NEG, PLUS

__all__ = ["DihedralRoot", "coeff_C", "coeff_C_closed", "dihedral_system", "dihedral_depth"]


def _ring_for(m):
    return get_ring(3) if m is INF else get_ring(m)


def coeff_C(n: int, m, ring=None) -> RingElem:
    """C_n by the recurrence, in the level-m ring (integers for m infinite)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if m is not INF and n > m:
        raise ValueError(f"n={n} exceeds m={m}")
    ring = ring or _ring_for(m)
    c = ring.weight(m)
    prev, cur = ring.zero, ring.one
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, c * cur - prev
    return cur


def coeff_C_closed(n: int, m: int) -> RingElem:
    """C_n as z^{n-1} + z^{n-3} + ... + z^{-(n-1)}, paired into D-polynomials."""
    ring = get_ring(m)
    out = ring.zero
    k = n - 1
    while k > 0:
        out = out + ring.from_coeffs(chebyshev_D(k))
        k -= 2
    if k == 0:
        out = out + 1
    return out


def dihedral_depth(k: int, m: int) -> int:
    return 1 + min(k, m - 1 - k)


@dataclass(frozen=True)
class DihedralRoot:
    """One positive root of the rank-2 system on the edge (s, t) of order m.

    ``k`` is the position in the list C_{k+1} alpha_s + C_k alpha_t.
    ``s_image`` and ``t_image`` are positions too, or NEG / PLUS.
    """

    edge: tuple
    k: int
    depth: int
    coeffs: tuple[RingElem, RingElem]
    s_image: int
    t_image: int
    minimal: bool = True

    @property
    def side(self) -> int:
        """Generator whose simple root starts the shortest orbit word."""
        s, t, m = self.edge
        if m is INF:
            return s if self.k == 0 else t
        return s if self.k <= m - 1 - self.k else t

    @property
    def enqueue(self) -> bool:
        # depth >= 4 roots are finished at definition and never queued
        return self.depth <= 3


def dihedral_system(s: int, t: int, m) -> list[DihedralRoot]:
    """All positive roots of the edge, or just the two minimal ones when m is infinite."""
    if m is not INF and m < 2:
        raise ValueError("m must be at least 2")
    ring = _ring_for(m)
    edge = (s, t, m)
    if m is INF:
        return [
            DihedralRoot(edge, 0, 1, (ring.one, ring.zero), NEG, PLUS),
            DihedralRoot(edge, 1, 1, (ring.zero, ring.one), PLUS, NEG),
        ]
    C = [coeff_C(n, m, ring) for n in range(m + 1)]
    out = []
    for k in range(m):
        si = m - k
        ti = m - k - 2
        out.append(
            DihedralRoot(
                edge,
                k,
                dihedral_depth(k, m),
                (C[k + 1], C[k]),
                si if 0 <= si < m else NEG,
                ti if 0 <= ti < m else NEG,
            )
        )
    return out
