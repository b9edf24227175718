"""Named Coxeter systems used by the demos and tests, and random matrices."""

from __future__ import annotations

import random
from typing import Sequence

from .core import INF, CoxeterSystem, coxeter_system


def _path(orders: Sequence) -> CoxeterSystem:
    """Linear diagram with the given link orders, all other pairs commuting."""
    n = len(orders) + 1
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i, m in enumerate(orders):
        rows[i][i + 1] = rows[i + 1][i] = m
    return coxeter_system(rows)


def dihedral(m) -> CoxeterSystem:
    return coxeter_system([[1, m], [m, 1]])


SYSTEMS: dict[str, CoxeterSystem] = {
    "A1": coxeter_system([[1]]),
    "A2": dihedral(3),
    "B2": dihedral(4),
    "I2(5)": dihedral(5),
    "G2": dihedral(6),
    "I2(7)": dihedral(7),
    "A1~": dihedral(INF),
    "A3": _path([3, 3]),
    "B3": _path([4, 3]),
    "H3": _path([5, 3]),
    "A4": _path([3, 3, 3]),
    "F4": _path([3, 4, 3]),
    "H4": _path([5, 3, 3]),
    "A2~": coxeter_system([[1, 3, 3], [3, 1, 3], [3, 3, 1]]),
    "B2~": _path([4, 4]),
    "G2~": _path([6, 3]),
    "fig1": coxeter_system([[1, 3, 4], [3, 1, 3], [4, 3, 1]]),
    "triangle(2,3,7)": coxeter_system([[1, 3, 2], [3, 1, 7], [2, 7, 1]]),
}

# number of positive roots of the finite groups above
POSITIVE_ROOTS = {"A1": 1, "A2": 3, "B2": 4, "I2(5)": 5, "G2": 6, "I2(7)": 7,
                  "A3": 6, "B3": 9, "H3": 15, "A4": 10, "F4": 24, "H4": 60}


def random_system(rank: int, orders: Sequence, rng: random.Random) -> CoxeterSystem:
    """Symmetric matrix with off-diagonal entries drawn uniformly from ``orders``."""
    rows = [[1] * rank for _ in range(rank)]
    for i in range(rank):
        for j in range(i + 1, rank):
            rows[i][j] = rows[j][i] = rng.choice(list(orders))
    return CoxeterSystem(tuple(tuple(r) for r in rows))
