"""Coxeter matrices: validation, parsing, and Coxeter-graph queries.

Generators are identified by their 0-based position in the matrix; that
order is the one used by every normal form downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class _Infinity:
    """Sentinel for an infinite Coxeter matrix entry."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


class CoxeterError(Exception):
    """Base class for errors raised by this package."""


class MatrixParseError(CoxeterError, ValueError):
    pass


class ResourceLimitError(CoxeterError):
    """A configured cap (number of roots, ball size) was exceeded."""


class BuildInvariantError(CoxeterError, RuntimeError):
    """A structural fact the table construction relies on did not hold."""


def is_finite(m) -> bool:
    return m is not INF


@dataclass(frozen=True)
class CoxeterSystem:
    """A Coxeter system given by its symmetric matrix of orders.

    ``m[i][j]`` is a positive int or :data:`INF`.
    """

    m: tuple[tuple, ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.m)
        object.__setattr__(self, "m", rows)
        n = len(rows)
        if n == 0:
            raise MatrixParseError("rank must be positive")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise MatrixParseError(f"row {i + 1}: expected {n} entries, got {len(row)}")
            for j, e in enumerate(row):
                if e is not INF and (not isinstance(e, int) or isinstance(e, bool)):
                    raise MatrixParseError(f"row {i + 1}, column {j + 1}: bad entry {e!r}")
                if i == j:
                    if e != 1:
                        raise MatrixParseError(f"row {i + 1}, column {j + 1}: diagonal entry must be 1")
                    continue
                if e is not INF and e < 2:
                    raise MatrixParseError(
                        f"row {i + 1}, column {j + 1}: off-diagonal entry must be >= 2, got {e}"
                    )
                if rows[j][i] != e:
                    raise MatrixParseError(f"row {i + 1}, column {j + 1}: matrix is not symmetric")

    @property
    def rank(self) -> int:
        return len(self.m)

    def order(self, s: int, t: int):
        return self.m[s][t]

    @cached_property
    def _neighbors(self) -> tuple[frozenset, ...]:
        n = self.rank
        return tuple(
            frozenset(t for t in range(n) if t != s and (self.m[s][t] is INF or self.m[s][t] >= 3))
            for s in range(n)
        )

    def neighbors(self, s: int) -> frozenset:
        return self._neighbors[s]

    def edges(self) -> list[tuple[int, int]]:
        return [(s, t) for s in range(self.rank) for t in self._neighbors[s] if s < t]

    def finite_orders(self) -> set[int]:
        return {e for i, row in enumerate(self.m) for j, e in enumerate(row) if i != j and e is not INF}

    def __str__(self) -> str:
        return serialize_system(self)


def coxeter_system(rows: Iterable[Sequence]) -> CoxeterSystem:
    """Build a system from nested rows; ``0``, ``None`` and ``math.inf`` mean infinity."""
    conv = []
    for row in rows:
        r = []
        for e in row:
            if e is None or e is INF or e == 0 or (isinstance(e, float) and math.isinf(e)):
                r.append(INF)
            else:
                r.append(int(e))
        conv.append(tuple(r))
    return CoxeterSystem(tuple(conv))


def neighbors(sys: CoxeterSystem, s: int) -> frozenset:
    """Generators linked to ``s`` in the Coxeter graph (order >= 3 or infinite)."""
    if not 0 <= s < sys.rank:
        raise IndexError(f"generator {s} out of range for rank {sys.rank}")
    return sys.neighbors(s)


def base_level(sys: CoxeterSystem) -> int:
    """Level L of the common coefficient ring: lcm of the finite orders above 2.

    Order 2 contributes c_2 = 0, which every ring contains, so it is left
    out.  A level of 1 is promoted to 3; both give the integers.
    """
    level = 1
    for e in sys.finite_orders() - {2}:
        level = level * e // math.gcd(level, e)
    return 3 if level == 1 else level


def _parse_token(tok: str, i: int, j: int):
    if tok.lower() in ("inf", "0"):
        return INF
    try:
        v = int(tok)
    except ValueError:
        raise MatrixParseError(f"row {i + 1}, column {j + 1}: malformed token {tok!r}") from None
    if v < 1:
        raise MatrixParseError(f"row {i + 1}, column {j + 1}: entry must be positive, got {v}")
    return v


def parse_system(text: str) -> CoxeterSystem:
    """Parse the matrix file format.

    Line 1 is the rank n, followed by n rows of n whitespace-separated
    tokens.  ``inf`` and ``0`` both denote an infinite order.  Lines
    starting with ``#`` are ignored.  A ``/`` may separate rows on one line.
    """
    lines = []
    for raw in text.replace("/", "\n").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line.split())
    if not lines:
        raise MatrixParseError("empty matrix file")
    if len(lines[0]) != 1:
        raise MatrixParseError("first line must contain the rank only")
    try:
        n = int(lines[0][0])
    except ValueError:
        raise MatrixParseError(f"malformed rank {lines[0][0]!r}") from None
    if n < 1:
        raise MatrixParseError("rank must be positive")
    body = lines[1:]
    if len(body) != n:
        raise MatrixParseError(f"expected {n} rows, found {len(body)}")
    rows = []
    for i, toks in enumerate(body):
        if len(toks) != n:
            raise MatrixParseError(f"row {i + 1}: expected {n} entries, got {len(toks)}")
        rows.append(tuple(_parse_token(tok, i, j) for j, tok in enumerate(toks)))
    return CoxeterSystem(tuple(rows))


def serialize_system(sys: CoxeterSystem) -> str:
    out = [str(sys.rank)]
    for row in sys.m:
        out.append(" ".join("inf" if e is INF else str(e) for e in row))
    return "\n".join(out) + "\n"
