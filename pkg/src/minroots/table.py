"""The minimal-root reflection table.

Entries are plain ints: a non-negative value is the index of a minimal
root, :data:`NEG` marks ``s alpha_s`` (negative) and :data:`PLUS` a positive
root that is not minimal.  Rows are stored per root, ``refl[i][s]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property, cmp_to_key
from typing import Optional, Sequence

from .cyclo import BaseRing, RingElem, get_ring, parse_elem, sign

NEG = -1
PLUS = -2

FORMAT_VERSION = 1


class TableFormatError(ValueError):
    pass


def entry_str(e: int) -> str:
    if e == NEG:
        return "-"
    if e == PLUS:
        return "+"
    return str(e)


@dataclass(frozen=True)
class MinimalRootTable:
    rank: int
    refl: tuple[tuple[int, ...], ...]
    depth: tuple[int, ...]
    descents: tuple[int, ...]
    coords: Optional[tuple[tuple[RingElem, ...], ...]] = None
    ring: Optional[BaseRing] = field(default=None, compare=False)

    @property
    def N(self) -> int:
        return len(self.refl)

    def __len__(self) -> int:
        return len(self.refl)

    def entry(self, s: int, i: int) -> int:
        """The |S| x N view: image of root ``i`` under generator ``s``."""
        return self.refl[i][s]

    def descent_set(self, i: int) -> frozenset:
        b = self.descents[i]
        return frozenset(s for s in range(self.rank) if b >> s & 1)

    @cached_property
    def simple_roots(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(generator of each root or -1 if not simple, root index of each alpha_s)."""
        gen = [-1] * self.N
        idx = [-1] * self.rank
        for i, row in enumerate(self.refl):
            for s, e in enumerate(row):
                if e == NEG:
                    gen[i] = s
                    idx[s] = i
        return tuple(gen), tuple(idx)

    def simple_index(self, s: int) -> int:
        i = self.simple_roots[1][s]
        if i < 0:
            raise KeyError(s)
        return i

    def without_coords(self) -> "MinimalRootTable":
        return replace(self, coords=None, ring=None)


def make_table(rank, refl, depth, descents, coords=None, ring=None) -> MinimalRootTable:
    return MinimalRootTable(
        rank,
        tuple(tuple(r) for r in refl),
        tuple(depth),
        tuple(descents),
        None if coords is None else tuple(tuple(c) for c in coords),
        ring,
    )


def descents_from_rows(refl, depth) -> list[int]:
    out = []
    for i, row in enumerate(refl):
        b = 0
        for s, e in enumerate(row):
            if e == NEG or (e >= 0 and depth[e] < depth[i]):
                b |= 1 << s
        out.append(b)
    return out


def _compare_coords(a: Sequence[RingElem], b: Sequence[RingElem]) -> int:
    for x, y in zip(a, b):
        if x != y:
            return sign(x - y)
    return 0


def canonicalize(table: MinimalRootTable) -> MinimalRootTable:
    """Reindex roots by depth, then by coordinates in generator order, larger first.

    Larger-first puts simple root ``alpha_s`` at index ``s``.
    """
    if table.coords is None:
        raise ValueError("canonicalize needs root coordinates")

    def cmp(i, j):
        if table.depth[i] != table.depth[j]:
            return -1 if table.depth[i] < table.depth[j] else 1
        return _compare_coords(table.coords[j], table.coords[i])

    order = sorted(range(table.N), key=cmp_to_key(cmp))
    new_of = {old: new for new, old in enumerate(order)}

    def remap(e):
        return new_of[e] if e >= 0 else e

    return make_table(
        table.rank,
        [[remap(e) for e in table.refl[old]] for old in order],
        [table.depth[old] for old in order],
        [table.descents[old] for old in order],
        [table.coords[old] for old in order],
        table.ring,
    )


def serialize(table: MinimalRootTable) -> str:
    lines = [f"minroots {FORMAT_VERSION}", f"rank {table.rank}", f"count {table.N}"]
    for i in range(table.N):
        coeffs = "|".join(c.render() for c in table.coords[i]) if table.coords is not None else ""
        lines.append(f"root {i} depth {table.depth[i]} descents {table.descents[i]:x} coeffs {coeffs}")
    for i, row in enumerate(table.refl):
        lines.append(f"refl {i} " + " ".join(entry_str(e) for e in row))
    return "\n".join(lines) + "\n"


def _parse_entry(tok: str, n: int, lineno: int) -> int:
    if tok == "-":
        return NEG
    if tok == "+":
        return PLUS
    try:
        v = int(tok)
    except ValueError:
        raise TableFormatError(f"line {lineno}: bad entry {tok!r}") from None
    if not 0 <= v < n:
        raise TableFormatError(f"line {lineno}: root index {v} out of range 0..{n - 1}")
    return v


def deserialize(text: str, ring: BaseRing | None = None) -> MinimalRootTable:
    """Parse a v1 table file.  Coordinates go into ``ring``, or the ring named
    by the first ``poly`` rendering, or the integers."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != f"minroots {FORMAT_VERSION}":
        raise TableFormatError(f"expected header 'minroots {FORMAT_VERSION}'")
    try:
        key, val = lines[1].split()
        assert key == "rank"
        rank = int(val)
        key, val = lines[2].split()
        assert key == "count"
        n = int(val)
    except (AssertionError, ValueError, IndexError):
        raise TableFormatError("expected 'rank n' and 'count N' lines") from None
    body = lines[3:]
    if len(body) != 2 * n:
        raise TableFormatError(f"count {n} needs {2 * n} root/refl lines, found {len(body)}")
    if ring is None:
        levels = [int(tok[4:].split(":")[0]) for ln in body[:n] for tok in ln.replace("|", " ").split() if tok.startswith("poly")]
        ring = get_ring(max(levels)) if levels else get_ring(3)
    depth, descents, coords = [], [], []
    have_coords = True
    for i, ln in enumerate(body[:n]):
        parts = ln.split()
        if len(parts) < 6 or parts[0] != "root" or parts[2] != "depth" or parts[4] != "descents":
            raise TableFormatError(f"line {i + 4}: malformed root line")
        if int(parts[1]) != i:
            raise TableFormatError(f"line {i + 4}: root index {parts[1]} out of order")
        depth.append(int(parts[3]))
        descents.append(int(parts[5], 16))
        if len(parts) == 8 and parts[6] == "coeffs":
            cs = [parse_elem(tok, ring) for tok in parts[7].split("|")]
            if len(cs) != rank:
                raise TableFormatError(f"line {i + 4}: expected {rank} coefficients")
            coords.append(tuple(cs))
        elif len(parts) == 7 and parts[6] == "coeffs":
            have_coords = False
        else:
            raise TableFormatError(f"line {i + 4}: malformed coefficient field")
    refl = []
    for i, ln in enumerate(body[n:]):
        parts = ln.split()
        lineno = n + i + 4
        if parts[0] != "refl" or int(parts[1]) != i:
            raise TableFormatError(f"line {lineno}: malformed refl line")
        if len(parts) != rank + 2:
            raise TableFormatError(f"line {lineno}: expected {rank} entries")
        refl.append([_parse_entry(tok, n, lineno) for tok in parts[2:]])
    return make_table(rank, refl, depth, descents, coords if have_coords else None, ring if have_coords else None)
