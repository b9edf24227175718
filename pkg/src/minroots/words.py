"""Normal forms in the Coxeter group, driven by the minimal-root table.

A normal form is the reduced word that is lexicographically least when read
from the right: after each prefix, the last letter is the least generator
that shortens it.  Left multiplication by a generator scans the word once,
pushing a minimal root along with it, and either deletes one letter or
inserts one.  Letters are 0-based generator indices here; the CLI uses
1-based labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import CoxeterError, ResourceLimitError
from .table import NEG, PLUS, MinimalRootTable

DEFAULT_MAX_ELEMENTS = 2_000_000


class WordError(CoxeterError, ValueError):
    pass


@dataclass(frozen=True)
class Exchange:
    """Insert ``t`` after the first ``k`` letters."""

    k: int
    t: int


def _check_letters(table: MinimalRootTable, letters: Iterable[int]) -> list[int]:
    out = list(letters)
    for x in out:
        if not (isinstance(x, int) and 0 <= x < table.rank):
            raise WordError(f"letter {x!r} out of range 0..{table.rank - 1}")
    return out


def left_multiply_traced(table: MinimalRootTable, s: int, nf: Sequence[int]):
    """``left_multiply`` plus the final exchange record (None on deletion) and lookup count."""
    _check_letters(table, [s])
    gen, idx = table.simple_roots
    letters = list(nf)
    rec = Exchange(0, s)
    lam = idx[s]
    lookups = 0
    for i, si in enumerate(letters, start=1):
        lam = table.refl[lam][si]
        lookups += 1
        if lam == NEG:
            return letters[: i - 1] + letters[i:], None, lookups
        if lam == PLUS:
            break
        b = gen[lam]
        if b >= 0 and b < si:
            rec = Exchange(i, b)
    return letters[: rec.k] + [rec.t] + letters[rec.k:], rec, lookups


def left_multiply(table: MinimalRootTable, s: int, nf: Sequence[int]) -> list[int]:
    """Normal form of ``s * w`` given the normal form of ``w``."""
    return left_multiply_traced(table, s, nf)[0]


def normalize(table: MinimalRootTable, word: Sequence[int]) -> list[int]:
    nf: list[int] = []
    for x in reversed(_check_letters(table, word)):
        nf = left_multiply(table, x, nf)
    return nf


def multiply(table: MinimalRootTable, a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Normal form of ``a * b`` for normal forms ``a`` and ``b``."""
    nf = _check_letters(table, b)
    for x in reversed(_check_letters(table, a)):
        nf = left_multiply(table, x, nf)
    return nf


def inverse(table: MinimalRootTable, nf: Sequence[int]) -> list[int]:
    return normalize(table, list(reversed(nf)))


def length(table: MinimalRootTable, word: Sequence[int]) -> int:
    return len(normalize(table, word))


def left_descents(table: MinimalRootTable, nf: Sequence[int]) -> frozenset:
    n = len(nf)
    return frozenset(s for s in range(table.rank) if len(left_multiply(table, s, nf)) < n)


def growth(table: MinimalRootTable, maxlen: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> list[int]:
    """Number of group elements of each length 0..maxlen."""
    if maxlen < 0:
        raise ValueError("maxlen must be non-negative")
    layer = [[]]
    counts = [1]
    total = 1
    for _ in range(maxlen):
        nxt = []
        for nf in layer:
            for s in range(table.rank):
                cand = nf + [s]
                if normalize(table, cand) == cand:
                    nxt.append(cand)
        total += len(nxt)
        if total > max_elements:
            raise ResourceLimitError(f"more than {max_elements} group elements")
        counts.append(len(nxt))
        layer = nxt
    return counts


def parse_word(text: str, rank: int) -> list[int]:
    """Parse 1-based labels; digits may run together when the rank is at most 9."""
    text = text.strip()
    if not text:
        return []
    toks = text.replace(",", " ").split()
    if rank <= 9 and len(toks) == 1 and len(toks[0]) > 1:
        toks = list(toks[0])
    out = []
    for tok in toks:
        try:
            v = int(tok)
        except ValueError:
            raise WordError(f"bad letter {tok!r}") from None
        if not 1 <= v <= rank:
            raise WordError(f"letter {v} out of range 1..{rank}")
        out.append(v - 1)
    return out


def format_word(letters: Sequence[int]) -> str:
    return " ".join(str(x + 1) for x in letters)
