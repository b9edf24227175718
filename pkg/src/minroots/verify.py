"""Cross-checks between the two builders, the word engine and the oracle.

Each check yields one report line ``CHECK <name> PASS|FAIL <detail>``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .brink import BrinkBuilder
from .core import CoxeterSystem
from .invariants import check_single_multiple_link, table_invariants
from .naive import build_table_naive
from .oracle import CayleyBall, default_radius
from .table import MinimalRootTable, canonicalize, entry_str
from .words import left_multiply_traced


@dataclass
class Report:
    lines: list[str] = field(default_factory=list)
    passed: bool = True

    def add(self, name: str, problems: list[str], ok_detail: str = "") -> None:
        if problems:
            self.passed = False
            more = f" (+{len(problems) - 1} more)" if len(problems) > 1 else ""
            self.lines.append(f"CHECK {name} FAIL {problems[0]}{more}")
        else:
            self.lines.append(f"CHECK {name} PASS {ok_detail}".rstrip())

    def __str__(self) -> str:
        return "\n".join(self.lines)


def table_differences(expected: MinimalRootTable, found: MinimalRootTable) -> list[str]:
    """Entry-by-entry comparison of two canonical tables."""
    if expected.N != found.N:
        return [f"root count: expected {expected.N}, found {found.N}"]
    out = []
    for i in range(expected.N):
        if expected.depth[i] != found.depth[i]:
            out.append(f"root {i}: depth expected {expected.depth[i]}, found {found.depth[i]}")
        if expected.coords is not None and found.coords is not None and expected.coords[i] != found.coords[i]:
            out.append(f"root {i}: coordinates differ")
        for s in range(expected.rank):
            a, b = expected.refl[i][s], found.refl[i][s]
            if a != b:
                out.append(f"s={s}, root {i}: expected {entry_str(a)}, found {entry_str(b)}")
    return out


def word_problems(table: MinimalRootTable, ball: CayleyBall) -> tuple[list[str], list[str]]:
    """Compare every left multiplication on the ball with the oracle; also count lookups."""
    bad, slow = [], []
    for i in range(len(ball)):
        nf = list(ball.normal_form(i))
        for s in range(table.rank):
            got, _, lookups = left_multiply_traced(table, s, nf)
            want = list(ball.left_neighbor(s, i))
            if got != want:
                bad.append(f"s={s}, w={nf}: expected {want}, found {got}")
            if lookups > len(nf):
                slow.append(f"s={s}, w={nf}: {lookups} lookups")
    return bad, slow


def cross_check(sys: CoxeterSystem, maxlen: Optional[int] = None, table: Optional[MinimalRootTable] = None) -> Report:
    """Run every check; ``table`` replaces the production build (for fault injection)."""
    rep = Report()
    maxlen = default_radius(sys) if maxlen is None else maxlen
    ref = canonicalize(build_table_naive(sys))
    builder = None
    if table is None:
        builder = BrinkBuilder(sys).run()
        table = builder.table()
    cand = canonicalize(table)
    rep.add("builders-agree", table_differences(ref, cand), f"N={ref.N}")
    for name, probs in table_invariants(sys, cand).items():
        rep.add(name, probs)
    if builder is not None:
        rep.add("provenance", builder.verify_provenance(), str(dict(sorted(builder.census.items()))))
        rep.add("decomposition", builder.decomposition_problems())
        sups = [(r.index, r.support) for r in builder.records if r.indecomposable]
        rep.add("single-multiple-link", check_single_multiple_link(sys, sups))
    ball = CayleyBall(sys, maxlen)
    bad, slow = word_problems(cand, ball)
    rep.add("left-multiply", bad, f"{len(ball)} elements")
    rep.add("linear-scan", slow)
    return rep
