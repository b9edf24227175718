"""Acceptance criteria, one test per criterion.

Each test records a line ``ACCEPTANCE <n> PASS|FAIL <summary>``; the lines
are printed at the end of the pytest run (see conftest) and also when this
file is executed directly.
"""

from __future__ import annotations

import time

import pytest

from minroots.brink import BrinkBuilder, build_table
from minroots.catalog import SYSTEMS, random_system
from minroots.core import INF
from minroots.cyclo import sign
from minroots.dihedral import coeff_C, coeff_C_closed
from minroots.invariants import check_single_multiple_link, table_invariants
from minroots.naive import build_table_naive
from minroots.oracle import CayleyBall, default_radius, root_closure
from minroots.table import PLUS, canonicalize, serialize
from minroots.verify import word_problems

from conftest import random_rank4

RESULTS: dict[int, str] = {}

NAMED = ["A1~", "A2~", "B2~", "fig1", "triangle(2,3,7)", "G2~", "A2", "B2", "G2", "I2(7)", "A3", "B3", "H3", "F4"]


def corpus():
    out = [(name, SYSTEMS[name]) for name in NAMED]
    out += [(f"random4-{k}", s) for k, s in enumerate(random_rank4(50))]
    return out


def record(n: int, ok: bool, summary: str) -> None:
    RESULTS[n] = f"ACCEPTANCE {n} {'PASS' if ok else 'FAIL'} {summary}"
    print(RESULTS[n])


def test_criterion_1_figure_one():
    sys = SYSTEMS["fig1"]
    t0 = time.perf_counter()
    a = build_table_naive(sys)
    b = build_table(sys)
    same = canonicalize(a) == canonicalize(b)
    dt = time.perf_counter() - t0
    ok = a.N == 7 and b.N == 7 and same and dt < 1.0
    record(1, ok, f"Figure-1 group: naive N={a.N}, brink N={b.N}, canonical tables equal={same}, {dt:.3f} s (< 1 s)")
    assert ok


def test_criterion_2_finite_counts():
    want = {"A2": 3, "B2": 4, "G2": 6, "I2(7)": 7, "A3": 6, "B3": 9, "H3": 15}
    t0 = time.perf_counter()
    bad = []
    for name, n in want.items():
        sys = SYSTEMS[name]
        closure = len(root_closure(sys, 2 * n + 2))  # brute force first
        naive, brink = build_table_naive(sys).N, build_table(sys).N
        if not closure == naive == brink == n:
            bad.append(f"{name}: closure {closure}, naive {naive}, brink {brink}, expected {n}")
    dt = time.perf_counter() - t0
    ok = not bad and dt < 5.0
    record(2, ok, f"finite groups {sorted(want)}: {'; '.join(bad) or 'all counts match closure'}, {dt:.2f} s (< 5 s)")
    assert ok


def test_criterion_3_infinite_dihedral():
    t = canonicalize(build_table(SYSTEMS["A1~"]))
    n = canonicalize(build_table_naive(SYSTEMS["A1~"]))
    ok = t.N == 2 and t.refl[0][1] == PLUS and t.refl[1][0] == PLUS and n == t
    record(3, ok, f"infinite dihedral: N={t.N}, cross entries {t.refl[0][1]}, {t.refl[1][0]} (PLUS={PLUS})")
    assert ok


def test_criterion_4_cross_builder():
    t0 = time.perf_counter()
    bad = []
    systems = corpus()
    for name, sys in systems:
        a = serialize(canonicalize(build_table_naive(sys)))
        b = serialize(canonicalize(build_table(sys)))
        if a != b:
            bad.append(name)
    dt = time.perf_counter() - t0
    ok = not bad and dt < 60.0
    record(4, ok, f"{len(systems)} matrices byte-identical: {not bad} {bad[:3]}, {dt:.1f} s (< 60 s)")
    assert ok


def _ball_runs():
    for name, sys in corpus():
        if sys.rank > 5:
            continue
        yield name, sys, default_radius(sys)


def test_criterion_5_and_6_multiplication():
    bad5, bad6, slowest = [], [], 0.0
    total = 0
    for name, sys, radius in _ball_runs():
        t0 = time.perf_counter()
        ball = CayleyBall(sys, radius)
        wrong, slow = word_problems(build_table(sys), ball)
        dt = time.perf_counter() - t0
        slowest = max(slowest, dt)
        total += len(ball) * sys.rank
        if wrong or dt >= 60.0:
            bad5.append(f"{name}: {wrong[:1]} {dt:.1f}s")
        if slow:
            bad6.append(f"{name}: {slow[0]}")
    ok5 = not bad5
    ok6 = not bad6
    record(5, ok5, f"{total} products s*NF(w) against the oracle: {'; '.join(bad5) or 'all equal'}, slowest group {slowest:.2f} s (< 60 s)")
    record(6, ok6, f"lookups <= |w| on all {total} calls: {'; '.join(bad6) or 'holds'}")
    assert ok5 and ok6


def test_criterion_7_invariants():
    bad = []
    for name, sys in corpus():
        b = BrinkBuilder(sys).run()
        t = canonicalize(b.table())
        for check, problems in table_invariants(sys, t).items():
            if problems:
                bad.append(f"{name}/{check}: {problems[0]}")
        sups = [(r.index, r.support) for r in b.records if r.indecomposable]
        for p in check_single_multiple_link(sys, sups):
            bad.append(f"{name}/single-multiple-link: {p}")
    ok = not bad
    record(7, ok, f"invariant suites on {len(corpus())} tables: {'; '.join(bad[:3]) or 'all hold'}")
    assert ok


def test_criterion_8_dihedral():
    recurrence_bad, mono_bad = [], []
    for m in range(2, 31):
        for n in range(0, m + 1):
            if coeff_C(n, m) != coeff_C_closed(n, m):
                recurrence_bad.append((m, n))
        for n in range(1, m + 1):
            # as stated: C_n - C_{n-1} > 0 exactly when n < m/2
            if (sign(coeff_C(n, m) - coeff_C(n - 1, m)) > 0) != (2 * n < m):
                mono_bad.append((m, n))
    ok = not recurrence_bad and not mono_bad
    record(8, ok, f"closed form = recurrence for m <= 30: {not recurrence_bad}; "
                  f"monotonicity iff n < m/2: {not mono_bad}, first counterexamples (m, n) {mono_bad[:4]}")
    assert ok


def test_criterion_9_rank_eight_budget():
    import random

    rng = random.Random(8)
    times, counts = [], []
    for _ in range(10):
        sys = random_system(8, [2, 3, 4, 5], rng)
        t0 = time.perf_counter()
        counts.append(build_table(sys).N)
        times.append(time.perf_counter() - t0)
    ok = max(times) < 10.0
    record(9, ok, f"10 random rank-8 {{2,3,4,5}} builds: N in [{min(counts)}, {max(counts)}], slowest {max(times):.2f} s (< 10 s)")
    assert ok


if __name__ == "__main__":
    for fn in [v for k, v in sorted(globals().items()) if k.startswith("test_criterion")]:
        try:
            fn()
        except AssertionError:
            pass
    print("\n".join(RESULTS[k] for k in sorted(RESULTS)))
