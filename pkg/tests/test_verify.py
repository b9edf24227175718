from __future__ import annotations

from minroots.brink import build_table
from minroots.catalog import SYSTEMS
from minroots.table import PLUS, make_table
from minroots.verify import cross_check


def test_a2_passes():
    rep = cross_check(SYSTEMS["A2"], 3)
    assert rep.passed
    assert all(ln.startswith("CHECK ") and " PASS" in ln for ln in rep.lines)


def test_figure_one_passes():
    rep = cross_check(SYSTEMS["fig1"], 8)
    assert rep.passed
    assert "CHECK builders-agree PASS N=7" in rep.lines


def test_corrupted_entry_is_named():
    sys = SYSTEMS["fig1"]
    t = build_table(sys)
    i = next(i for i, row in enumerate(t.refl) if any(e >= 0 and e != i for e in row) and t.depth[i] == 2)
    s = next(s for s, e in enumerate(t.refl[i]) if e == i or (e >= 0 and t.depth[e] > t.depth[i]) or e == PLUS)
    refl = [list(r) for r in t.refl]
    refl[i][s] = PLUS if refl[i][s] != PLUS else i
    bad = make_table(t.rank, refl, t.depth, t.descents, t.coords, t.ring)
    rep = cross_check(sys, 4, table=bad)
    assert not rep.passed
    line = next(ln for ln in rep.lines if ln.startswith("CHECK builders-agree"))
    assert "FAIL s=" in line and "expected" in line and "found" in line
