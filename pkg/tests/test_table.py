from __future__ import annotations

import pytest

from minroots.brink import build_table
from minroots.catalog import SYSTEMS
from minroots.naive import build_table_naive
from minroots.table import (
    NEG,
    PLUS,
    TableFormatError,
    canonicalize,
    deserialize,
    make_table,
    serialize,
)


def test_a2_canonical_order_puts_simples_first():
    t = canonicalize(build_table_naive(SYSTEMS["A2"]))
    assert [tuple(int(x) for x in c) for c in t.coords] == [(1, 0), (0, 1), (1, 1)]
    assert t.refl == ((NEG, 2), (2, NEG), (1, 0))
    assert t.simple_index(0) == 0 and t.simple_index(1) == 1


def test_canonicalize_ignores_discovery_order():
    t = build_table_naive(SYSTEMS["A2"])
    # swap the two simple roots by hand
    perm = [1, 0, 2]
    inv = {old: new for new, old in enumerate(perm)}
    shuffled = make_table(
        2,
        [[inv[e] if e >= 0 else e for e in t.refl[old]] for old in perm],
        [t.depth[o] for o in perm],
        [t.descents[o] for o in perm],
        [t.coords[o] for o in perm],
        t.ring,
    )
    assert canonicalize(shuffled) == canonicalize(t)


@pytest.mark.parametrize("name", ["A2", "fig1", "H3", "A2~", "triangle(2,3,7)"])
def test_canonicalize_is_idempotent(name):
    t = canonicalize(build_table(SYSTEMS[name]))
    assert canonicalize(t) == t


@pytest.mark.parametrize("name", ["A2", "fig1", "A1~", "B2~", "I2(7)"])
def test_roundtrip(name):
    t = canonicalize(build_table(SYSTEMS[name]))
    text = serialize(t)
    back = deserialize(text)
    assert back == t
    assert serialize(back) == text


def test_figure_one_file_has_seven_roots():
    text = serialize(canonicalize(build_table(SYSTEMS["fig1"])))
    assert "count 7" in text.splitlines()[2]
    assert sum(1 for ln in text.splitlines() if ln.startswith("root ")) == 7


def test_infinite_dihedral_serialization():
    text = serialize(canonicalize(build_table(SYSTEMS["A1~"])))
    assert "refl 0 - +" in text and "refl 1 + -" in text


def test_without_coordinates_roundtrip():
    t = canonicalize(build_table(SYSTEMS["A3"])).without_coords()
    assert deserialize(serialize(t)) == t


@pytest.mark.parametrize(
    "mutate, needle",
    [
        (lambda ls: ["minroots 2"] + ls[1:], "header"),
        (lambda ls: ls[:2] + ["count 4"] + ls[3:], "count"),
        (lambda ls: ls[:-1] + [ls[-1].rsplit(" ", 1)[0] + " 9"], "out of range"),
        (lambda ls: ls[:-1] + [ls[-1] + " 1"], "entries"),
        (lambda ls: ls[:-1] + [ls[-1].rsplit(" ", 1)[0] + " ?"], "bad entry"),
    ],
)
def test_deserialize_rejects_bad_files(mutate, needle):
    lines = serialize(canonicalize(build_table(SYSTEMS["A2"]))).splitlines()
    with pytest.raises(TableFormatError) as ei:
        deserialize("\n".join(mutate(lines)))
    assert needle in str(ei.value)


def test_descent_set_view():
    t = canonicalize(build_table(SYSTEMS["A2"]))
    assert t.descent_set(2) == {0, 1}
    assert t.entry(0, 1) == 2
    assert PLUS not in {e for row in t.refl for e in row}
