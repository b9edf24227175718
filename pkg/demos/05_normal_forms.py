"""
Normal forms and growth series
==============================

With a table in hand, left multiplication by a generator is a single scan
of the word.  This solves the word problem and enumerates elements by
length.
"""

from __future__ import annotations

from minroots import build_table, growth, multiply, normalize
from minroots.catalog import SYSTEMS
from minroots.words import format_word, left_multiply_traced

t = build_table(SYSTEMS["triangle(2,3,7)"])
word = [0, 1, 2, 1, 0, 2, 2, 1, 0, 1]
nf = normalize(t, word)
print("word       ", format_word(word))
print("normal form", format_word(nf))

w = multiply(t, nf, list(reversed(nf)))
print("w * w^-1 ->", format_word(w) or "(identity)")

new, rec, lookups = left_multiply_traced(t, 2, nf)
print(f"s3 * w = {format_word(new)}  ({lookups} table lookups, exchange {rec})")

print()
for name in ("A3", "H3", "A2~", "triangle(2,3,7)"):
    print(f"{name:16s}", growth(build_table(SYSTEMS[name]), 8))
