"""Minimal roots, reflection tables and normal forms for Coxeter groups."""

from .brink import BrinkBuilder, build_table
from .core import (
    INF,
    BuildInvariantError,
    CoxeterError,
    CoxeterSystem,
    MatrixParseError,
    ResourceLimitError,
    base_level,
    coxeter_system,
    parse_system,
    serialize_system,
)
from .cyclo import RingOverflowError, embed, get_ring, lift, sign
from .naive import build_table_naive
from .table import NEG, PLUS, MinimalRootTable, canonicalize, deserialize, serialize
from .words import growth, left_descents, left_multiply, length, multiply, normalize

__all__ = [
    "INF", "NEG", "PLUS",
    "BrinkBuilder", "BuildInvariantError", "CoxeterError", "CoxeterSystem", "MatrixParseError",
    "MinimalRootTable", "ResourceLimitError", "RingOverflowError",
    "base_level", "build_table", "build_table_naive", "canonicalize", "coxeter_system",
    "deserialize", "embed", "get_ring", "growth", "left_descents", "left_multiply", "length",
    "lift", "multiply", "normalize", "parse_system", "serialize", "serialize_system", "sign",
]
