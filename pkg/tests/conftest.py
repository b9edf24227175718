from __future__ import annotations

import random

import pytest

from minroots.catalog import SYSTEMS, random_system
from minroots.core import INF

# the cross-builder corpus: named systems plus seeded random rank-4 matrices
CORPUS_NAMES = ["A1", "A2", "B2", "G2", "I2(7)", "A1~", "A3", "B3", "H3", "F4",
                "A2~", "B2~", "G2~", "fig1", "triangle(2,3,7)"]


def random_rank4(count: int, seed: int = 2024):
    rng = random.Random(seed)
    return [random_system(4, [2, 3, 4, 5, INF], rng) for _ in range(count)]


@pytest.fixture(params=CORPUS_NAMES)
def named_system(request):
    return request.param, SYSTEMS[request.param]


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
