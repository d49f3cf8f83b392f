"""Shared fixtures: named graphs and a small seeded random corpus."""

from __future__ import annotations

import pytest

from pmckit import cube, gnp, watermelon


@pytest.fixture(scope="session")
def cube_graph():
    return cube()


@pytest.fixture(scope="session")
def quick_corpus():
    """Small seeded gnp corpus for unit-level route comparisons."""
    out = []
    for n in range(4, 10):
        for prob in (0.2, 0.35, 0.5):
            for seed in range(3):
                out.append((f"gnp({n},{prob},{seed})", gnp(n, prob, seed)))
    out.append(("watermelon(2,3)", watermelon(2, 3)))
    out.append(("watermelon(3,3)", watermelon(3, 3)))
    return out
