from __future__ import annotations

import pytest
from hypothesis import strategies as st

from dagwidth import Dag, dag_from_topological


def idx_dag(n: int, edges: list[tuple[int, int]]) -> Dag:
    """Build a Dag straight from forward index edges (u < v required)."""
    ins: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        ins[v].append(u)
    return dag_from_topological([f"v{i}" for i in range(n)], [tuple(sorted(set(a))) for a in ins])


# 1 -> 2, 1 -> 3, 2 -> 4, 3 -> 4 with ids shifted down by one
DIAMOND_EDGES = [(0, 1), (0, 2), (1, 3), (2, 3)]


@pytest.fixture
def diamond() -> Dag:
    return idx_dag(4, DIAMOND_EDGES)


@st.composite
def small_dags(draw, max_n: int = 8) -> Dag:
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if pairs:
        edges = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs)))
    else:
        edges = set()
    return idx_dag(n, sorted(edges))
